// Copyright 2026 The certkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "corpus/types.hpp"

namespace certkit::extraction {

// Splits after '.', '?' or '!' when followed by whitespace and then an
// uppercase letter, a quote or a digit. A period that completes one of the
// `abbreviations` ("Dr.", "et al.") never splits. The returned spans are
// contiguous and cover the whole input; trailing whitespace belongs to the
// sentence it follows.
std::vector<corpus::CharSpan> split_sentences(std::string_view text,
                                              std::span<const std::string> abbreviations);

// The span with surrounding whitespace removed.
corpus::CharSpan trim_span(std::string_view text, corpus::CharSpan span);

}  // namespace certkit::extraction
