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

#include "analysis/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "common/jsonl.hpp"
#include "corpus/types.hpp"

namespace certkit::analysis {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<std::filesystem::path> write_regression(const std::filesystem::path& dir,
                                                    const RegressionResult& r,
                                                    const Manifest& manifest, bool svg) {
  std::ostringstream head;
  head << manifest.csv_line() << '\n';
  head << "# spec: " << r.name << '\n';
  head << "# dependent: " << r.dependent << '\n';
  head << "# n_obs: " << r.n_obs << '\n';
  head << "# r_squared: " << format_number(r.r_squared) << '\n';
  head << "# se: " << (r.se_kind == SeKind::kHC1 ? "HC1" : "classical") << '\n';
  for (const auto& n : r.notes) head << "# note: " << n << '\n';

  std::ostringstream coefs;
  coefs << head.str() << "term,coef,se,t,p,ci_lo,ci_hi\n";
  for (const auto& t : r.terms) {
    coefs << csv_field(t.name) << ',' << format_number(t.coef) << ',' << format_number(t.se)
          << ',' << format_number(t.t) << ',' << format_number(t.p) << ','
          << format_number(t.ci_lo) << ',' << format_number(t.ci_hi) << '\n';
  }
  std::ostringstream margins;
  margins << head.str() << "variable,level,margin,ci_lo,ci_hi\n";
  for (const auto& m : r.margins) {
    margins << csv_field(m.variable) << ',' << csv_field(m.level) << ','
            << format_number(m.margin) << ',' << format_number(m.ci_lo) << ','
            << format_number(m.ci_hi) << '\n';
  }
  std::vector<std::filesystem::path> files{dir / (r.name + ".csv"),
                                           dir / (r.name + "_margins.csv")};
  write_text_file(files[0], coefs.str());
  write_text_file(files[1], margins.str());
  if (svg && !r.margins.empty()) {
    std::vector<ChartPoint> pts;
    for (const auto& m : r.margins)
      pts.push_back({m.variable + "=" + m.level, m.margin, m.ci_lo, m.ci_hi});
    files.push_back(dir / (r.name + "_margins.svg"));
    write_text_file(files.back(), render_svg(r.name + ": averaged marginal effects", pts, false));
  }
  return files;
}

std::vector<std::filesystem::path> write_hedge_curve(const std::filesystem::path& dir,
                                                     const HedgeCurve& curve,
                                                     const Manifest& manifest, bool svg) {
  std::ostringstream out;
  out << manifest.csv_line() << '\n';
  out << "# pearson_r: " << format_number(curve.r) << '\n';
  out << "# n: " << curve.n << '\n';
  out << "hedge_count,n,mean_certainty\n";
  for (const auto& p : curve.points)
    out << p.hedges << ',' << p.n << ',' << format_number(p.mean_certainty) << '\n';
  std::vector<std::filesystem::path> files{dir / "fig2.csv"};
  write_text_file(files[0], out.str());
  if (svg) {
    std::vector<ChartPoint> pts;
    const double nan = std::nan("");
    for (const auto& p : curve.points)
      pts.push_back({std::to_string(p.hedges), p.mean_certainty, nan, nan});
    files.push_back(dir / "fig2.svg");
    write_text_file(files.back(),
                    render_svg("mean certainty by hedge count (r = " + format_number(curve.r) + ")",
                               pts, true));
  }
  return files;
}

std::vector<std::filesystem::path> write_association(const std::filesystem::path& dir,
                                                     const Association& a,
                                                     const Manifest& manifest, bool svg) {
  std::ostringstream out;
  out << manifest.csv_line() << '\n';
  out << "# corpus_mean: " << format_number(a.corpus_mean) << '\n';
  out << "# n: " << a.n << '\n';
  out << "aspect,label,n,mean,ci_lo,ci_hi,relative,omitted\n";
  for (const auto& c : a.cells) {
    out << corpus::to_string(c.aspect) << ',' << corpus::to_string(c.label) << ',' << c.n << ','
        << format_number(c.mean) << ',' << format_number(c.ci_lo) << ','
        << format_number(c.ci_hi) << ',' << format_number(c.relative) << ','
        << (c.omitted ? 1 : 0) << '\n';
  }
  std::vector<std::filesystem::path> files{dir / "fig3.csv"};
  write_text_file(files[0], out.str());
  if (svg) {
    std::vector<ChartPoint> pts;
    for (const auto& c : a.cells) {
      if (c.omitted) continue;
      pts.push_back({std::string(corpus::to_string(c.aspect)) + "-" +
                         std::string(corpus::to_string(c.label)),
                     c.relative, c.ci_lo - a.corpus_mean, c.ci_hi - a.corpus_mean});
    }
    files.push_back(dir / "fig3.svg");
    write_text_file(files.back(), render_svg("certainty relative to corpus mean", pts, false));
  }
  return files;
}

std::string render_svg(const std::string& title, const std::vector<ChartPoint>& points,
                       bool line) {
  constexpr double kW = 640, kH = 360, kLeft = 60, kRight = 20, kTop = 40, kBottom = 110;
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const auto& p : points) {
    for (double v : {p.value, p.lo, p.hi}) {
      if (!std::isfinite(v)) continue;
      lo = first ? v : std::min(lo, v);
      hi = first ? v : std::max(hi, v);
      first = false;
    }
  }
  if (!line) {
    lo = std::min(lo, 0.0);
    hi = std::max(hi, 0.0);
  }
  if (hi - lo < 1e-12) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double plot_w = kW - kLeft - kRight;
  const double plot_h = kH - kTop - kBottom;
  auto ypos = [&](double v) { return kTop + (hi - v) / (hi - lo) * plot_h; };
  const double step = points.empty() ? plot_w : plot_w / static_cast<double>(points.size());
  auto xpos = [&](std::size_t i) { return kLeft + step * (static_cast<double>(i) + 0.5); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s << "<text x=\"" << kW / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">"
    << xml_escape(title) << "</text>\n";
  s << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
    << kTop + plot_h << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << kLeft << "\" y1=\"" << svg_num(ypos(line ? lo : 0.0)) << "\" x2=\""
    << kLeft + plot_w << "\" y2=\"" << svg_num(ypos(line ? lo : 0.0))
    << "\" stroke=\"black\"/>\n";
  for (double v : {lo + pad, (lo + hi) / 2, hi - pad}) {
    s << "<text x=\"" << kLeft - 5 << "\" y=\"" << svg_num(ypos(v) + 4)
      << "\" text-anchor=\"end\">" << format_number(std::round(v * 100) / 100) << "</text>\n";
  }
  std::string path;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    const double x = xpos(i);
    if (line) {
      path += (i == 0 ? "M" : " L") + svg_num(x) + " " + svg_num(ypos(p.value));
      s << "<circle cx=\"" << svg_num(x) << "\" cy=\"" << svg_num(ypos(p.value))
        << "\" r=\"3\" fill=\"steelblue\"/>\n";
    } else {
      const double y0 = ypos(0.0);
      const double y1 = ypos(p.value);
      s << "<rect x=\"" << svg_num(x - step * 0.35) << "\" y=\"" << svg_num(std::min(y0, y1))
        << "\" width=\"" << svg_num(step * 0.7) << "\" height=\"" << svg_num(std::fabs(y1 - y0))
        << "\" fill=\"steelblue\"/>\n";
    }
    if (std::isfinite(p.lo) && std::isfinite(p.hi)) {
      s << "<line x1=\"" << svg_num(x) << "\" y1=\"" << svg_num(ypos(p.lo)) << "\" x2=\""
        << svg_num(x) << "\" y2=\"" << svg_num(ypos(p.hi)) << "\" stroke=\"black\"/>\n";
    }
    s << "<text transform=\"translate(" << svg_num(x) << "," << svg_num(kTop + plot_h + 10)
      << ") rotate(45)\">" << xml_escape(p.label) << "</text>\n";
  }
  if (line && !path.empty())
    s << "<path d=\"" << path << "\" fill=\"none\" stroke=\"steelblue\"/>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace certkit::analysis
