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

/* certkit: certainty analysis of scientific findings in abstracts and news.
 *
 * Every function returns a cert_status. On failure a message is available
 * from cert_last_error() on the calling thread. Operations that produce a
 * summary (ingest counts, evaluation metrics, files written, warnings) leave
 * it as a JSON document in cert_last_report(ctx), valid until the next call
 * on the same context.
 *
 * Handles are opaque. A context is not thread-safe; other handles are
 * immutable once created and may be shared for reading.
 */
#ifndef CERTKIT_CERTKIT_H_
#define CERTKIT_CERTKIT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CERTKIT_BUILDING_LIBRARY)
#define CERT_API __attribute__((visibility("default")))
#else
#define CERT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cert_status {
  CERT_OK = 0,
  CERT_E_INTERNAL = 1,
  CERT_E_USAGE = 2,
  CERT_E_DATA = 3,
  CERT_E_EXTERNAL = 4,
  CERT_E_NUMERIC = 5,
  CERT_E_IO = 6
} cert_status;

typedef struct cert_context cert_context;
typedef struct cert_corpus cert_corpus;
typedef struct cert_findings cert_findings;
typedef struct cert_annotations cert_annotations;
typedef struct cert_model cert_model;
typedef struct cert_scores cert_scores;
typedef struct cert_pairs cert_pairs;

CERT_API const char* cert_version(void);
CERT_API const char* cert_status_name(cert_status status);

/* Message of the last failed call on this thread ("" if none). */
CERT_API const char* cert_last_error(void);
/* For CERT_E_EXTERNAL: unreachable, timeout, malformed_response,
 * id_mismatch or closed. "" otherwise. */
CERT_API const char* cert_last_error_detail(void);

/* ---- context ---------------------------------------------------------- */

typedef struct cert_options {
  /* Directory holding hedges.txt, report_verbs.txt, stopwords.txt and
   * abbreviations.txt. NULL: $CERTAINTY_LEXICON_DIR, else the built-in. */
  const char* lexicon_dir;
  /* Per-file overrides; NULL keeps the file from lexicon_dir. */
  const char* hedge_lexicon;
  const char* verb_lexicon;
  const char* stopwords;
  const char* abbreviations;
  /* Non-zero: count single-token hedges only. */
  int hedge_token_mode;
} cert_options;

/* opts may be NULL. */
CERT_API cert_status cert_context_create(const cert_options* opts, cert_context** out);
CERT_API void cert_context_destroy(cert_context* ctx);

/* Provenance recorded in the manifest of every file written afterwards.
 * has_seed == 0 records a null seed. */
CERT_API cert_status cert_set_provenance(cert_context* ctx, const char* command,
                                         const char* config_hash, int has_seed,
                                         uint64_t seed);

CERT_API const char* cert_last_report(const cert_context* ctx);

/* Writes the last report, with the manifest under "_manifest", to path. */
CERT_API cert_status cert_write_report(cert_context* ctx, const char* path);

/* 16 hex digits identifying data (not a security hash); out needs 17 bytes. */
CERT_API void cert_fingerprint(const char* data, size_t size, char out[17]);

/* ---- text utilities --------------------------------------------------- */

CERT_API cert_status cert_count_hedges(cert_context* ctx, const char* text, size_t* out);
CERT_API cert_status cert_flesch(cert_context* ctx, const char* text, double* out);
/* Overlap and Jaccard similarity of the normalised stem sets. */
CERT_API cert_status cert_similarity(cert_context* ctx, const char* a, const char* b,
                                     size_t* overlap, double* jaccard);

/* ---- corpus ----------------------------------------------------------- */

/* Reads news/papers JSONL, preprocesses news (length_cutoff 0 = default)
 * and writes the corpus store to out_dir. Malformed lines are reported,
 * not fatal. */
CERT_API cert_status cert_ingest(cert_context* ctx, const char* news_path,
                                 const char* papers_path, const char* out_dir,
                                 size_t length_cutoff);
CERT_API cert_status cert_corpus_load(cert_context* ctx, const char* dir, cert_corpus** out);
CERT_API size_t cert_corpus_num_papers(const cert_corpus* corpus);
CERT_API size_t cert_corpus_num_articles(const cert_corpus* corpus);
CERT_API void cert_corpus_free(cert_corpus* corpus);

/* ---- findings --------------------------------------------------------- */

typedef struct cert_finding_view {
  const char* finding_id;
  const char* text;
  const char* source; /* "news" or "abstract" */
  const char* origin_doi;
  const char* keyword; /* NULL for abstract findings */
} cert_finding_view;

CERT_API cert_status cert_extract(cert_context* ctx, const cert_corpus* corpus,
                                  cert_findings** out);
CERT_API cert_status cert_findings_load(cert_context* ctx, const char* path,
                                        cert_findings** out);
CERT_API cert_status cert_findings_save(cert_context* ctx, const cert_findings* findings,
                                        const char* path);
CERT_API size_t cert_findings_count(const cert_findings* findings);
/* The view points into the handle and lives as long as it does. */
CERT_API cert_status cert_findings_get(const cert_findings* findings, size_t index,
                                       cert_finding_view* out);
CERT_API void cert_findings_free(cert_findings* findings);

/* Hedge-stratified sample (0 / 1 / 2+ hedges at 50/35/15%). The report
 * carries the stratum sizes. */
CERT_API cert_status cert_sample(cert_context* ctx, const cert_findings* findings, size_t n,
                                 uint64_t seed, cert_findings** out);

/* ---- annotations, splits, agreement ----------------------------------- */

CERT_API cert_status cert_annotations_load(cert_context* ctx, const char* path,
                                           cert_annotations** out);
CERT_API size_t cert_annotations_count(const cert_annotations* annotations);
CERT_API void cert_annotations_free(cert_annotations* annotations);

/* Krippendorff's alpha: interval for sentence level, nominal per aspect. */
CERT_API cert_status cert_agreement(cert_context* ctx, const cert_annotations* annotations);

/* 8:1:1 split of the annotated (non-excluded) findings. Ids listed in
 * random_ids_path (one per line, may be NULL) form the random test set. */
CERT_API cert_status cert_split(cert_context* ctx, const cert_annotations* annotations,
                                const char* random_ids_path, uint64_t seed,
                                const char* out_path);

/* ---- models and scores ------------------------------------------------ */

typedef enum cert_model_kind { CERT_MODEL_BOW = 0, CERT_MODEL_HEDGE = 1 } cert_model_kind;

/* Fits on the split's train ids. ridge_penalty <= 0 and vocab_capacity == 0
 * select the defaults; both are ignored by the hedge model. */
CERT_API cert_status cert_train(cert_context* ctx, const cert_findings* findings,
                                const cert_annotations* annotations, const char* split_path,
                                cert_model_kind kind, double ridge_penalty,
                                size_t vocab_capacity, cert_model** out);
CERT_API cert_status cert_model_save(cert_context* ctx, const cert_model* model,
                                     const char* path);
CERT_API cert_status cert_model_load(cert_context* ctx, const char* path, cert_model** out);
CERT_API const char* cert_model_id(const cert_model* model);
CERT_API void cert_model_free(cert_model* model);

typedef struct cert_score_view {
  const char* finding_id;
  double sentence_certainty;
  /* number, extent, probability, framing, condition, suggestion;
   * 0 not_present, 1 certain, 2 uncertain */
  int aspects[6];
  const char* scorer_id;
} cert_score_view;

CERT_API cert_status cert_score(cert_context* ctx, const cert_model* model,
                                const cert_findings* findings, cert_scores** out);

/* endpoint: "tcp://host:port" or a shell command speaking the line protocol
 * on stdin/stdout. max_in_flight 0 and timeout_ms 0 select the defaults. */
CERT_API cert_status cert_score_external(cert_context* ctx, const char* endpoint,
                                         const cert_findings* findings, size_t max_in_flight,
                                         uint32_t timeout_ms, cert_scores** out);
CERT_API cert_status cert_scores_load(cert_context* ctx, const char* path, cert_scores** out);
CERT_API cert_status cert_scores_save(cert_context* ctx, const cert_scores* scores,
                                      const char* path);
CERT_API size_t cert_scores_count(const cert_scores* scores);
CERT_API cert_status cert_scores_get(const cert_scores* scores, size_t index,
                                     cert_score_view* out);
CERT_API void cert_scores_free(cert_scores* scores);

/* Pearson r on the full and random test sets, binary-F1 per aspect cell. */
CERT_API cert_status cert_evaluate(cert_context* ctx, const cert_scores* scores,
                                   const cert_annotations* annotations, const char* split_path);

/* ---- matching --------------------------------------------------------- */

typedef struct cert_pair_view {
  const char* news_finding_id;
  const char* abstract_finding_id;
  size_t overlap;
  double jaccard;
} cert_pair_view;

/* min_overlap 0 and min_jaccard < 0 select the defaults (3, 0.3). */
CERT_API cert_status cert_match(cert_context* ctx, const cert_corpus* corpus,
                                const cert_findings* findings, size_t min_overlap,
                                double min_jaccard, cert_pairs** out);
CERT_API cert_status cert_pairs_load(cert_context* ctx, const char* path, cert_pairs** out);
CERT_API cert_status cert_pairs_save(cert_context* ctx, const cert_pairs* pairs,
                                     const char* path);
CERT_API size_t cert_pairs_count(const cert_pairs* pairs);
CERT_API cert_status cert_pairs_get(const cert_pairs* pairs, size_t index, cert_pair_view* out);
CERT_API void cert_pairs_free(cert_pairs* pairs);

/* ---- analysis --------------------------------------------------------- */

typedef struct cert_analyze_inputs {
  const cert_corpus* corpus;           /* rq1-rq5 */
  const cert_findings* findings;       /* all */
  const cert_scores* scores;           /* rq1-rq5 */
  const cert_pairs* pairs;             /* rq1-rq3 */
  const cert_annotations* annotations; /* fig2, fig3 */
} cert_analyze_inputs;

typedef struct cert_analyze_options {
  int robust_se;    /* non-zero: HC1 standard errors */
  size_t bins;      /* quantile buckets for binned variants; 0 = 4 */
  int write_svg;    /* non-zero: also write SVG charts */
} cert_analyze_options;

/* spec: rq1..rq5, fig2 or fig3. Writes CSV files under out_dir; the report
 * lists them with the headline statistics. opts may be NULL. */
CERT_API cert_status cert_analyze(cert_context* ctx, const char* spec,
                                  const cert_analyze_inputs* inputs,
                                  const cert_analyze_options* opts, const char* out_dir);

#ifdef __cplusplus
}
#endif

#endif /* CERTKIT_CERTKIT_H_ */
