// Copyright 2026 The wolofspell Authors.
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

#ifndef WOLOFSPELL_EVAL_H_
#define WOLOFSPELL_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wolofspell/pipeline.h"

namespace wolofspell {

enum class Label { kValid, kInvalid };

struct CorpusEntry {
  std::string word;
  Label label = Label::kValid;
  std::optional<std::string> gold;  // present iff label is kInvalid

  bool operator==(const CorpusEntry&) const = default;
};

// Corpus TSV: `word<TAB>label[<TAB>gold]`, label valid|invalid (any case),
// '#' comments and blank lines ignored. Throws MalformedCorpus when an
// invalid row lacks its gold form, a valid row has one, a row has extra
// columns, or word equals gold.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& source_name);

// TP: valid word accepted. FP: invalid word accepted.
// FN: valid word flagged. TN: invalid word flagged.
struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts&) const = default;
};

// Detection ratios. A ratio with a zero denominator is reported as 0.
struct DetectionMetrics {
  double r_c = 0;   // lexical recall     tp / (tp + fn)
  double r_i = 0;   // error recall       tn / (tn + fp)
  double p_c = 0;   // lexical precision  tp / (tp + fp)
  double p_i = 0;   // error precision    tn / (tn + fn)
  double fm_c = 0;  // harmonic mean of r_c and p_c
  double fm_i = 0;  // harmonic mean of r_i and p_i
  double pa = 0;    // predictive accuracy (tp + tn) / total
};

DetectionMetrics detection_metrics(const ConfusionCounts& counts);

struct HistogramBucket {
  std::size_t count = 0;
  double percentage = 0;

  bool operator==(const HistogramBucket&) const = default;
};

// Plain edit distance between misspelling and gold -> bucket.
using Histogram = std::map<std::size_t, HistogramBucket>;

// Buckets the invalid entries accepted by `select` (valid entries are
// always skipped). Percentages are relative to the selected count.
Histogram histogram(std::span<const CorpusEntry> corpus,
                    const std::function<bool(const CorpusEntry&)>& select);

struct EvalReport {
  ConfusionCounts counts;
  DetectionMetrics detection;
  // Invalid entries that reached evaluation (not dropped).
  std::size_t invalid_total = 0;
  // Invalid entries whose first suggestion is the gold form.
  std::size_t top1_hits = 0;
  double sa = 0;   // suggestion adequacy: top1_hits / invalid_total
  double mrr = 0;  // mean of 1/rank(gold); 0 when gold is not in the list
  std::size_t dropped = 0;
  Histogram histogram_all;
  Histogram histogram_wrong;

  bool operator==(const EvalReport&) const;
};

// Runs every entry through `checker`. Invalid entries that are accepted
// (false positives) get no suggestions and contribute 0 to SA and MRR.
// Dropped entries are excluded from every count. Throws EmptyCorpus.
EvalReport evaluate(std::span<const CorpusEntry> corpus, const SpellChecker& checker);

// Table with Metric / Ratio / Percentage columns, then both histograms.
std::string format_table(const EvalReport& report);

// `key=value` lines, one field per line; doubles are written in shortest
// round-trip form so parse_structured() restores the report exactly.
std::string format_structured(const EvalReport& report);
EvalReport parse_structured(std::string_view text);

}  // namespace wolofspell

#endif  // WOLOFSPELL_EVAL_H_
