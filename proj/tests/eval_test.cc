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

#include "wolofspell/eval.h"

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "test_support.h"
#include "wolofspell/errors.h"

using namespace wolofspell;
namespace wt = wolofspell::testing;

namespace {

SpellChecker toy_checker() {
  return SpellChecker(TrieDict::load(wt::fixture_path("toy_lexicon.txt")));
}

}  // namespace

TEST_CASE("toy corpus by hand") {
  const auto corpus = load_corpus(wt::fixture_path("toy_corpus.tsv"));
  REQUIRE(corpus.size() == 4);
  CHECK(corpus[3].label == Label::kInvalid);
  const EvalReport r = evaluate(corpus, toy_checker());
  CHECK(r.counts == ConfusionCounts{.tp = 1, .fp = 1, .fn = 0, .tn = 2});
  CHECK(r.invalid_total == 3);
  CHECK(r.top1_hits == 1);
  CHECK(r.dropped == 0);
  CHECK(r.sa == doctest::Approx(1.0 / 3));
  CHECK(r.mrr == doctest::Approx(0.5));
  CHECK(r.detection.r_c == doctest::Approx(1.0));
  CHECK(r.detection.r_i == doctest::Approx(2.0 / 3));
  CHECK(r.detection.p_c == doctest::Approx(0.5));
  CHECK(r.detection.p_i == doctest::Approx(1.0));
  CHECK(r.detection.fm_c == doctest::Approx(2.0 / 3));
  CHECK(r.detection.fm_i == doctest::Approx(0.8));
  CHECK(r.detection.pa == doctest::Approx(0.75));
  REQUIRE(r.histogram_all.size() == 2);
  CHECK(r.histogram_all.at(1).count == 2);
  CHECK(r.histogram_all.at(2).count == 1);
  CHECK(r.histogram_all.at(1).percentage == doctest::Approx(200.0 / 3));
  REQUIRE(r.histogram_wrong.size() == 1);
  CHECK(r.histogram_wrong.at(1).count == 2);
  CHECK(r.histogram_wrong.at(1).percentage == doctest::Approx(100.0));
}

TEST_CASE("structured output round-trips") {
  const auto corpus = load_corpus(wt::fixture_path("toy_corpus.tsv"));
  const EvalReport r = evaluate(corpus, toy_checker());
  const std::string text = format_structured(r);
  CHECK(text.find("tp=1\n") != std::string::npos);
  CHECK(text.find("histogram_all.2.count=1\n") != std::string::npos);
  CHECK(parse_structured(text) == r);
  CHECK_THROWS(parse_structured("tp=x\n"));
}

TEST_CASE("table layout") {
  const auto corpus = load_corpus(wt::fixture_path("toy_corpus.tsv"));
  const std::string table = format_table(evaluate(corpus, toy_checker()));
  CHECK(table.rfind("Metric  Ratio        Percentage\n", 0) == 0);
  CHECK(table.find("R_i     2/3          66.67%") != std::string::npos);
  CHECK(table.find("PA      3/4          75.00%") != std::string::npos);
  CHECK(table.find("SA      1/3          33.33%") != std::string::npos);
}

TEST_CASE("metric identities on random counts") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> n(0, 50);
  for (int i = 0; i < 1000; ++i) {
    const ConfusionCounts c{n(rng), n(rng), n(rng), n(rng)};
    const DetectionMetrics m = detection_metrics(c);
    if (c.total() > 0)
      CHECK(m.pa == doctest::Approx(double(c.tp + c.tn) / c.total()));
    for (double v : {m.r_c, m.r_i, m.p_c, m.p_i, m.fm_c, m.fm_i, m.pa}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
    if (m.r_c > 0 && m.p_c > 0)
      CHECK(m.fm_c == doctest::Approx(2 * m.r_c * m.p_c / (m.r_c + m.p_c)));
    CHECK(std::min(m.r_i, m.p_i) <= m.fm_i + 1e-12);
    CHECK(m.fm_i <= std::max(m.r_i, m.p_i) + 1e-12);
  }
  const DetectionMetrics zero = detection_metrics({});
  CHECK(zero.pa == 0.0);
  CHECK(zero.r_c == 0.0);
}

TEST_CASE("histogram percentages sum to one hundred") {
  std::vector<CorpusEntry> corpus;
  for (int d = 1; d <= 4; ++d)
    for (int i = 0; i < d; ++i)
      corpus.push_back({"bi" + std::string(d, 'a'), Label::kInvalid, "bi"});
  corpus.push_back({"bi", Label::kValid, std::nullopt});
  const Histogram h = histogram(corpus, [](const CorpusEntry&) { return true; });
  double sum = 0;
  std::size_t count = 0;
  for (const auto& [d, b] : h) {
    CHECK(b.count == d);
    sum += b.percentage;
    count += b.count;
  }
  CHECK(count == 10);
  CHECK(sum == doctest::Approx(100.0));
}

TEST_CASE("dropped entries are excluded") {
  const std::vector<CorpusEntry> corpus{{"bi", Label::kValid, std::nullopt},
                                        {"b1", Label::kInvalid, "bi"}};
  const EvalReport r = evaluate(corpus, toy_checker());
  CHECK(r.dropped == 1);
  CHECK(r.counts.total() == 1);
  CHECK(r.invalid_total == 0);
  CHECK(r.sa == 0.0);
}

TEST_CASE("corpus parsing errors") {
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_corpus(in, "mem");
  };
  CHECK(parse("# c\n\nbi\tValid\n").size() == 1);
  CHECK_THROWS_AS(parse("deuk\tinvalid\n"), MalformedCorpus);
  CHECK_THROWS_AS(parse("bi\tvalid\tbu\n"), MalformedCorpus);
  CHECK_THROWS_AS(parse("bi\tinvalid\tbu\textra\n"), MalformedCorpus);
  CHECK_THROWS_AS(parse("bi\tinvalid\tbi\n"), MalformedCorpus);
  CHECK_THROWS_AS(parse("bi\tmaybe\n"), MalformedCorpus);
  try {
    load_corpus(wt::fixture_path("corpus_missing_gold.tsv"));
    FAIL("expected MalformedCorpus");
  } catch (const MalformedCorpus& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.tsv"), IoError);
  CHECK_THROWS_AS(evaluate({}, toy_checker()), EmptyCorpus);
}
