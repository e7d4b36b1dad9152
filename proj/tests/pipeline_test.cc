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

#include "wolofspell/pipeline.h"

#include <random>

#include "doctest.h"
#include "test_support.h"
#include "wolofspell/errors.h"

using namespace wolofspell;
namespace wt = wolofspell::testing;

namespace {

const SpellChecker& checker() {
  static const SpellChecker c(TrieDict::load(wt::data_path("lexicon_sample.txt")));
  return c;
}

}  // namespace

TEST_CASE("french spellings are corrected to their gold forms") {
  for (const auto& line : wt::read_lines(wt::fixture_path("french_spellings.tsv"))) {
    const auto tab = line.find('\t');
    const std::string wrong = line.substr(0, tab), gold = line.substr(tab + 1);
    INFO(wrong);
    const WordResult r = checker().check_word(wrong);
    CHECK(r.status == WordStatus::kCorrected);
    REQUIRE(r.corrected.has_value());
    CHECK(*r.corrected == gold);
  }
}

TEST_CASE("routing") {
  const WordResult foreign = checker().check_word("thiossane");
  CHECK(foreign.flagged_by == Detector::kRules);
  CHECK_FALSE(foreign.lexicon_consulted);
  CHECK(foreign.transformed == "cosan");

  const WordResult unknown = checker().check_word("deuk");
  CHECK(unknown.flagged_by == Detector::kLexicon);
  CHECK(unknown.lexicon_consulted);
  CHECK(unknown.verdict.valid);

  const WordResult known = checker().check_word("Dëkk,");
  CHECK(known.status == WordStatus::kCorrect);
  CHECK_FALSE(known.flagged_by.has_value());
  CHECK_FALSE(known.suggestions.has_value());
  CHECK(known.original.surface == "dëkk");
}

TEST_CASE("a rules failure never consults the lexicon") {
  std::mt19937 rng(9);
  const std::u32string letters = U"abdkmnohëà";
  for (int i = 0; i < 500; ++i) {
    const std::string w = to_utf8(wt::random_word(rng, letters, 1, 6));
    const WordResult r = checker().check_word(w);
    if (r.status == WordStatus::kDropped) continue;
    CHECK(r.verdict.valid == validate(std::string_view(r.original.surface)).valid);
    CHECK(r.lexicon_consulted == r.verdict.valid);
    if (!r.verdict.valid) CHECK(r.flagged_by == Detector::kRules);
    CHECK((r.status == WordStatus::kCorrect) == !r.flagged_by.has_value());
  }
}

TEST_CASE("lexicon words are fixed points") {
  for (const auto& w : checker().lexicon().words()) {
    const WordResult r = checker().check_word(w);
    CHECK(r.status == WordStatus::kCorrect);
    CHECK(checker().check_text(w).corrected_text == w);
  }
}

TEST_CASE("check_text") {
  const CheckReport report = checker().check_text("Deuk bi, 3 tank!");
  REQUIRE(report.results.size() == 4);
  CHECK(report.corrected_text == "dëkk bi tànk");
  CHECK(report.results[0].status == WordStatus::kCorrected);
  CHECK(report.results[0].original.position == 0);
  CHECK(report.results[2].status == WordStatus::kDropped);
  CHECK(report.results[2].original.position == Token::kDropped);
  CHECK(report.results[3].original.position == 2);
  // Output is stable under a second pass.
  CHECK(checker().check_text(report.corrected_text).corrected_text == report.corrected_text);
  CHECK(checker().check_text("").results.empty());
}

TEST_CASE("dropped and unsuggestable words") {
  CHECK(checker().check_word("").status == WordStatus::kDropped);
  CHECK(checker().check_word("xar3").status == WordStatus::kDropped);
  CHECK(checker().check_word("dem bi").status == WordStatus::kDropped);

  const std::vector<std::string> words{"bi"};
  const SpellChecker tight(TrieDict::from_words(words), CostModel(), RuleSet::standard(),
                           {.k = 5, .max_cost = 1});
  const WordResult r = tight.check_word("xxxx");
  CHECK(r.status == WordStatus::kNoSuggestion);
  CHECK(tight.check_text("xxxx b").corrected_text == "xxxx bi");
}

TEST_CASE("exclusions") {
  const SpellChecker c(TrieDict::load(wt::data_path("lexicon_sample.txt")), CostModel(),
                       RuleSet::standard(), {}, ExclusionList({"paris"}));
  const CheckReport report = c.check_text("dem Paris");
  REQUIRE(report.results.size() == 2);
  CHECK(report.results[1].status == WordStatus::kDropped);
  CHECK(report.corrected_text == "dem");
}

TEST_CASE("empty lexicon is rejected") {
  CHECK_THROWS_AS(SpellChecker{TrieDict{}}, EmptyLexicon);
}
