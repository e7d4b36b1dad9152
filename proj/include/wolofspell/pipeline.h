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

#ifndef WOLOFSPELL_PIPELINE_H_
#define WOLOFSPELL_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wolofspell/alphabet.h"
#include "wolofspell/distance.h"
#include "wolofspell/lexicon.h"
#include "wolofspell/preprocess.h"
#include "wolofspell/rules.h"
#include "wolofspell/suggest.h"
#include "wolofspell/translit.h"

namespace wolofspell {

enum class WordStatus { kCorrect, kCorrected, kNoSuggestion, kDropped };
enum class Detector { kRules, kLexicon };

std::string_view to_string(WordStatus status);
std::string_view to_string(Detector detector);

struct WordResult {
  Token original;
  WordStatus status = WordStatus::kCorrect;
  std::optional<std::string> corrected;
  std::optional<SuggestionList> suggestions;
  std::optional<Detector> flagged_by;
  RuleVerdict verdict;
  // Output of the transliteration step (empty unless the word was flagged).
  std::string transformed;
  bool lexicon_consulted = false;
};

struct CheckReport {
  std::vector<WordResult> results;
  // Kept tokens joined by single spaces, corrections substituted.
  std::string corrected_text;
};

struct CheckerOptions {
  std::size_t k = 10;
  std::optional<Cost> max_cost;
};

// Detection and correction of non-word errors:
//   clean -> rules validation -> lexicon lookup -> (flagged) transliterate
//   -> suggest -> correct with the first suggestion.
// Every component is held by value and read-only after construction, so one
// SpellChecker may serve concurrent calls.
class SpellChecker {
 public:
  // Throws EmptyLexicon if `lexicon` is empty.
  explicit SpellChecker(TrieDict lexicon, CostModel costs = CostModel(),
                        RuleSet translit = RuleSet::standard(),
                        CheckerOptions options = {},
                        ExclusionList exclusions = {},
                        Alphabet alphabet = Alphabet::standard());

  // Routes one word. The word is cleaned first; if cleaning leaves anything
  // but a single token the result is Dropped.
  WordResult check_word(std::string_view word) const;

  CheckReport check_text(std::string_view text) const;

  const TrieDict& lexicon() const { return lexicon_; }
  const CostModel& costs() const { return costs_; }
  const RuleSet& translit() const { return translit_; }
  const CheckerOptions& options() const { return options_; }
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  WordResult route(Token token) const;

  TrieDict lexicon_;
  CostModel costs_;
  RuleSet translit_;
  CheckerOptions options_;
  ExclusionList exclusions_;
  Alphabet alphabet_;
};

}  // namespace wolofspell

#endif  // WOLOFSPELL_PIPELINE_H_
