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

#include "wolofspell/errors.h"
#include "wolofspell/utf8.h"

namespace wolofspell {

std::string_view to_string(WordStatus status) {
  switch (status) {
    case WordStatus::kCorrect:
      return "correct";
    case WordStatus::kCorrected:
      return "corrected";
    case WordStatus::kNoSuggestion:
      return "no_suggestion";
    case WordStatus::kDropped:
      return "dropped";
  }
  return "?";
}

std::string_view to_string(Detector detector) {
  return detector == Detector::kRules ? "rules" : "lexicon";
}

SpellChecker::SpellChecker(TrieDict lexicon, CostModel costs, RuleSet translit,
                           CheckerOptions options, ExclusionList exclusions,
                           Alphabet alphabet)
    : lexicon_(std::move(lexicon)),
      costs_(std::move(costs)),
      translit_(std::move(translit)),
      options_(options),
      exclusions_(std::move(exclusions)),
      alphabet_(std::move(alphabet)) {
  if (lexicon_.empty()) throw EmptyLexicon();
  if (options_.k == 0) throw std::invalid_argument("k must be at least 1");
}

WordResult SpellChecker::route(Token token) const {
  WordResult r;
  r.original = std::move(token);
  const std::u32string word = to_scalars(r.original.surface);

  r.verdict = validate(std::u32string_view(word), alphabet_);
  if (!r.verdict.valid) {
    r.flagged_by = Detector::kRules;
  } else {
    r.lexicon_consulted = true;
    if (lexicon_.contains(std::u32string_view(word))) {
      r.status = WordStatus::kCorrect;
      return r;
    }
    r.flagged_by = Detector::kLexicon;
  }

  r.transformed = to_utf8(translit_.transform(std::u32string_view(word)));
  SuggestOptions so;
  so.k = options_.k;
  so.max_cost = options_.max_cost;
  r.suggestions = suggest(r.transformed, lexicon_, costs_, so);
  if (r.suggestions->empty()) {
    r.status = WordStatus::kNoSuggestion;
  } else {
    r.status = WordStatus::kCorrected;
    r.corrected = r.suggestions->items.front().word;
  }
  return r;
}

WordResult SpellChecker::check_word(std::string_view word) const {
  auto words = split_words(clean(word), &exclusions_);
  if (words.size() != 1 || words.front().dropped != DropReason::kNone) {
    WordResult r;
    r.original = {std::string(word), Token::kDropped};
    r.status = WordStatus::kDropped;
    return r;
  }
  return route({std::move(words.front().surface), 0});
}

CheckReport SpellChecker::check_text(std::string_view text) const {
  CheckReport report;
  std::size_t position = 0;
  for (auto& w : split_words(clean(text), &exclusions_)) {
    if (w.dropped != DropReason::kNone) {
      WordResult r;
      r.original = {std::move(w.surface), Token::kDropped};
      r.status = WordStatus::kDropped;
      report.results.push_back(std::move(r));
      continue;
    }
    WordResult r = route({std::move(w.surface), position++});
    if (!report.corrected_text.empty()) report.corrected_text.push_back(' ');
    report.corrected_text += r.corrected ? *r.corrected : r.original.surface;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace wolofspell
