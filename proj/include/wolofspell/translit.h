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

#ifndef WOLOFSPELL_TRANSLIT_H_
#define WOLOFSPELL_TRANSLIT_H_

#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wolofspell/alphabet.h"

namespace wolofspell {

// One rewrite of a French-influenced spelling. A pattern written with a
// trailing '$' in the rule file only matches at the end of the word.
struct TranslitRule {
  std::u32string pattern;
  std::u32string replacement;  // empty for a deletion rule
  int priority = 0;            // lower fires first
  bool word_final = false;

  bool operator==(const TranslitRule&) const = default;
};

// Ordered rule table: by priority, then longer patterns first.
//
// Rule file format: UTF-8 TSV `pattern<TAB>replacement<TAB>priority`, '#'
// comments and blank lines ignored, an empty replacement column deletes the
// match.
class RuleSet {
 public:
  RuleSet();
  // Throws MalformedInput on an empty or duplicate pattern, or a replacement
  // containing a non-Wolof scalar.
  explicit RuleSet(std::vector<TranslitRule> rules,
                   const Alphabet& alphabet = Alphabet::standard());

  // The built-in table shipped as data/translit_rules.tsv.
  static const RuleSet& standard();
  static RuleSet load(const std::filesystem::path& path);
  static RuleSet parse(std::istream& in, const std::string& source_name);

  // One left-to-right pass: at each position the first matching rule fires
  // and the cursor moves past its pattern; unmatched scalars are copied.
  // Afterwards every non-Wolof scalar is deleted. May return "".
  std::u32string transform(std::u32string_view word) const;
  std::string transform(std::string_view word) const;

  std::span<const TranslitRule> rules() const { return rules_; }

 private:
  bool is_letter(char32_t c) const;

  std::vector<TranslitRule> rules_;
  std::u32string letters_;  // sorted single-scalar graphemes
};

}  // namespace wolofspell

#endif  // WOLOFSPELL_TRANSLIT_H_
