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

#ifndef WOLOFSPELL_RULES_H_
#define WOLOFSPELL_RULES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wolofspell/alphabet.h"

namespace wolofspell {

enum class RuleId {
  kForeignChar,      // some scalar is not a Wolof letter
  kInitialStrong,    // word starts with a geminate consonant
  kStrongAfterLong,  // geminate or prenasalized consonant right after a long vowel
};

std::string_view rule_name(RuleId id);
std::optional<RuleId> parse_rule_name(std::string_view name);

struct Violation {
  RuleId rule;
  // Grapheme index in the reported parse; scalar offset for kForeignChar.
  std::size_t index;

  bool operator==(const Violation&) const = default;
};

struct RuleVerdict {
  bool valid = true;
  std::vector<Violation> violations;
};

// A parse is admissible when it never splits a doubled letter that the
// inventory lists as a single grapheme ("kk", "aa", ...) into two identical
// one-scalar graphemes. Heterogeneous digraphs such as "nd" may still be read
// as two graphemes.
bool is_admissible(const Segmentation& parse, const Alphabet& alphabet);

// Violations of the initial-strong and strong-after-long-vowel rules in one
// parse, in grapheme order.
std::vector<Violation> check_parse(const Segmentation& parse);

// Phonotactic validation. A word is valid iff some admissible segmentation
// has no violation. When invalid, the violations reported are those of the
// first admissible parse in segment_all() order (the greedy parse).
RuleVerdict validate(std::u32string_view word,
                     const Alphabet& alphabet = Alphabet::standard());
RuleVerdict validate(std::string_view word,
                     const Alphabet& alphabet = Alphabet::standard());

}  // namespace wolofspell

#endif  // WOLOFSPELL_RULES_H_
