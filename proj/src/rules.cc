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

#include "wolofspell/rules.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "wolofspell/utf8.h"

namespace wolofspell {
namespace {

// What the search needs to remember about the previous grapheme.
struct Prev {
  bool at_start = true;
  bool long_vowel = false;
  char32_t single = 0;  // the scalar, when the previous grapheme had length 1

  auto key() const { return std::make_tuple(at_start, long_vowel, single); }
};

bool splits_doubled_letter(const Alphabet& alphabet, char32_t prev_single,
                           const std::u32string_view text) {
  if (prev_single == 0 || text.size() != 1 || text[0] != prev_single)
    return false;
  const char32_t doubled[] = {prev_single, prev_single};
  return alphabet.classify(std::u32string_view(doubled, 2)).has_value();
}

class ValidParseSearch {
 public:
  ValidParseSearch(const Alphabet& alphabet, std::u32string_view word)
      : alphabet_(alphabet), word_(word) {}

  bool exists() { return search(0, Prev{}); }

 private:
  bool search(std::size_t pos, const Prev& prev) {
    if (pos == word_.size()) return true;
    auto key = std::tuple_cat(std::make_tuple(pos), prev.key());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool found = false;
    const std::size_t longest =
        std::min(alphabet_.max_grapheme_length(), word_.size() - pos);
    for (std::size_t len = longest; len >= 1 && !found; --len) {
      auto text = word_.substr(pos, len);
      auto cls = alphabet_.classify(text);
      if (!cls) continue;
      if (splits_doubled_letter(alphabet_, prev.single, text)) continue;
      if (prev.at_start && *cls == GraphemeClass::kGeminateConsonant) continue;
      if (prev.long_vowel && is_strong(*cls)) continue;
      Prev next{false, *cls == GraphemeClass::kLongVowel,
                len == 1 ? text[0] : char32_t{0}};
      found = search(pos + len, next);
    }
    memo_.emplace(key, found);
    return found;
  }

  const Alphabet& alphabet_;
  std::u32string_view word_;
  std::map<std::tuple<std::size_t, bool, bool, char32_t>, bool> memo_;
};

// First admissible parse in longest-first backtracking order.
std::optional<Segmentation> first_admissible(const Alphabet& alphabet,
                                             std::u32string_view word) {
  Segmentation parse;
  std::size_t pos = 0;
  // Greedy with single-step fallback: the longest match is always admissible
  // after a multi-scalar grapheme, so backtracking is only needed when a
  // one-scalar grapheme would split a doubled letter.
  while (pos < word.size()) {
    const char32_t prev_single =
        (!parse.empty() && parse.back().text.size() == 1) ? parse.back().text[0] : 0;
    bool matched = false;
    const std::size_t longest =
        std::min(alphabet.max_grapheme_length(), word.size() - pos);
    for (std::size_t len = longest; len >= 1 && !matched; --len) {
      auto text = word.substr(pos, len);
      auto cls = alphabet.classify(text);
      if (!cls || splits_doubled_letter(alphabet, prev_single, text)) continue;
      parse.push_back({std::u32string(text), *cls});
      pos += len;
      matched = true;
    }
    if (!matched) break;
  }
  if (pos == word.size()) return parse;
  for (auto& p : alphabet.segment_all(word))
    if (is_admissible(p, alphabet)) return p;
  return std::nullopt;
}

}  // namespace

std::string_view rule_name(RuleId id) {
  switch (id) {
    case RuleId::kForeignChar:
      return "FOREIGN_CHAR";
    case RuleId::kInitialStrong:
      return "INITIAL_STRONG";
    case RuleId::kStrongAfterLong:
      return "STRONG_AFTER_LONG";
  }
  return "?";
}

std::optional<RuleId> parse_rule_name(std::string_view name) {
  for (RuleId id : {RuleId::kForeignChar, RuleId::kInitialStrong,
                    RuleId::kStrongAfterLong})
    if (rule_name(id) == name) return id;
  return std::nullopt;
}

bool is_admissible(const Segmentation& parse, const Alphabet& alphabet) {
  for (std::size_t i = 1; i < parse.size(); ++i) {
    const auto& prev = parse[i - 1].text;
    if (prev.size() == 1 &&
        splits_doubled_letter(alphabet, prev[0], parse[i].text))
      return false;
  }
  return true;
}

std::vector<Violation> check_parse(const Segmentation& parse) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < parse.size(); ++i) {
    if (i == 0 && parse[i].cls == GraphemeClass::kGeminateConsonant)
      out.push_back({RuleId::kInitialStrong, i});
    if (i > 0 && parse[i - 1].cls == GraphemeClass::kLongVowel &&
        is_strong(parse[i].cls))
      out.push_back({RuleId::kStrongAfterLong, i});
  }
  return out;
}

RuleVerdict validate(std::u32string_view word, const Alphabet& alphabet) {
  RuleVerdict verdict;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!alphabet.classify(word.substr(i, 1))) {
      verdict.valid = false;
      verdict.violations.push_back({RuleId::kForeignChar, i});
      return verdict;
    }
  }
  if (ValidParseSearch(alphabet, word).exists()) return verdict;
  verdict.valid = false;
  if (auto parse = first_admissible(alphabet, word))
    verdict.violations = check_parse(*parse);
  return verdict;
}

RuleVerdict validate(std::string_view word, const Alphabet& alphabet) {
  return validate(std::u32string_view(to_scalars(word)), alphabet);
}

}  // namespace wolofspell
