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

#ifndef WOLOFSPELL_ALPHABET_H_
#define WOLOFSPELL_ALPHABET_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wolofspell {

// Phonotactic class of a grapheme. Geminate and prenasalized consonants form
// the "strong" consonants.
enum class GraphemeClass : std::uint8_t {
  kWeakConsonant,
  kGeminateConsonant,
  kPrenasalizedConsonant,
  kShortVowel,
  kLongVowel,
};

inline constexpr GraphemeClass kAllGraphemeClasses[] = {
    GraphemeClass::kWeakConsonant, GraphemeClass::kGeminateConsonant,
    GraphemeClass::kPrenasalizedConsonant, GraphemeClass::kShortVowel,
    GraphemeClass::kLongVowel};

std::string_view to_string(GraphemeClass cls);
std::optional<GraphemeClass> parse_grapheme_class(std::string_view name);

constexpr bool is_strong(GraphemeClass cls) {
  return cls == GraphemeClass::kGeminateConsonant ||
         cls == GraphemeClass::kPrenasalizedConsonant;
}

constexpr bool is_vowel(GraphemeClass cls) {
  return cls == GraphemeClass::kShortVowel || cls == GraphemeClass::kLongVowel;
}

struct Grapheme {
  std::u32string text;
  GraphemeClass cls;

  bool operator==(const Grapheme&) const = default;
};

using Segmentation = std::vector<Grapheme>;

// Grapheme inventory of the Wolof alphabet. The standard inventory is built
// in; an override file may replace it.
//
// Override file format: UTF-8, one entry per line, `grapheme<TAB>class`
// where class is one of weak, geminate, prenasalized, short, long. Blank
// lines and lines starting with '#' are ignored.
class Alphabet {
 public:
  using Entry = std::pair<std::u32string, GraphemeClass>;

  // Throws MalformedInput if a grapheme is listed twice or is empty.
  explicit Alphabet(std::vector<Entry> entries);

  static const Alphabet& standard();
  static Alphabet load(const std::filesystem::path& path);
  static Alphabet parse(std::istream& in, const std::string& source_name);

  // True iff the lowercased, NFC-composed scalar is a single-scalar
  // grapheme of the inventory.
  bool is_wolof_char(char32_t c) const;

  std::optional<GraphemeClass> classify(std::u32string_view text) const;

  // Greedy longest-match segmentation, left to right.
  // Precondition: word is lowercase NFC. Throws Unsegmentable on the first
  // scalar that is not a Wolof letter.
  Segmentation segment(std::u32string_view word) const;
  Segmentation segment(std::string_view utf8_word) const;

  // Non-throwing variant of segment().
  std::optional<Segmentation> try_segment(std::u32string_view word) const;

  // Every segmentation of `word`, in the order produced by a backtracking
  // search that tries longer graphemes first (so the greedy parse comes
  // first). Empty when the word is unsegmentable. The count grows
  // exponentially with the number of ambiguous digraphs.
  std::vector<Segmentation> segment_all(std::u32string_view word) const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t max_grapheme_length() const { return max_length_; }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::u32string, GraphemeClass> by_text_;
  std::size_t max_length_ = 0;
};

// Membership in the standard alphabet:
// a à ã b c d e é ë f g i j k l m n ñ ŋ o ó p q r s t u w x y.
bool is_wolof_char(char32_t c);

}  // namespace wolofspell

#endif  // WOLOFSPELL_ALPHABET_H_
