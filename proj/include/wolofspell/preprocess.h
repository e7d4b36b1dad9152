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

#ifndef WOLOFSPELL_PREPROCESS_H_
#define WOLOFSPELL_PREPROCESS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace wolofspell {

// Replaces every Unicode punctuation scalar (general category P*) with a
// single space. Apostrophes and hyphens are punctuation too.
std::string strip_punctuation(std::string_view text);

// Lowercase, NFC-composed form of `text`.
std::string normalize(std::string_view text);
std::u32string normalize(std::u32string_view text);

bool is_punctuation(char32_t c);
bool is_digit(char32_t c);
bool is_whitespace(char32_t c);

bool contains_digit(std::string_view text);

struct Token {
  // Sentinel position for tokens removed during preprocessing.
  static constexpr std::size_t kDropped = std::numeric_limits<std::size_t>::max();

  std::string surface;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

// Words the caller wants removed before detection (e.g. known foreign
// words). File format: UTF-8, one word per line, '#' comments.
class ExclusionList {
 public:
  ExclusionList() = default;
  explicit ExclusionList(const std::vector<std::string>& words);

  static ExclusionList load(const std::filesystem::path& path);
  static ExclusionList parse(std::istream& in);

  bool contains(std::string_view normalized_word) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

enum class DropReason { kNone, kDigit, kExcluded };

struct RawWord {
  std::string surface;
  DropReason dropped = DropReason::kNone;
};

// Splits already stripped and normalized text on whitespace runs and marks
// the words preprocessing removes.
std::vector<RawWord> split_words(std::string_view text,
                                 const ExclusionList* exclusions = nullptr);

// Whitespace split of stripped, normalized text. Tokens with a digit are
// dropped; positions count the kept tokens only.
std::vector<Token> tokenize(std::string_view text);

// strip_punctuation followed by normalize.
std::string clean(std::string_view text);

}  // namespace wolofspell

#endif  // WOLOFSPELL_PREPROCESS_H_
