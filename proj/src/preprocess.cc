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

#include "wolofspell/preprocess.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <fstream>
#include <stdexcept>

#include "wolofspell/errors.h"
#include "wolofspell/utf8.h"

namespace wolofspell {
namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || n == nullptr)
    throw std::runtime_error("ICU NFC normalizer unavailable");
  return *n;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

bool is_punctuation(char32_t c) { return u_ispunct(static_cast<UChar32>(c)); }

bool is_digit(char32_t c) { return u_isdigit(static_cast<UChar32>(c)); }

bool is_whitespace(char32_t c) {
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

bool contains_digit(std::string_view text) {
  for (char32_t c : to_scalars(text))
    if (is_digit(c)) return true;
  return false;
}

std::string strip_punctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : to_scalars(text)) {
    if (is_punctuation(c))
      out.push_back(' ');
    else
      append_utf8(out, c);
  }
  return out;
}

std::string normalize(std::string_view text) {
  const icu::Normalizer2& n = nfc();
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  // Compose first so that lowercasing sees precomposed letters, then again in
  // case lowercasing produced a decomposable sequence.
  icu::UnicodeString lowered = n.normalize(s, status).toLower(icu::Locale::getRoot());
  icu::UnicodeString composed = n.normalize(lowered, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

std::u32string normalize(std::u32string_view text) {
  return to_scalars(normalize(to_utf8(text)));
}

std::string clean(std::string_view text) {
  return normalize(strip_punctuation(text));
}

ExclusionList::ExclusionList(const std::vector<std::string>& words) {
  for (const auto& w : words) {
    std::string n = normalize(trim(w));
    if (!n.empty()) words_.insert(std::move(n));
  }
}

ExclusionList ExclusionList::parse(std::istream& in) {
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    words.push_back(std::move(t));
  }
  return ExclusionList(words);
}

ExclusionList ExclusionList::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open exclusion list: " + path.string());
  return parse(in);
}

bool ExclusionList::contains(std::string_view normalized_word) const {
  return words_.find(std::string(normalized_word)) != words_.end();
}

std::vector<RawWord> split_words(std::string_view text,
                                 const ExclusionList* exclusions) {
  std::vector<RawWord> words;
  std::string current;
  bool has_digit = false;
  auto flush = [&] {
    if (current.empty()) return;
    DropReason reason = DropReason::kNone;
    if (has_digit)
      reason = DropReason::kDigit;
    else if (exclusions != nullptr && exclusions->contains(current))
      reason = DropReason::kExcluded;
    words.push_back({std::move(current), reason});
    current.clear();
    has_digit = false;
  };
  for (char32_t c : to_scalars(text)) {
    if (is_whitespace(c)) {
      flush();
      continue;
    }
    if (is_digit(c)) has_digit = true;
    append_utf8(current, c);
  }
  flush();
  return words;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  for (auto& w : split_words(text)) {
    if (w.dropped != DropReason::kNone) continue;
    tokens.push_back({std::move(w.surface), tokens.size()});
  }
  return tokens;
}

}  // namespace wolofspell
