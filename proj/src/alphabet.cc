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

#include "wolofspell/alphabet.h"

#include <algorithm>
#include <fstream>

#include "wolofspell/errors.h"
#include "wolofspell/preprocess.h"
#include "wolofspell/utf8.h"

namespace wolofspell {
namespace {

std::vector<Alphabet::Entry> standard_entries() {
  using GC = GraphemeClass;
  std::vector<Alphabet::Entry> entries;
  auto add = [&](GC cls, std::initializer_list<std::u32string_view> items) {
    for (auto item : items) entries.emplace_back(std::u32string(item), cls);
  };
  add(GC::kWeakConsonant, {U"p", U"t", U"c", U"k", U"q", U"b", U"d", U"j", U"g",
                           U"m", U"n", U"ñ", U"ŋ", U"f", U"r", U"s", U"x", U"w",
                           U"l", U"y"});
  add(GC::kGeminateConsonant,
      {U"pp", U"tt", U"cc", U"kk", U"bb", U"dd", U"jj", U"gg", U"ŋŋ", U"ww",
       U"ll", U"mm", U"nn", U"yy", U"ññ", U"qq"});
  add(GC::kPrenasalizedConsonant,
      {U"mp", U"nt", U"nc", U"nk", U"nq", U"mb", U"nd", U"nj", U"ng"});
  add(GC::kShortVowel,
      {U"a", U"à", U"ã", U"i", U"o", U"ó", U"u", U"e", U"ë", U"é"});
  add(GC::kLongVowel, {U"ii", U"uu", U"éé", U"óó", U"ee", U"oo", U"aa"});
  return entries;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

void segment_all_from(const Alphabet& alphabet, std::u32string_view word,
                      std::size_t pos, Segmentation& prefix,
                      std::vector<Segmentation>& out) {
  if (pos == word.size()) {
    out.push_back(prefix);
    return;
  }
  const std::size_t longest =
      std::min(alphabet.max_grapheme_length(), word.size() - pos);
  for (std::size_t len = longest; len >= 1; --len) {
    auto text = word.substr(pos, len);
    if (auto cls = alphabet.classify(text)) {
      prefix.push_back({std::u32string(text), *cls});
      segment_all_from(alphabet, word, pos + len, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::string_view to_string(GraphemeClass cls) {
  switch (cls) {
    case GraphemeClass::kWeakConsonant:
      return "weak";
    case GraphemeClass::kGeminateConsonant:
      return "geminate";
    case GraphemeClass::kPrenasalizedConsonant:
      return "prenasalized";
    case GraphemeClass::kShortVowel:
      return "short";
    case GraphemeClass::kLongVowel:
      return "long";
  }
  return "?";
}

std::optional<GraphemeClass> parse_grapheme_class(std::string_view name) {
  for (GraphemeClass cls : kAllGraphemeClasses)
    if (to_string(cls) == name) return cls;
  return std::nullopt;
}

Alphabet::Alphabet(std::vector<Entry> entries) : entries_(std::move(entries)) {
  for (const auto& [text, cls] : entries_) {
    if (text.empty())
      throw MalformedInput("alphabet", 0, "empty grapheme");
    if (!by_text_.emplace(text, cls).second)
      throw MalformedInput("alphabet", 0,
                           "grapheme listed twice: " + to_utf8(text));
    max_length_ = std::max(max_length_, text.size());
  }
}

const Alphabet& Alphabet::standard() {
  static const Alphabet alphabet(standard_entries());
  return alphabet;
}

Alphabet Alphabet::parse(std::istream& in, const std::string& source_name) {
  std::vector<Entry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto tab = t.find('\t');
    if (tab == std::string::npos)
      throw MalformedInput(source_name, line_no, "expected grapheme<TAB>class");
    std::string text = normalize(trim(t.substr(0, tab)));
    auto cls = parse_grapheme_class(trim(t.substr(tab + 1)));
    if (!cls)
      throw MalformedInput(source_name, line_no,
                           "unknown grapheme class '" + t.substr(tab + 1) + "'");
    entries.emplace_back(to_scalars(text), *cls);
  }
  try {
    return Alphabet(std::move(entries));
  } catch (const MalformedInput& e) {
    throw MalformedInput(source_name, 0, e.what());
  }
}

Alphabet Alphabet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open alphabet file: " + path.string());
  return parse(in, path.string());
}

std::optional<GraphemeClass> Alphabet::classify(std::u32string_view text) const {
  auto it = by_text_.find(std::u32string(text));
  if (it == by_text_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::is_wolof_char(char32_t c) const {
  std::u32string n = normalize(std::u32string_view(&c, 1));
  return n.size() == 1 && by_text_.count(n) > 0;
}

std::optional<Segmentation> Alphabet::try_segment(std::u32string_view word) const {
  Segmentation out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    bool matched = false;
    const std::size_t longest = std::min(max_length_, word.size() - pos);
    for (std::size_t len = longest; len >= 1 && !matched; --len) {
      auto text = word.substr(pos, len);
      if (auto cls = classify(text)) {
        out.push_back({std::u32string(text), *cls});
        pos += len;
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return out;
}

Segmentation Alphabet::segment(std::u32string_view word) const {
  if (auto parse = try_segment(word)) return std::move(*parse);
  for (std::size_t i = 0; i < word.size(); ++i)
    if (!classify(word.substr(i, 1))) throw Unsegmentable(i, word[i]);
  // Only reachable with an override inventory lacking some single letters
  // needed to finish a multi-scalar match.
  throw Unsegmentable(0, word.empty() ? U'\0' : word[0]);
}

Segmentation Alphabet::segment(std::string_view utf8_word) const {
  return segment(std::u32string_view(to_scalars(utf8_word)));
}

std::vector<Segmentation> Alphabet::segment_all(std::u32string_view word) const {
  std::vector<Segmentation> out;
  Segmentation prefix;
  segment_all_from(*this, word, 0, prefix, out);
  return out;
}

bool is_wolof_char(char32_t c) { return Alphabet::standard().is_wolof_char(c); }

}  // namespace wolofspell
