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

#include "wolofspell/translit.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "embedded_data.h"
#include "wolofspell/errors.h"
#include "wolofspell/preprocess.h"
#include "wolofspell/utf8.h"

namespace wolofspell {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

}  // namespace

RuleSet::RuleSet() : RuleSet(std::vector<TranslitRule>{}) {}

RuleSet::RuleSet(std::vector<TranslitRule> rules, const Alphabet& alphabet)
    : rules_(std::move(rules)) {
  for (const auto& [text, cls] : alphabet.entries())
    if (text.size() == 1) letters_.push_back(text[0]);
  std::sort(letters_.begin(), letters_.end());

  std::set<std::pair<std::u32string, bool>> seen;
  for (const auto& r : rules_) {
    const std::string shown = to_utf8(r.pattern) + (r.word_final ? "$" : "");
    if (r.pattern.empty())
      throw MalformedInput("translit rules", 0, "empty pattern");
    if (!seen.emplace(r.pattern, r.word_final).second)
      throw MalformedInput("translit rules", 0, "duplicate pattern: " + shown);
    for (char32_t c : r.replacement)
      if (!is_letter(c))
        throw MalformedInput("translit rules", 0,
                             "replacement for '" + shown +
                                 "' contains a non-Wolof letter");
  }
  std::stable_sort(rules_.begin(), rules_.end(),
                   [](const TranslitRule& a, const TranslitRule& b) {
                     if (a.priority != b.priority) return a.priority < b.priority;
                     return a.pattern.size() > b.pattern.size();
                   });
}

bool RuleSet::is_letter(char32_t c) const {
  return std::binary_search(letters_.begin(), letters_.end(), c);
}

RuleSet RuleSet::parse(std::istream& in, const std::string& source_name) {
  std::vector<TranslitRule> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3)
      throw MalformedInput(source_name, line_no,
                           "expected pattern<TAB>replacement<TAB>priority");
    TranslitRule rule;
    std::string pattern = cols[0];
    if (!pattern.empty() && pattern.back() == '$') {
      rule.word_final = true;
      pattern.pop_back();
    }
    rule.pattern = to_scalars(normalize(pattern));
    rule.replacement = to_scalars(normalize(cols[1]));
    try {
      std::size_t used = 0;
      rule.priority = std::stoi(cols[2], &used);
      if (used != cols[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw MalformedInput(source_name, line_no,
                           "priority is not an integer: '" + cols[2] + "'");
    }
    rules.push_back(std::move(rule));
  }
  try {
    return RuleSet(std::move(rules));
  } catch (const MalformedInput& e) {
    throw MalformedInput(source_name, 0, e.what());
  }
}

const RuleSet& RuleSet::standard() {
  static const RuleSet rules = [] {
    std::istringstream in{std::string(embedded::kTranslitRulesTsv)};
    return parse(in, "builtin translit_rules.tsv");
  }();
  return rules;
}

RuleSet RuleSet::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open rule file: " + path.string());
  return parse(in, path.string());
}

std::u32string RuleSet::transform(std::u32string_view word) const {
  std::u32string rewritten;
  std::size_t pos = 0;
  while (pos < word.size()) {
    const TranslitRule* fired = nullptr;
    for (const auto& r : rules_) {
      if (word.compare(pos, r.pattern.size(), r.pattern) != 0) continue;
      if (r.word_final && pos + r.pattern.size() != word.size()) continue;
      fired = &r;
      break;
    }
    if (fired != nullptr) {
      rewritten += fired->replacement;
      pos += fired->pattern.size();
    } else {
      rewritten.push_back(word[pos++]);
    }
  }
  std::u32string out;
  out.reserve(rewritten.size());
  for (char32_t c : rewritten)
    if (is_letter(c)) out.push_back(c);
  return out;
}

std::string RuleSet::transform(std::string_view word) const {
  return to_utf8(transform(std::u32string_view(to_scalars(word))));
}

}  // namespace wolofspell
