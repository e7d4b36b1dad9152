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

#include "wolofspell/lexicon.h"

#include <algorithm>
#include <fstream>
#include <map>

#include "wolofspell/errors.h"
#include "wolofspell/preprocess.h"
#include "wolofspell/utf8.h"

namespace wolofspell {
namespace {

// Mutable pointer trie used only while building.
struct BuildNode {
  std::map<char32_t, std::size_t> children;
  bool terminal = false;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\v\f");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\v\f");
  return std::string(s.substr(first, last - first + 1));
}

// Returns an error message, or empty if the word is acceptable.
std::string check_word(std::u32string_view word) {
  if (word.empty()) return "empty word";
  for (char32_t c : word) {
    if (is_whitespace(c)) return "whitespace inside word";
    if (is_digit(c)) return "digit inside word";
  }
  return {};
}

}  // namespace

TrieDict::TrieDict() : first_edge_{0, 0}, terminal_{0} {}

TrieDict TrieDict::from_words(std::span<const std::string> words) {
  std::vector<BuildNode> nodes(1);
  std::size_t count = 0;
  for (const auto& raw : words) {
    std::u32string word = to_scalars(normalize(raw));
    if (auto err = check_word(word); !err.empty())
      throw MalformedLexicon("lexicon", 0, err + ": '" + raw + "'");
    std::size_t node = 0;
    for (char32_t c : word) {
      auto it = nodes[node].children.find(c);
      if (it == nodes[node].children.end()) {
        nodes.emplace_back();
        it = nodes[node].children.emplace(c, nodes.size() - 1).first;
      }
      node = it->second;
    }
    if (!nodes[node].terminal) {
      nodes[node].terminal = true;
      ++count;
    }
  }

  // Renumber in depth-first pre-order so siblings' subtrees are contiguous.
  TrieDict dict;
  dict.first_edge_.clear();
  dict.terminal_.clear();
  dict.word_count_ = count;
  std::vector<NodeId> new_id(nodes.size());
  std::vector<std::size_t> order;
  order.reserve(nodes.size());
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t n = stack.back();
    stack.pop_back();
    new_id[n] = static_cast<NodeId>(order.size());
    order.push_back(n);
    for (auto it = nodes[n].children.rbegin(); it != nodes[n].children.rend(); ++it)
      stack.push_back(it->second);
  }
  for (std::size_t old : order) {
    dict.first_edge_.push_back(static_cast<std::uint32_t>(dict.edges_.size()));
    dict.terminal_.push_back(nodes[old].terminal ? 1 : 0);
    for (const auto& [label, child] : nodes[old].children)
      dict.edges_.push_back({label, new_id[child]});
  }
  dict.first_edge_.push_back(static_cast<std::uint32_t>(dict.edges_.size()));
  return dict;
}

TrieDict TrieDict::parse(std::istream& in, const std::string& source_name) {
  std::vector<std::string> words;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (auto err = check_word(to_scalars(t)); !err.empty())
      throw MalformedLexicon(source_name, line_no, err + ": '" + t + "'");
    words.push_back(std::move(t));
  }
  if (in.bad()) throw IoError("error reading lexicon: " + source_name);
  return from_words(words);
}

TrieDict TrieDict::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open lexicon: " + path.string());
  return parse(in, path.string());
}

bool TrieDict::contains(std::u32string_view word) const {
  NodeId node = kRoot;
  for (char32_t c : word) {
    auto kids = children(node);
    auto it = std::lower_bound(kids.begin(), kids.end(), c,
                               [](const Edge& e, char32_t l) { return e.label < l; });
    if (it == kids.end() || it->label != c) return false;
    node = it->child;
  }
  return is_terminal(node);
}

bool TrieDict::contains(std::string_view word) const {
  return contains(std::u32string_view(to_scalars(word)));
}

std::vector<std::string> TrieDict::words() const {
  std::vector<std::string> out;
  out.reserve(word_count_);
  std::u32string prefix;
  // Iterative pre-order walk; `next` is the next edge to follow per level.
  struct Frame {
    NodeId node;
    std::size_t next;
  };
  std::vector<Frame> stack{{kRoot, 0}};
  if (is_terminal(kRoot)) out.push_back("");
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto kids = children(f.node);
    if (f.next == kids.size()) {
      stack.pop_back();
      if (!prefix.empty() && !stack.empty()) prefix.pop_back();
      continue;
    }
    const Edge& e = kids[f.next++];
    prefix.push_back(e.label);
    if (is_terminal(e.child)) out.push_back(to_utf8(prefix));
    stack.push_back({e.child, 0});
  }
  return out;
}

}  // namespace wolofspell
