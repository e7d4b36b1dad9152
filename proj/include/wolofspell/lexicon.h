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

#ifndef WOLOFSPELL_LEXICON_H_
#define WOLOFSPELL_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wolofspell {

// Immutable character trie over Unicode scalars. The root node is the empty
// string; a word is a member iff its path ends on a terminal node.
//
// Nodes are stored in a flat array; the children of each node occupy a
// contiguous, label-sorted run of the edge array.
class TrieDict {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kRoot = 0;

  struct Edge {
    char32_t label;
    NodeId child;
  };

  TrieDict();

  // Words are normalized (lowercase NFC) and deduplicated. Throws
  // MalformedLexicon for empty words or words with whitespace or digits.
  static TrieDict from_words(std::span<const std::string> words);

  // Lexicon file: UTF-8, LF or CRLF, one word per line, surrounding
  // whitespace trimmed, blank lines and '#' lines ignored, duplicates
  // collapsed. Throws IoError or MalformedLexicon.
  static TrieDict load(const std::filesystem::path& path);
  static TrieDict parse(std::istream& in, const std::string& source_name);

  bool contains(std::string_view word) const;
  bool contains(std::u32string_view word) const;

  // Every stored word, in lexicographic scalar order.
  std::vector<std::string> words() const;

  std::size_t word_count() const { return word_count_; }
  std::size_t node_count() const { return terminal_.size(); }
  bool empty() const { return word_count_ == 0; }

  std::span<const Edge> children(NodeId node) const {
    return {edges_.data() + first_edge_[node],
            edges_.data() + first_edge_[node + 1]};
  }
  bool is_terminal(NodeId node) const { return terminal_[node] != 0; }

 private:
  std::vector<std::uint32_t> first_edge_;  // node_count() + 1 entries
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> terminal_;
  std::size_t word_count_ = 0;
};

}  // namespace wolofspell

#endif  // WOLOFSPELL_LEXICON_H_
