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

#ifndef WOLOFSPELL_SUGGEST_H_
#define WOLOFSPELL_SUGGEST_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wolofspell/distance.h"
#include "wolofspell/lexicon.h"

namespace wolofspell {

struct Suggestion {
  std::string word;
  Cost cost = 0;

  bool operator==(const Suggestion&) const = default;
};

// Candidates sorted by ascending cost, ties by ascending word.
struct SuggestionList {
  std::string query;
  std::vector<Suggestion> items;

  bool empty() const { return items.empty(); }
  // 1-based rank of `word`, or 0 when absent.
  std::size_t rank_of(std::string_view word) const;
};

struct SuggestOptions {
  std::size_t k = 10;
  std::optional<Cost> max_cost;
  // Abandon subtrees whose best reachable cost cannot enter the list.
  // Turning this off must not change the result, only the work done.
  bool prune = true;
};

struct SuggestStats {
  std::size_t nodes_expanded = 0;
};

// The k lexicon words closest to `query` under `model`. Walks the trie
// depth-first carrying one DP row per node; the row minimum is a lower
// bound on every descendant's cost. Throws EmptyLexicon; k must be >= 1.
SuggestionList suggest(std::string_view query, const TrieDict& dict,
                       const CostModel& model, const SuggestOptions& options = {},
                       SuggestStats* stats = nullptr);

// Top candidate. Throws EmptyLexicon.
Suggestion best(std::string_view query, const TrieDict& dict,
                const CostModel& model);

}  // namespace wolofspell

#endif  // WOLOFSPELL_SUGGEST_H_
