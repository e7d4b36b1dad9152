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

#include "wolofspell/suggest.h"

#include <algorithm>
#include <stdexcept>

#include "wolofspell/errors.h"
#include "wolofspell/utf8.h"

namespace wolofspell {
namespace {

class TrieSearch {
 public:
  TrieSearch(std::u32string_view query, const TrieDict& dict,
             const CostModel& model, const SuggestOptions& options)
      : query_(query), dict_(dict), model_(model), options_(options),
        width_(query.size() + 1) {
    insert_.resize(width_);
    for (std::size_t j = 1; j < width_; ++j)
      insert_[j] = model_.insert_cost(query_[j - 1]);
  }

  std::vector<Suggestion> run() {
    row(0).resize(width_);
    auto& first = rows_[0];
    first[0] = 0;
    for (std::size_t j = 1; j < width_; ++j) first[j] = first[j - 1] + insert_[j];
    ++expanded_;
    visit(TrieDict::kRoot, 0);
    std::vector<Suggestion> out;
    out.reserve(best_.size());
    for (auto& [cost, word] : best_) out.push_back({to_utf8(word), cost});
    return out;
  }

  std::size_t expanded() const { return expanded_; }

 private:
  std::vector<Cost>& row(std::size_t depth) {
    if (rows_.size() <= depth) rows_.resize(depth + 1);
    return rows_[depth];
  }

  bool full() const { return best_.size() >= options_.k; }

  // A subtree whose row minimum is `lower` cannot contribute.
  bool hopeless(Cost lower) const {
    if (options_.max_cost && lower > *options_.max_cost) return true;
    // Descendants come after every listed word in lexicographic order, so a
    // tie with the current k-th cost would lose the tie-break.
    return full() && lower >= best_.back().first;
  }

  void offer(Cost cost) {
    if (options_.max_cost && cost > *options_.max_cost) return;
    if (full() && cost >= best_.back().first) return;
    // Words arrive in lexicographic order: place after equal costs.
    auto pos = std::upper_bound(
        best_.begin(), best_.end(), cost,
        [](Cost c, const std::pair<Cost, std::u32string>& e) { return c < e.first; });
    best_.insert(pos, {cost, prefix_});
    if (best_.size() > options_.k) best_.pop_back();
  }

  void visit(TrieDict::NodeId node, std::size_t depth) {
    const std::vector<Cost>& parent = rows_[depth];
    if (dict_.is_terminal(node)) offer(parent[width_ - 1]);
    for (const auto& edge : dict_.children(node)) {
      std::vector<Cost>& cur = row(depth + 1);
      const std::vector<Cost>& above = rows_[depth];  // row() may reallocate
      cur.resize(width_);
      const Cost del = model_.delete_cost(edge.label);
      cur[0] = above[0] + del;
      Cost lower = cur[0];
      for (std::size_t j = 1; j < width_; ++j) {
        cur[j] = std::min({above[j] + del, cur[j - 1] + insert_[j],
                           above[j - 1] + model_.substitute_cost(edge.label, query_[j - 1])});
        lower = std::min(lower, cur[j]);
      }
      ++expanded_;
      prefix_.push_back(edge.label);
      if (!options_.prune || !hopeless(lower)) visit(edge.child, depth + 1);
      prefix_.pop_back();
    }
  }

  std::u32string_view query_;
  const TrieDict& dict_;
  const CostModel& model_;
  const SuggestOptions& options_;
  std::size_t width_;
  std::vector<Cost> insert_;
  std::vector<std::vector<Cost>> rows_;
  std::u32string prefix_;
  std::vector<std::pair<Cost, std::u32string>> best_;
  std::size_t expanded_ = 0;
};

}  // namespace

std::size_t SuggestionList::rank_of(std::string_view word) const {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].word == word) return i + 1;
  return 0;
}

SuggestionList suggest(std::string_view query, const TrieDict& dict,
                       const CostModel& model, const SuggestOptions& options,
                       SuggestStats* stats) {
  if (dict.empty()) throw EmptyLexicon();
  if (options.k == 0) throw std::invalid_argument("suggest: k must be at least 1");
  const std::u32string q = to_scalars(query);
  TrieSearch search(q, dict, model, options);
  SuggestionList list{std::string(query), search.run()};
  if (stats != nullptr) stats->nodes_expanded = search.expanded();
  return list;
}

Suggestion best(std::string_view query, const TrieDict& dict,
                const CostModel& model) {
  SuggestOptions options;
  options.k = 1;
  return suggest(query, dict, model, options).items.front();
}

}  // namespace wolofspell
