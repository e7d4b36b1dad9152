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

#ifndef WOLOFSPELL_DISTANCE_H_
#define WOLOFSPELL_DISTANCE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wolofspell {

// Edit costs are small non-negative integers so sums, and therefore ties
// between candidates, are exact.
using Cost = std::uint32_t;

// Insertion, deletion and substitution costs over Unicode scalars.
// Substitution is symmetric and free between equal scalars; unequal pairs
// cost `default_substitution()` unless overridden.
class CostModel {
 public:
  // Unit insert/delete, default substitution 2, and the accent and x/q
  // couples at 1: (a,à) (a,ã) (o,ó) (e,é) (e,ë) (é,ë) (x,q).
  CostModel();

  // Plain Levenshtein: every operation costs 1.
  static CostModel unit();
  // Same insert/delete/default costs as CostModel() but no pair overrides.
  static CostModel without_overrides();

  // Cost override file: UTF-8 TSV `char1<TAB>char2<TAB>cost`, '#'
  // comments. The listed pairs replace the built-in couples; absent pairs
  // fall back to 2 (unequal) or 0 (equal).
  static CostModel load(const std::filesystem::path& path);
  static CostModel parse(std::istream& in, const std::string& source_name);

  // Inline: the distance loops call these once per cell.
  Cost insert_cost(char32_t c) const {
    return insert_.empty() ? default_insert_ : lookup(insert_, c, default_insert_);
  }
  Cost delete_cost(char32_t c) const {
    return delete_.empty() ? default_delete_ : lookup(delete_, c, default_delete_);
  }
  Cost substitute_cost(char32_t a, char32_t b) const {
    if (a < kDenseLimit && b < kDenseLimit) {
      const std::uint8_t sa = slot_[a], sb = slot_[b];
      if (!dense_overflow_ || (sa != kSharedSlot && sb != kSharedSlot)) {
        const Cost c = dense_[sa * kDenseSide + sb];
        return a == b ? 0 : c;
      }
    }
    return a == b ? 0 : sparse_substitute_cost(a, b);
  }

  void set_substitution(char32_t a, char32_t b, Cost cost);
  void set_insert_cost(char32_t c, Cost cost) { insert_[c] = cost; }
  void set_delete_cost(char32_t c, Cost cost) { delete_[c] = cost; }
  void set_default_substitution(Cost cost);
  void set_default_indel(Cost insert, Cost remove) {
    default_insert_ = insert;
    default_delete_ = remove;
  }

  Cost default_substitution() const { return default_substitution_; }
  // Number of unordered pairs with an explicit cost.
  std::size_t override_count() const { return pairs_.size() / 2; }

 private:
  friend Cost wld(std::u32string_view a, std::u32string_view b, const CostModel& model);

  struct Blank {};
  explicit CostModel(Blank) {}

  static std::uint64_t key(char32_t a, char32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  Cost default_insert_ = 1;
  Cost default_delete_ = 1;
  static constexpr Cost kDefaultSubstitution = 2;
  Cost default_substitution_ = kDefaultSubstitution;

  // Resolved substitution costs for scalars below kDenseLimit, which covers
  // the whole Wolof alphabet; the distance loops hit it once per cell.
  // Scalars named by an override get a private slot, every other scalar
  // shares slot 0 whose row and column hold the default cost.
  static constexpr char32_t kDenseLimit = 0x180;
  static constexpr std::size_t kDenseSide = 33;
  static constexpr std::uint8_t kSharedSlot = 0;
  std::array<std::uint8_t, kDenseLimit> slot_{};
  std::uint8_t slots_used_ = 1;
  bool dense_overflow_ = false;  // some small-scalar pair lives only in pairs_
  std::array<Cost, kDenseSide * kDenseSide> dense_ = filled_dense(kDefaultSubstitution);

  static constexpr std::array<Cost, kDenseSide * kDenseSide> filled_dense(Cost c) {
    std::array<Cost, kDenseSide * kDenseSide> a{};
    a.fill(c);
    return a;
  }
  std::uint8_t slot_for(char32_t c);
  Cost sparse_substitute_cost(char32_t a, char32_t b) const;
  static Cost lookup(const std::unordered_map<char32_t, Cost>& map, char32_t c,
                     Cost fallback);

  std::unordered_map<char32_t, Cost> insert_;
  std::unordered_map<char32_t, Cost> delete_;
  std::unordered_map<std::uint64_t, Cost> pairs_;
};

// Full (|a|+1) x (|b|+1) table of prefix edit costs.
class DpMatrix {
 public:
  DpMatrix(std::u32string_view a, std::u32string_view b, const CostModel& model);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Cost at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  Cost result() const { return cells_.back(); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Cost> cells_;
};

// Weighted Levenshtein distance, O(|a|*|b|) time, O(|b|) space.
Cost wld(std::u32string_view a, std::u32string_view b, const CostModel& model);
Cost wld(std::string_view a, std::string_view b, const CostModel& model);

// Longest input accepted by wld_oracle.
inline constexpr std::size_t kOracleMaxLength = 10;

// Reference evaluation of the edit-distance recurrence by top-down
// recursion. Throws InputTooLong beyond kOracleMaxLength scalars.
Cost wld_oracle(std::u32string_view a, std::u32string_view b,
                const CostModel& model);
Cost wld_oracle(std::string_view a, std::string_view b, const CostModel& model);

// Unit-cost Levenshtein distance.
std::size_t plain_edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t plain_edit_distance(std::string_view a, std::string_view b);

}  // namespace wolofspell

#endif  // WOLOFSPELL_DISTANCE_H_
