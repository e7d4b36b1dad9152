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

#include "wolofspell/distance.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

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

void read_overrides(std::istream& in, const std::string& source_name,
                    CostModel& model) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tabs(line);
    if (cols.size() != 3)
      throw MalformedInput(source_name, line_no, "expected char1<TAB>char2<TAB>cost");
    auto a = to_scalars(normalize(cols[0]));
    auto b = to_scalars(normalize(cols[1]));
    if (a.size() != 1 || b.size() != 1)
      throw MalformedInput(source_name, line_no, "each column must hold one character");
    if (a == b)
      throw MalformedInput(source_name, line_no, "a character cannot be substituted by itself");
    unsigned long cost = 0;
    try {
      std::size_t used = 0;
      cost = std::stoul(cols[2], &used);
      if (used != cols[2].size() || cols[2].front() == '-')
        throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw MalformedInput(source_name, line_no,
                           "cost must be a non-negative integer: '" + cols[2] + "'");
    }
    model.set_substitution(a[0], b[0], static_cast<Cost>(cost));
  }
}

const CostModel& builtin_model() {
  static const CostModel model = [] {
    CostModel m = CostModel::without_overrides();
    std::istringstream in{std::string(embedded::kCostsTsv)};
    read_overrides(in, "builtin costs.tsv", m);
    return m;
  }();
  return model;
}

// Scratch buffer that stays on the stack for short words.
template <typename T>
class Row {
 public:
  explicit Row(std::size_t n) : n_(n) {
    if (n_ > small_.size()) heap_.resize(n_);
  }
  T* data() { return n_ > small_.size() ? heap_.data() : small_.data(); }

 private:
  std::size_t n_;
  std::array<T, 32> small_;
  std::vector<T> heap_;
};

}  // namespace

CostModel CostModel::without_overrides() { return CostModel(Blank{}); }

CostModel CostModel::unit() {
  CostModel m(Blank{});
  m.set_default_substitution(1);
  return m;
}

CostModel::CostModel() { *this = builtin_model(); }

CostModel CostModel::parse(std::istream& in, const std::string& source_name) {
  CostModel m = without_overrides();
  read_overrides(in, source_name, m);
  return m;
}

CostModel CostModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open cost file: " + path.string());
  return parse(in, path.string());
}

Cost CostModel::lookup(const std::unordered_map<char32_t, Cost>& map, char32_t c,
                       Cost fallback) {
  auto it = map.find(c);
  return it == map.end() ? fallback : it->second;
}

Cost CostModel::sparse_substitute_cost(char32_t a, char32_t b) const {
  auto it = pairs_.find(key(a, b));
  return it == pairs_.end() ? default_substitution_ : it->second;
}

void CostModel::set_substitution(char32_t a, char32_t b, Cost cost) {
  if (a == b) throw std::invalid_argument("substitution of a scalar by itself is free");
  pairs_[key(a, b)] = cost;
  pairs_[key(b, a)] = cost;
  if (a >= kDenseLimit || b >= kDenseLimit) return;
  const std::uint8_t sa = slot_for(a), sb = slot_for(b);
  if (sa == kSharedSlot || sb == kSharedSlot) {
    dense_overflow_ = true;
    return;
  }
  dense_[sa * kDenseSide + sb] = cost;
  dense_[sb * kDenseSide + sa] = cost;
}

void CostModel::set_default_substitution(Cost cost) {
  default_substitution_ = cost;
  dense_ = filled_dense(cost);
  for (const auto& [k, c] : pairs_) {
    const char32_t a = static_cast<char32_t>(k >> 32), b = static_cast<char32_t>(k);
    if (a < kDenseLimit && b < kDenseLimit && slot_[a] != kSharedSlot &&
        slot_[b] != kSharedSlot)
      dense_[slot_[a] * kDenseSide + slot_[b]] = c;
  }
}

std::uint8_t CostModel::slot_for(char32_t c) {
  if (slot_[c] != kSharedSlot) return slot_[c];
  if (slots_used_ == kDenseSide) return kSharedSlot;
  return slot_[c] = slots_used_++;
}

DpMatrix::DpMatrix(std::u32string_view a, std::u32string_view b,
                   const CostModel& model)
    : rows_(a.size() + 1), cols_(b.size() + 1), cells_(rows_ * cols_) {
  auto cell = [&](std::size_t i, std::size_t j) -> Cost& {
    return cells_[i * cols_ + j];
  };
  for (std::size_t i = 1; i < rows_; ++i)
    cell(i, 0) = cell(i - 1, 0) + model.delete_cost(a[i - 1]);
  for (std::size_t j = 1; j < cols_; ++j)
    cell(0, j) = cell(0, j - 1) + model.insert_cost(b[j - 1]);
  for (std::size_t i = 1; i < rows_; ++i) {
    for (std::size_t j = 1; j < cols_; ++j) {
      cell(i, j) = std::min({cell(i - 1, j) + model.delete_cost(a[i - 1]),
                             cell(i, j - 1) + model.insert_cost(b[j - 1]),
                             cell(i - 1, j - 1) +
                                 model.substitute_cost(a[i - 1], b[j - 1])});
    }
  }
}

Cost wld(std::u32string_view a, std::u32string_view b, const CostModel& model) {
  const std::size_t n = b.size() + 1;
  Row<Cost> prev_buf(n), cur_buf(n), ins_buf(n);
  Row<std::uint8_t> slot_buf(n);
  Cost* prev = prev_buf.data();
  Cost* cur = cur_buf.data();
  Cost* ins = ins_buf.data();
  std::uint8_t* b_slot = slot_buf.data();

  // The dense table answers every substitution when no scalar falls outside
  // it; then each row reads one table row indexed by precomputed b slots.
  bool dense = !model.dense_overflow_;
  prev[0] = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const char32_t cb = b[j - 1];
    ins[j] = model.insert_cost(cb);
    prev[j] = prev[j - 1] + ins[j];
    if (cb < CostModel::kDenseLimit)
      b_slot[j] = model.slot_[cb];
    else
      dense = false;
  }
  for (std::size_t i = 1; i <= a.size(); ++i) {
    const char32_t ca = a[i - 1];
    const Cost del = model.delete_cost(ca);
    cur[0] = prev[0] + del;
    if (dense && ca < CostModel::kDenseLimit) {
      const Cost* sub = &model.dense_[model.slot_[ca] * CostModel::kDenseSide];
      for (std::size_t j = 1; j < n; ++j) {
        const Cost s = ca == b[j - 1] ? 0 : sub[b_slot[j]];
        cur[j] = std::min({prev[j] + del, cur[j - 1] + ins[j], prev[j - 1] + s});
      }
    } else {
      for (std::size_t j = 1; j < n; ++j)
        cur[j] = std::min({prev[j] + del, cur[j - 1] + ins[j],
                           prev[j - 1] + model.substitute_cost(ca, b[j - 1])});
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

Cost wld(std::string_view a, std::string_view b, const CostModel& model) {
  return wld(std::u32string_view(to_scalars(a)), std::u32string_view(to_scalars(b)),
             model);
}

namespace {

// Lev(i, j) over the first i scalars of `a` and first j of `b`, evaluated
// top-down exactly as the recurrence reads. Subresults are memoized; the
// unmemoized recursion visits a Delannoy number of states.
class OracleRecursion {
 public:
  OracleRecursion(std::u32string_view a, std::u32string_view b,
                  const CostModel& model)
      : a_(a), b_(b), model_(model) {
    for (std::size_t i = 0; i <= a.size(); ++i)
      std::fill_n(memo_[i].begin(), b.size() + 1, kUnset);
  }

  Cost lev(std::size_t i, std::size_t j) {
    Cost& slot = memo_[i][j];
    if (slot != kUnset) return slot;
    if (i == 0 || j == 0) {
      // Weighted form of max(i, j): sum the deletions or insertions.
      Cost sum = 0;
      for (std::size_t k = 0; k < i; ++k) sum += model_.delete_cost(a_[k]);
      for (std::size_t k = 0; k < j; ++k) sum += model_.insert_cost(b_[k]);
      return slot = sum;
    }
    return slot = std::min({get(i - 1, j) + model_.delete_cost(a_[i - 1]),
                            get(i, j - 1) + model_.insert_cost(b_[j - 1]),
                            get(i - 1, j - 1) +
                                model_.substitute_cost(a_[i - 1], b_[j - 1])});
  }

 private:
  // Memo probe before recursing; most sub-problems are already solved.
  Cost get(std::size_t i, std::size_t j) {
    const Cost known = memo_[i][j];
    return known != kUnset ? known : lev(i, j);
  }

  static constexpr Cost kUnset = std::numeric_limits<Cost>::max();

  std::u32string_view a_;
  std::u32string_view b_;
  const CostModel& model_;
  std::array<std::array<Cost, kOracleMaxLength + 1>, kOracleMaxLength + 1> memo_;
};

}  // namespace

Cost wld_oracle(std::u32string_view a, std::u32string_view b,
                const CostModel& model) {
  if (a.size() > kOracleMaxLength || b.size() > kOracleMaxLength)
    throw InputTooLong("wld_oracle accepts at most " +
                       std::to_string(kOracleMaxLength) + " scalars per word");
  return OracleRecursion(a, b, model).lev(a.size(), b.size());
}

Cost wld_oracle(std::string_view a, std::string_view b, const CostModel& model) {
  return wld_oracle(std::u32string_view(to_scalars(a)),
                    std::u32string_view(to_scalars(b)), model);
}

std::size_t plain_edit_distance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1,
                         prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::size_t plain_edit_distance(std::string_view a, std::string_view b) {
  return plain_edit_distance(std::u32string_view(to_scalars(a)),
                             std::u32string_view(to_scalars(b)));
}

}  // namespace wolofspell
