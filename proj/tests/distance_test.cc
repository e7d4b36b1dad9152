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

#include <random>
#include <sstream>

#include "doctest.h"
#include "test_support.h"
#include "wolofspell/errors.h"

using namespace wolofspell;
namespace wt = wolofspell::testing;

TEST_CASE("built-in substitution costs") {
  const CostModel m;
  const std::pair<char32_t, char32_t> couples[] = {
      {U'a', U'à'}, {U'a', U'ã'}, {U'o', U'ó'}, {U'e', U'é'},
      {U'e', U'ë'}, {U'é', U'ë'}, {U'x', U'q'}};
  for (auto [a, b] : couples) {
    CHECK(m.substitute_cost(a, b) == 1);
    CHECK(m.substitute_cost(b, a) == 1);
  }
  CHECK(m.substitute_cost(U'a', U'e') == 2);
  CHECK(m.substitute_cost(U'à', U'ã') == 2);
  CHECK(m.substitute_cost(U'k', U'k') == 0);
  CHECK(m.insert_cost(U'k') == 1);
  CHECK(m.delete_cost(U'ë') == 1);
  CHECK(m.override_count() == 7);
  CHECK(CostModel::without_overrides().override_count() == 0);
  CHECK(CostModel::unit().substitute_cost(U'a', U'e') == 1);
}

TEST_CASE("frozen distances") {
  const CostModel m;
  CHECK(wld(std::string_view("deuk"), std::string_view("dëkk"), m) == 3);
  CHECK(wld(std::string_view("dëk"), std::string_view("dëkk"), m) == 1);
  CHECK(wld(std::string_view("tank"), std::string_view("tànk"), m) == 1);
  CHECK(wld(std::string_view("saxar"), std::string_view("saxaar"), m) == 1);
  CHECK(wld(std::string_view("ginaw"), std::string_view("ginnaaw"), m) == 2);
  CHECK(wld(std::string_view(""), std::string_view("bi"), m) == 2);
  CHECK(plain_edit_distance(std::string_view("guinaw"), std::string_view("ginnaaw")) == 3);
  CHECK(plain_edit_distance(std::string_view("kitten"), std::string_view("sitting")) == 3);
  // Values cross-checked against the recursion.
  CHECK(wld_oracle(std::string_view("deuk"), std::string_view("dëkk"), m) == 3);
  CHECK(wld_oracle(std::string_view("guinaw"), std::string_view("ginnaaw"), CostModel::unit()) == 3);
}

TEST_CASE("dense DP matches the unmemoized recursion") {
  std::mt19937 rng(11);
  const std::u32string letters = U"aàeëékqx";
  const CostModel models[] = {CostModel(), CostModel::unit(), CostModel::without_overrides()};
  for (int i = 0; i < 300; ++i) {
    const auto a = wt::random_word(rng, letters, 0, 5);
    const auto b = wt::random_word(rng, letters, 0, 5);
    for (const auto& m : models) {
      const Cost expected = wt::raw_recursion(a, b, m);
      CHECK(wld(a, b, m) == expected);
      CHECK(wld_oracle(a, b, m) == expected);
      CHECK(DpMatrix(a, b, m).result() == expected);
    }
  }
}

TEST_CASE("matrix borders and corner") {
  const CostModel m;
  const DpMatrix d(U"dëkk", U"deuk", m);
  CHECK(d.rows() == 5);
  CHECK(d.cols() == 5);
  for (std::size_t i = 0; i < d.rows(); ++i) CHECK(d.at(i, 0) == i);
  for (std::size_t j = 0; j < d.cols(); ++j) CHECK(d.at(0, j) == j);
  CHECK(d.result() == wld(std::u32string_view(U"dëkk"), U"deuk", m));
}

TEST_CASE("metric properties") {
  std::mt19937 rng(3);
  const CostModel m;
  const std::u32string letters = U"aàãeéëoókqxnm";
  for (int i = 0; i < 500; ++i) {
    const auto a = wt::random_word(rng, letters, 0, 8);
    const auto b = wt::random_word(rng, letters, 0, 8);
    const auto c = wt::random_word(rng, letters, 0, 8);
    CHECK(wld(a, a, m) == 0);
    CHECK(wld(a, b, m) == wld(b, a, m));
    CHECK((wld(a, b, m) == 0) == (a == b));
    CHECK(wld(a, c, m) <= wld(a, b, m) + wld(b, c, m));
    CHECK(wld(a, b, m) <= a.size() + b.size());
    CHECK(wld(a, b, m) >= plain_edit_distance(a, b));
    CHECK(wld(a, b, m) <= 2 * plain_edit_distance(a, b));
  }
}

TEST_CASE("long inputs use the heap path") {
  const std::u32string a(100, U'a');
  const std::u32string b(90, U'à');
  CHECK(wld(a, b, CostModel()) == 100);
}

TEST_CASE("oracle refuses long input") {
  const std::u32string w(kOracleMaxLength + 1, U'a');
  CHECK_THROWS_AS(wld_oracle(w, std::u32string_view(U"a"), CostModel()), InputTooLong);
  CHECK_NOTHROW(wld_oracle(w.substr(1), std::u32string_view(U"a"), CostModel()));
}

TEST_CASE("cost file") {
  std::istringstream in("# ours\ni\té\t1\nu\to\t0\n");
  const CostModel m = CostModel::parse(in, "mem");
  CHECK(m.override_count() == 2);
  CHECK(m.substitute_cost(U'é', U'i') == 1);
  CHECK(m.substitute_cost(U'u', U'o') == 0);
  CHECK(m.substitute_cost(U'a', U'à') == 2);  // file replaces built-ins

  std::istringstream neg("a\tb\t-1\n");
  CHECK_THROWS_AS(CostModel::parse(neg, "neg"), MalformedInput);
  std::istringstream same("a\ta\t1\n");
  CHECK_THROWS_AS(CostModel::parse(same, "same"), MalformedInput);
  std::istringstream frac("a\tb\t1.5\n");
  CHECK_THROWS_AS(CostModel::parse(frac, "frac"), MalformedInput);
  std::istringstream multi("ab\tc\t1\n");
  CHECK_THROWS_AS(CostModel::parse(multi, "multi"), MalformedInput);
  CHECK_THROWS_AS(CostModel::load("/nonexistent/costs.tsv"), IoError);
}

TEST_CASE("custom indel costs") {
  CostModel m = CostModel::without_overrides();
  m.set_insert_cost(U'k', 5);
  m.set_delete_cost(U'k', 7);
  CHECK(wld(std::u32string_view(U""), U"k", m) == 5);
  CHECK(wld(std::u32string_view(U"k"), U"", m) == 7);
  CHECK_THROWS(m.set_substitution(U'a', U'a', 1));
}
