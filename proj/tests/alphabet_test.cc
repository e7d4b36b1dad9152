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

#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "test_support.h"
#include "wolofspell/errors.h"

using namespace wolofspell;
using wolofspell::testing::enumerate_cuts;

namespace {

std::vector<std::u32string> texts(const Segmentation& s) {
  std::vector<std::u32string> out;
  for (const auto& g : s) out.push_back(g.text);
  return out;
}

std::vector<std::u32string> inventory() {
  std::vector<std::u32string> inv;
  for (const auto& [text, cls] : Alphabet::standard().entries()) inv.push_back(text);
  return inv;
}

}  // namespace

TEST_CASE("standard inventory sizes per class") {
  std::map<GraphemeClass, int> count;
  for (const auto& [text, cls] : Alphabet::standard().entries()) ++count[cls];
  CHECK(count[GraphemeClass::kWeakConsonant] == 20);
  CHECK(count[GraphemeClass::kGeminateConsonant] == 16);
  CHECK(count[GraphemeClass::kPrenasalizedConsonant] == 9);
  CHECK(count[GraphemeClass::kShortVowel] == 10);
  CHECK(count[GraphemeClass::kLongVowel] == 7);
  CHECK(Alphabet::standard().max_grapheme_length() == 2);
}

TEST_CASE("single-scalar letters") {
  const auto& letters = wolofspell::testing::wolof_letters();
  CHECK(letters.size() == 30);
  for (char32_t c : letters) CHECK(is_wolof_char(c));
  for (char32_t c : std::u32string(U"hvzç'- 1"))
    CHECK_FALSE(is_wolof_char(c));
  // Uppercase and decomposed forms normalize onto members.
  CHECK(Alphabet::standard().is_wolof_char(U'Ë'));
  CHECK_FALSE(is_wolof_char(U'h'));
}

TEST_CASE("classify") {
  const auto& a = Alphabet::standard();
  CHECK(a.classify(U"kk") == GraphemeClass::kGeminateConsonant);
  CHECK(a.classify(U"mb") == GraphemeClass::kPrenasalizedConsonant);
  CHECK(a.classify(U"aa") == GraphemeClass::kLongVowel);
  CHECK(a.classify(U"ë") == GraphemeClass::kShortVowel);
  CHECK(a.classify(U"x") == GraphemeClass::kWeakConsonant);
  CHECK_FALSE(a.classify(U"ëë").has_value());
  CHECK_FALSE(a.classify(U"h").has_value());
}

TEST_CASE("greedy segmentation examples") {
  const auto& a = Alphabet::standard();
  CHECK(texts(a.segment(U"dëkk")) == std::vector<std::u32string>{U"d", U"ë", U"kk"});
  CHECK(texts(a.segment(U"mbokk")) == std::vector<std::u32string>{U"mb", U"o", U"kk"});
  CHECK(texts(a.segment(U"ginnaaw")) ==
        std::vector<std::u32string>{U"g", U"i", U"nn", U"aa", U"w"});
  auto classes = a.segment(U"ndaw");
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].cls == GraphemeClass::kPrenasalizedConsonant);
  CHECK(classes[1].cls == GraphemeClass::kShortVowel);
  CHECK(classes[2].cls == GraphemeClass::kWeakConsonant);
  CHECK(a.segment(U"").empty());
  CHECK(a.segment(std::string_view("dëkk")).size() == 3);
}

TEST_CASE("segment_all matches exhaustive enumeration") {
  const auto inv = inventory();
  for (std::u32string word : {U"dëkk", U"mbokk", U"ginnaaw", U"ndaje", U"saakk", U"ñoppati"}) {
    std::vector<std::vector<std::u32string>> expected;
    std::vector<std::u32string> prefix;
    enumerate_cuts(word, inv, prefix, expected);
    std::set<std::vector<std::u32string>> want(expected.begin(), expected.end());
    std::set<std::vector<std::u32string>> got;
    const auto all = Alphabet::standard().segment_all(word);
    for (const auto& s : all) got.insert(texts(s));
    CHECK(got == want);
    CHECK(all.size() == expected.size());
    REQUIRE_FALSE(all.empty());
    CHECK(all.front() == Alphabet::standard().segment(word));
  }
  // Frozen counts: dëkk {d ë kk, d ë k k}; mbokk {mb,m b} x {kk,k k}.
  CHECK(Alphabet::standard().segment_all(U"dëkk").size() == 2);
  CHECK(Alphabet::standard().segment_all(U"mbokk").size() == 4);
}

TEST_CASE("segmentation round-trips over the sample lexicon") {
  for (const auto& line : wolofspell::testing::read_lines(
           wolofspell::testing::data_path("lexicon_sample.txt"))) {
    const std::u32string w = to_scalars(line);
    std::u32string joined;
    for (const auto& g : Alphabet::standard().segment(w)) joined += g.text;
    CHECK(joined == w);
  }
}

TEST_CASE("unsegmentable words") {
  const auto& a = Alphabet::standard();
  try {
    a.segment(U"thiossane");
    FAIL("expected Unsegmentable");
  } catch (const Unsegmentable& e) {
    CHECK(e.offset() == 1);
    CHECK(e.scalar() == U'h');
  }
  CHECK_FALSE(a.try_segment(U"chat").has_value());
  CHECK(a.segment_all(U"xh").empty());
}

TEST_CASE("override file") {
  std::istringstream in("# tiny\na\tshort\nb\tweak\nbb\tgeminate\n");
  Alphabet a = Alphabet::parse(in, "test");
  CHECK(a.entries().size() == 3);
  CHECK(a.segment(U"abba").size() == 3);
  CHECK_FALSE(a.is_wolof_char(U'k'));

  std::istringstream dup("a\tshort\na\tlong\n");
  CHECK_THROWS_AS(Alphabet::parse(dup, "dup"), MalformedInput);
  std::istringstream bad("a\tvowel\n");
  CHECK_THROWS_AS(Alphabet::parse(bad, "bad"), MalformedInput);
  CHECK_THROWS_AS(Alphabet::load("/nonexistent/alphabet.tsv"), IoError);
}
