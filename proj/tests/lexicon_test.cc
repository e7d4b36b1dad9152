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
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "doctest.h"
#include "test_support.h"
#include "wolofspell/errors.h"

using namespace wolofspell;
namespace wt = wolofspell::testing;

TEST_CASE("empty trie") {
  TrieDict t;
  CHECK(t.empty());
  CHECK(t.word_count() == 0);
  CHECK(t.node_count() == 1);
  CHECK_FALSE(t.contains(""));
  CHECK(t.words().empty());
}

TEST_CASE("from_words normalizes and deduplicates") {
  const std::vector<std::string> words{"dëkk", "DËKK", "dëkk", "dem", "bi", "dem"};
  const auto t = TrieDict::from_words(words);
  CHECK(t.word_count() == 3);
  CHECK(t.contains("dëkk"));
  CHECK(t.contains(U"dem"));
  CHECK_FALSE(t.contains("dë"));
  CHECK_FALSE(t.contains("dëkkk"));
  CHECK(t.words() == std::vector<std::string>{"bi", "dem", "dëkk"});
  // root, b, bi, d, de, dem, dë, dëk, dëkk
  CHECK(t.node_count() == 9);
}

TEST_CASE("words() is sorted by scalar value and complete") {
  const auto t = TrieDict::load(wt::data_path("lexicon_sample.txt"));
  const auto words = t.words();
  CHECK(words.size() == t.word_count());
  CHECK(std::is_sorted(words.begin(), words.end(), [](const auto& a, const auto& b) {
    return to_scalars(a) < to_scalars(b);
  }));
  for (const auto& w : words) CHECK(t.contains(w));
  CHECK(TrieDict::from_words(words).words() == words);
}

TEST_CASE("membership agrees with a hash set on random probes") {
  std::mt19937 rng(20261018);
  const std::u32string letters = U"abdeëkmnños";
  std::vector<std::string> words;
  for (int i = 0; i < 400; ++i) words.push_back(to_utf8(wt::random_word(rng, letters, 1, 6)));
  const auto t = TrieDict::from_words(words);
  const std::unordered_set<std::string> oracle(words.begin(), words.end());
  CHECK(t.word_count() == oracle.size());
  for (int i = 0; i < 10000; ++i) {
    const std::string probe = to_utf8(wt::random_word(rng, letters, 0, 7));
    CHECK(t.contains(probe) == (oracle.count(probe) == 1));
  }
}

TEST_CASE("edges are label-sorted") {
  const auto t = TrieDict::load(wt::data_path("lexicon_sample.txt"));
  for (TrieDict::NodeId n = 0; n < t.node_count(); ++n) {
    auto kids = t.children(n);
    CHECK(std::is_sorted(kids.begin(), kids.end(),
                         [](const auto& a, const auto& b) { return a.label < b.label; }));
  }
}

TEST_CASE("lexicon file parsing") {
  std::istringstream in("\xEF\xBB\xBF# comment\r\n  dëkk \r\n\r\nbi\nbi\n");
  const auto t = TrieDict::parse(in, "mem");
  CHECK(t.word_count() == 2);
  CHECK(t.contains("dëkk"));

  std::istringstream bad("dëkk\nxar 2\n");
  try {
    TrieDict::parse(bad, "bad.txt");
    FAIL("expected MalformedLexicon");
  } catch (const MalformedLexicon& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream digit("x4r\n");
  CHECK_THROWS_AS(TrieDict::parse(digit, "d"), MalformedLexicon);
  CHECK_THROWS_AS(TrieDict::load("/nonexistent/lexicon.txt"), IoError);
  CHECK_THROWS_AS(TrieDict::load(wt::fixture_path("malformed_lexicon.txt")), MalformedLexicon);
}
