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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fabula/config.hpp"
#include "fabula/injection.hpp"
#include "fabula/pipeline.hpp"

using namespace fabula;
using Key = ArtifactKey;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("fabula_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) {
    auto p = path_ / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
  std::filesystem::path path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("an entities file parses into mentions") {
  TempDir dir;
  auto path = dir.file("entities.tsv", "0\t1\tPER\n4\t4\tPER\n");
  auto value = read_injection_file(path, Key::Entities);
  const auto& mentions = std::get<std::vector<EntityMention>>(value);
  REQUIRE(mentions.size() == 2);
  CHECK(mentions[0].first_token == 0);
  CHECK(mentions[0].last_token == 1);
  CHECK(mentions[0].surface.empty());  // filled once tokens exist
}

TEST_CASE("an empty injection file is a valid empty artifact") {
  TempDir dir;
  auto path = dir.file("empty.tsv", "");
  auto value = read_injection_file(path, Key::Entities);
  CHECK(std::get<std::vector<EntityMention>>(value).empty());
}

TEST_CASE("comments and blank lines are skipped") {
  TempDir dir;
  auto path = dir.file("entities.tsv", "# header\n\n0\t0\tPER\n");
  auto value = read_injection_file(path, Key::Entities);
  CHECK(std::get<std::vector<EntityMention>>(value).size() == 1);
}

TEST_CASE("inverted spans are rejected with their line number") {
  TempDir dir;
  auto path = dir.file("entities.tsv", "0\t1\tPER\n5\t3\tPER\n");
  try {
    read_injection_file(path, Key::Entities);
    FAIL("expected MalformedArtifact");
  } catch (const MalformedArtifact& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("bad labels, bad numbers and overlaps are rejected") {
  TempDir dir;
  CHECK_THROWS_AS(
      read_injection_file(dir.file("a.tsv", "0\t1\tLOC\n"), Key::Entities),
      MalformedArtifact);
  CHECK_THROWS_AS(
      read_injection_file(dir.file("b.tsv", "x\t1\tPER\n"), Key::Entities),
      MalformedArtifact);
  CHECK_THROWS_AS(
      read_injection_file(dir.file("c.tsv", "0\t2\tPER\n1\t3\tPER\n"),
                          Key::Entities),
      MalformedArtifact);
}

TEST_CASE("coref chains parse from first:last spans") {
  TempDir dir;
  auto path = dir.file("corefs.tsv", "0:1\t4:4\n7:8\n");
  auto value = read_injection_file(path, Key::Corefs);
  const auto& chains = std::get<std::vector<CorefChain>>(value);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].mentions.size() == 2);
  CHECK(chains[0].mentions[1].first_token == 4);
  CHECK(chains[1].mentions.size() == 1);
}

TEST_CASE("quote records parse with default and explicit marks") {
  TempDir dir;
  auto path = dir.file("quotes.tsv", "0\t3\n5\t8\t«\t»\n");
  auto value = read_injection_file(path, Key::Quotes);
  const auto& quotes = std::get<std::vector<Quote>>(value);
  REQUIRE(quotes.size() == 2);
  CHECK(quotes[0].open_mark == "\"");
  CHECK(quotes[1].open_mark == "«");
}

TEST_CASE("non-injectable keys are refused") {
  TempDir dir;
  auto path = dir.file("x.tsv", "");
  CHECK_THROWS_AS(read_injection_file(path, Key::Tokens), MalformedArtifact);
  CHECK_THROWS_AS(read_injection_file(path, Key::Text), MalformedArtifact);
}

TEST_CASE("injected entities replace the ner step end to end") {
  TempDir dir;
  // "Ana met Bob. Ana met Bob." with entities injected instead of NER.
  auto entities = dir.file("entities.tsv",
                           "0\t0\tPER\n2\t2\tPER\n4\t4\tPER\n6\t6\tPER\n");
  auto config_path = dir.file("run.json", R"({
    "version": 1,
    "language": "eng",
    "steps": [
      {"name": "tokenizer"},
      {"name": "naive_unifier", "min_appearance": 2},
      {"name": "cooccurrence_extractor", "co_occurrences_dist": 10}
    ],
    "inject": {"entities": ")" + entities + R"("}
  })");
  auto config = load_config(config_path);
  auto pipeline = build_pipeline(config);
  auto injected = load_injections(config);

  KeySet injected_keys;
  for (const auto& [key, value] : injected) injected_keys.insert(key);
  CHECK(pipeline.validate("eng", injected_keys).valid);
  CHECK(!pipeline.validate("eng").valid);  // without injection: missing

  auto state = pipeline.run("Ana met Bob. Ana met Bob.", "eng", injected);
  const auto& mentions = state.get<std::vector<EntityMention>>(Key::Entities);
  REQUIRE(mentions.size() == 4);
  CHECK(mentions[0].surface == "Ana");  // surface filled from tokens
  CHECK(mentions[1].surface == "Bob");
  const auto& network = state.get<NetworkArtifact>(Key::CharacterNetwork);
  CHECK(network.static_network().vertices.size() == 2);
  REQUIRE(network.static_network().edges.size() == 1);
  CHECK(network.static_network().edges[0].weight >= 2);
  CHECK(state.provenance.at(Key::Entities) == "injected");
}

TEST_CASE("injected coref chains merge spellings during unification") {
  TempDir dir;
  // Token layout of the text below:
  //   0 Elizabeth 1 read 2 . 3 Miss 4 Bennet 5 read 6 . (x2 with offsets)
  const std::string text =
      "Elizabeth read. Miss Bennet read. Elizabeth read. Miss Bennet read.";
  auto corefs = dir.file("corefs.tsv", "0:0\t3:4\t7:7\t10:11\n");
  auto config_path = dir.file("run.json", R"({
    "version": 1,
    "steps": [
      {"name": "tokenizer"},
      {"name": "ner"},
      {"name": "graph_rules_unifier"}
    ],
    "inject": {"corefs": ")" + corefs + R"("}
  })");
  auto config = load_config(config_path);
  auto pipeline = build_pipeline(config);

  auto without = pipeline.run(text, "eng");
  CHECK(without.get<std::vector<Character>>(Key::Characters).size() == 2);

  auto with = pipeline.run(text, "eng", load_injections(config));
  const auto& characters = with.get<std::vector<Character>>(Key::Characters);
  REQUIRE(characters.size() == 1);
  CHECK(characters[0].names.size() == 2);
  CHECK(with.provenance.at(Key::Corefs) == "injected");
}

TEST_CASE("configs validate their shape strictly") {
  TempDir dir;
  CHECK_THROWS_AS(load_config(dir.file("a.json", "{")), ConfigError);
  CHECK_THROWS_AS(load_config(dir.file("b.json", R"({"steps": 3})")),
                  ConfigError);
  CHECK_THROWS_AS(
      load_config(dir.file("c.json", R"({"steps": [], "nope": 1})")),
      ConfigError);
  CHECK_THROWS_AS(
      load_config(dir.file(
          "d.json", R"({"steps": [{"name": "no_such_step"}]})")),
      ConfigError);
  CHECK_THROWS_AS(
      load_config(dir.file(
          "e.json", R"({"steps": [], "inject": {"banana": "x"}})")),
      ConfigError);
  CHECK_THROWS_AS(
      load_config(dir.file("f.json", R"({"version": 2, "steps": []})")),
      ConfigError);

  // Unknown step options fail at build time.
  auto config = load_config(dir.file(
      "g.json", R"({"steps": [{"name": "tokenizer", "bogus": 1}]})"));
  CHECK_THROWS_AS(build_pipeline(config), ConfigError);
}

TEST_CASE("steps can be plain names in the config") {
  TempDir dir;
  auto config = load_config(dir.file(
      "h.json", R"({"steps": ["tokenizer", "ner", "naive_unifier"]})"));
  REQUIRE(config.steps.size() == 3);
  auto pipeline = build_pipeline(config);
  CHECK(pipeline.validate("eng").valid);
}

TEST_CASE("resource tables load from a resource directory") {
  TempDir dir;
  std::filesystem::create_directories(dir.path() / "res");
  {
    std::ofstream out(dir.path() / "res" / "gazetteer_eng.txt");
    out << "zorblatt\n";
  }
  auto r = ResourceSet::for_language("eng", (dir.path() / "res").string());
  CHECK(r.gazetteer.count("zorblatt") == 1);
  CHECK(!r.abbreviations.empty());  // built-ins still present
}

TEST_CASE("the FABULA_RESOURCES environment variable reaches the pipeline") {
  TempDir dir;
  std::filesystem::create_directories(dir.path() / "res");
  {
    std::ofstream out(dir.path() / "res" / "gazetteer_eng.txt");
    out << "glorfindel\n";
  }
  ::setenv("FABULA_RESOURCES", (dir.path() / "res").c_str(), 1);
  RunConfig config;
  config.steps.push_back({"tokenizer", nlohmann::json::object()});
  config.steps.push_back({"ner", nlohmann::json::object()});
  auto pipeline = build_pipeline(config);
  auto state = pipeline.run("They met Glorfindel once.", "eng");
  ::unsetenv("FABULA_RESOURCES");
  const auto& mentions = state.get<std::vector<EntityMention>>(Key::Entities);
  REQUIRE(mentions.size() == 1);
  CHECK(mentions[0].surface == "Glorfindel");
}

TEST_CASE("the shipped resource files parse") {
#ifdef FABULA_DATA_DIR
  const std::string dir = FABULA_DATA_DIR;
  ResourceSet r;
  r.load_table("abbreviations", dir + "/abbreviations_eng.txt");
  r.load_table("honorifics", dir + "/honorifics_eng.txt");
  r.load_table("stopwords", dir + "/stopwords_eng.txt");
  r.load_table("speech_verbs", dir + "/speech_verbs_eng.txt");
  r.load_table("gendered_titles", dir + "/gendered_titles_eng.tsv");
  r.load_table("hypocorisms", dir + "/hypocorisms_eng.tsv");
  r.load_table("gazetteer", dir + "/gazetteer_eng.txt");
  CHECK(r.abbreviations.count("mr."));
  CHECK(r.honorifics.count("miss"));
  CHECK(r.gendered_titles.at("mrs") == 'f');
  CHECK(!r.hypocorisms.at("lizzy").empty());
#endif
}
