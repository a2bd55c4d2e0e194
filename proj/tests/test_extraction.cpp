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
#include "fabula/extraction.hpp"
#include "fabula/extraction_reference.hpp"
#include "test_support.hpp"

using namespace fabula;

namespace {

// Characters A and B with single-token mentions at the given positions.
std::vector<Character> two_characters(const std::vector<int>& a_positions,
                                      const std::vector<int>& b_positions) {
  std::vector<Character> cast(2);
  cast[0].id = 0;
  cast[0].canonical = "A";
  cast[0].names = {"A"};
  for (int p : a_positions) cast[0].mentions.push_back({p, p, "A"});
  cast[1].id = 1;
  cast[1].canonical = "B";
  cast[1].names = {"B"};
  for (int p : b_positions) cast[1].mentions.push_back({p, p, "B"});
  return cast;
}

ExtractionConfig static_config(int dist) {
  ExtractionConfig c;
  c.co_occurrences_dist = dist;
  return c;
}

ExtractionConfig dynamic_config(int dist, int window, int overlap = 0) {
  ExtractionConfig c;
  c.co_occurrences_dist = dist;
  c.dynamic = true;
  c.dynamic_window = window;
  c.dynamic_overlap = overlap;
  return c;
}

}  // namespace

TEST_CASE("two nearby mentions make one edge") {
  auto net = extract_cooccurrence_static(two_characters({0}, {5}),
                                         static_config(10));
  REQUIRE(net.edges.size() == 1);
  CHECK(net.edges[0] == NetworkEdge{0, 1, 1});
  REQUIRE(net.vertices.size() == 2);
  CHECK(net.vertices[0].degree == 1);
  CHECK(net.vertices[1].degree == 1);
}

TEST_CASE("mentions beyond the distance leave isolated vertices") {
  auto net = extract_cooccurrence_static(two_characters({0}, {20}),
                                         static_config(10));
  CHECK(net.edges.empty());
  REQUIRE(net.vertices.size() == 2);
  CHECK(net.vertices[0].degree == 0);
  CHECK(net.vertices[1].degree == 0);
}

TEST_CASE("every qualifying mention pair counts") {
  auto net = extract_cooccurrence_static(two_characters({0, 8}, {5}),
                                         static_config(10));
  REQUIRE(net.edges.size() == 1);
  CHECK(net.edges[0].weight == 2);
}

TEST_CASE("multi-token mentions measure the boundary gap") {
  std::vector<Character> cast(2);
  cast[0] = {0, {"A"}, "A", {{0, 4, "A"}}};
  cast[1] = {1, {"B"}, "B", {{7, 9, "B"}}};
  // gap = 7 - 4 = 3
  CHECK(extract_cooccurrence_static(cast, static_config(3)).edges.size() == 1);
  CHECK(extract_cooccurrence_static(cast, static_config(2)).edges.empty());
}

TEST_CASE("no self-loops, endpoints ordered, weights positive") {
  std::mt19937 rng(5);
  for (int iteration = 0; iteration < 50; ++iteration) {
    auto cast = testsupport::random_layout(rng);
    auto net = extract_cooccurrence_static(cast, static_config(5));
    for (const auto& e : net.edges) {
      CHECK(e.a < e.b);
      CHECK(e.weight >= 1);
    }
  }
}

TEST_CASE("the parallel kernel matches the serial reference exactly") {
  std::mt19937 rng(17);
  for (int iteration = 0; iteration < 200; ++iteration) {
    auto cast = testsupport::random_layout(rng);
    for (int dist : {1, 5, 10}) {
      auto fast = extract_cooccurrence_static(cast, static_config(dist));
      auto slow = reference::cooccurrence_static(cast, static_config(dist));
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("distance growth never decreases a weight") {
  std::mt19937 rng(23);
  for (int iteration = 0; iteration < 30; ++iteration) {
    auto cast = testsupport::random_layout(rng);
    auto small = extract_cooccurrence_static(cast, static_config(3));
    auto large = extract_cooccurrence_static(cast, static_config(9));
    for (const auto& e : small.edges) {
      bool found = false;
      for (const auto& f : large.edges)
        if (f.a == e.a && f.b == e.b) {
          found = true;
          CHECK(f.weight >= e.weight);
        }
      CHECK(found);
    }
  }
}

TEST_CASE("window layout covers the tokens and clips the tail") {
  auto windows = dynamic_windows(250, 100, 0);
  REQUIRE(windows.size() == 3);
  CHECK(windows[0] == std::pair<int, int>{0, 100});
  CHECK(windows[1] == std::pair<int, int>{100, 200});
  CHECK(windows[2] == std::pair<int, int>{200, 250});

  auto overlapping = dynamic_windows(250, 100, 50);
  REQUIRE(overlapping.size() == 4);
  CHECK(overlapping[1] == std::pair<int, int>{50, 150});
  CHECK(overlapping[3] == std::pair<int, int>{150, 250});

  CHECK(dynamic_windows(100, 100, 0).size() == 1);
  CHECK_THROWS_AS(dynamic_windows(10, 0, 0), Error);
  CHECK_THROWS_AS(dynamic_windows(10, 5, 5), Error);
}

TEST_CASE("a single window equals the static graph") {
  std::mt19937 rng(29);
  for (int iteration = 0; iteration < 40; ++iteration) {
    auto cast = testsupport::random_layout(rng);
    int tokens = std::max(testsupport::layout_token_count(cast), 1);
    auto dynamic = extract_cooccurrence_dynamic(
        cast, dynamic_config(5, tokens), tokens);
    REQUIRE(dynamic.slices.size() == 1);
    auto expected = extract_cooccurrence_static(cast, static_config(5));
    // Slice vertices hold only active characters; edges must match exactly.
    CHECK(dynamic.slices[0].graph.edges == expected.edges);
  }
}

TEST_CASE("mentions only in the first window leave later slices empty") {
  auto cast = two_characters({0, 2}, {4});
  auto net = extract_cooccurrence_dynamic(cast, dynamic_config(10, 50), 100);
  REQUIRE(net.slices.size() == 2);
  CHECK(net.slices[0].graph.edges.size() == 1);
  CHECK(net.slices[1].graph.vertices.empty());
  CHECK(net.slices[1].graph.edges.empty());
}

TEST_CASE("a pair straddling a window boundary is dropped from both slices") {
  auto cast = two_characters({48}, {52});
  auto stat = extract_cooccurrence_static(cast, static_config(10));
  REQUIRE(stat.edges.size() == 1);
  auto dynamic = extract_cooccurrence_dynamic(cast, dynamic_config(10, 50), 100);
  REQUIRE(dynamic.slices.size() == 2);
  CHECK(dynamic.slices[0].graph.edges.empty());
  CHECK(dynamic.slices[1].graph.edges.empty());
  // The straddling mentions still appear as active vertices of their windows.
  REQUIRE(dynamic.slices[0].graph.vertices.size() == 1);
  CHECK(dynamic.slices[0].graph.vertices[0].canonical == "A");
}

TEST_CASE("the dynamic kernel matches the serial reference exactly") {
  std::mt19937 rng(31);
  for (int iteration = 0; iteration < 100; ++iteration) {
    auto cast = testsupport::random_layout(rng);
    int tokens = std::max(testsupport::layout_token_count(cast), 1);
    for (auto [window, overlap] : {std::pair{20, 0}, {35, 10}, {64, 16}}) {
      auto fast = extract_cooccurrence_dynamic(
          cast, dynamic_config(5, window, overlap), tokens);
      auto slow = reference::cooccurrence_dynamic(
          cast, dynamic_config(5, window, overlap), tokens);
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("slice edges depend only on mentions inside the window") {
  auto cast = two_characters({10, 60}, {12, 63});
  auto net = extract_cooccurrence_dynamic(cast, dynamic_config(10, 50), 100);
  REQUIRE(net.slices.size() == 2);
  auto first_slice = net.slices[0].graph;

  // Perturb mentions outside window 0; slice 0 must not change.
  auto perturbed = two_characters({10, 55}, {12, 75});
  auto net2 = extract_cooccurrence_dynamic(perturbed, dynamic_config(10, 50),
                                           100);
  CHECK(net2.slices[0].graph == first_slice);
}

TEST_CASE("empty inputs produce empty networks") {
  ExtractionConfig config;
  auto stat = extract_cooccurrence_static({}, config);
  CHECK(stat.vertices.empty());
  CHECK(stat.edges.empty());

  config.dynamic = true;
  config.dynamic_window = 50;
  auto dyn = extract_cooccurrence_dynamic({}, config, 0);
  REQUIRE(dyn.slices.size() == 1);
  CHECK(dyn.slices[0].window_start == 0);
  CHECK(dyn.slices[0].window_end == 0);
  CHECK(dyn.slices[0].graph.vertices.empty());
  CHECK(dyn == reference::cooccurrence_dynamic({}, config, 0));
}

TEST_CASE("alternating speakers build conversational weight") {
  auto cast = two_characters({0}, {10});
  std::vector<Quote> quotes = {{0, 2, "\"", "\""},
                               {4, 6, "\"", "\""},
                               {8, 10, "\"", "\""},
                               {12, 14, "\"", "\""}};
  std::vector<SpeakerAttribution> attributions(4);
  for (int i = 0; i < 4; ++i) {
    attributions[i].quote_index = i;
    attributions[i].method = AttributionMethod::Nearest;
    attributions[i].mention =
        (i % 2 == 0) ? cast[0].mentions[0] : cast[1].mentions[0];
  }
  auto net = extract_conversational(quotes, attributions, cast, 100);
  REQUIRE(net.edges.size() == 1);
  CHECK(net.edges[0] == NetworkEdge{0, 1, 3});
}

TEST_CASE("unattributed quotes are skipped without breaking a conversation") {
  auto cast = two_characters({0}, {10});
  std::vector<Quote> quotes = {{0, 2, "\"", "\""},
                               {4, 6, "\"", "\""},
                               {8, 10, "\"", "\""}};
  std::vector<SpeakerAttribution> attributions(3);
  attributions[0] = {0, cast[0].mentions[0], AttributionMethod::Nearest};
  attributions[1] = {1, std::nullopt, AttributionMethod::None};
  attributions[2] = {2, cast[1].mentions[0], AttributionMethod::Nearest};
  auto net = extract_conversational(quotes, attributions, cast, 100);
  REQUIRE(net.edges.size() == 1);
  CHECK(net.edges[0].weight == 1);
}

TEST_CASE("all quotes unattributed yields an empty edge set") {
  auto cast = two_characters({0}, {10});
  std::vector<Quote> quotes = {{0, 2, "\"", "\""}, {4, 6, "\"", "\""}};
  std::vector<SpeakerAttribution> attributions(2);
  attributions[0] = {0, std::nullopt, AttributionMethod::None};
  attributions[1] = {1, std::nullopt, AttributionMethod::None};
  auto net = extract_conversational(quotes, attributions, cast, 100);
  CHECK(net.edges.empty());
  CHECK(net.vertices.size() == 2);  // isolates kept
}

TEST_CASE("conversations apart by more than the gap never link") {
  auto cast = two_characters({0}, {500});
  std::vector<Quote> quotes = {{0, 2, "\"", "\""}, {400, 402, "\"", "\""}};
  std::vector<SpeakerAttribution> attributions(2);
  attributions[0] = {0, cast[0].mentions[0], AttributionMethod::Nearest};
  attributions[1] = {1, cast[1].mentions[0], AttributionMethod::Nearest};
  auto separate = extract_conversational(quotes, attributions, cast, 100);
  CHECK(separate.edges.empty());
  auto joined = extract_conversational(quotes, attributions, cast, 500);
  CHECK(joined.edges.size() == 1);
}
