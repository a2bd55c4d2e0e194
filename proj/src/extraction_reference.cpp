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

#include "fabula/extraction_reference.hpp"

#include <algorithm>
#include <map>

namespace fabula::reference {
namespace {

struct Occurrence {
  int first;
  int last;
  int character;
};

std::vector<Occurrence> all_mentions(
    const std::vector<Character>& characters) {
  std::vector<Occurrence> out;
  for (const auto& c : characters)
    for (const auto& m : c.mentions)
      out.push_back({m.first_token, m.last_token, c.id});
  return out;
}

// Unordered pair counting over every cross-character mention pair: order the
// two mentions by position, take the boundary gap, and count it when within
// distance. No sorting, no early exit.
std::map<std::pair<int, int>, int> count_pairs(
    const std::vector<Occurrence>& mentions, int dist) {
  std::map<std::pair<int, int>, int> weights;
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    for (std::size_t j = i + 1; j < mentions.size(); ++j) {
      const Occurrence& a = mentions[i];
      const Occurrence& b = mentions[j];
      if (a.character == b.character) continue;
      const Occurrence& earlier = (a.first <= b.first) ? a : b;
      const Occurrence& later = (a.first <= b.first) ? b : a;
      int gap = later.first - earlier.last;
      if (gap < 0 || gap > dist) continue;
      int lo = std::min(a.character, b.character);
      int hi = std::max(a.character, b.character);
      ++weights[{lo, hi}];
    }
  }
  return weights;
}

CharacterNetwork to_network(const std::vector<Character>& characters,
                            const std::map<std::pair<int, int>, int>& weights,
                            const std::map<int, int>* active) {
  CharacterNetwork net;
  std::map<int, int> degree;
  for (const auto& [pair, w] : weights) {
    net.edges.push_back({pair.first, pair.second, w});
    ++degree[pair.first];
    ++degree[pair.second];
  }
  if (active) {
    for (const auto& [id, count] : *active)
      net.vertices.push_back({id, characters[id].canonical, count,
                              degree.count(id) ? degree[id] : 0});
  } else {
    for (const auto& c : characters)
      net.vertices.push_back({c.id, c.canonical,
                              static_cast<int>(c.mentions.size()),
                              degree.count(c.id) ? degree[c.id] : 0});
  }
  return net;
}

}  // namespace

CharacterNetwork cooccurrence_static(const std::vector<Character>& characters,
                                     const ExtractionConfig& config) {
  auto mentions = all_mentions(characters);
  auto weights = count_pairs(mentions, config.co_occurrences_dist);
  return to_network(characters, weights, nullptr);
}

DynamicNetwork cooccurrence_dynamic(const std::vector<Character>& characters,
                                    const ExtractionConfig& config,
                                    int token_count) {
  DynamicNetwork net;
  const int stride = config.dynamic_window - config.dynamic_overlap;
  auto mentions = all_mentions(characters);
  for (int k = 0;; ++k) {
    int start = k * stride;
    if (k > 0 && start >= token_count) break;
    int end = start + config.dynamic_window;
    int clipped = std::min(end, std::max(token_count, 0));
    std::vector<Occurrence> contained;
    for (const auto& m : mentions)
      if (m.first >= start && m.last < clipped) contained.push_back(m);
    std::map<int, int> active;
    for (const auto& m : contained) ++active[m.character];
    auto weights = count_pairs(contained, config.co_occurrences_dist);
    NetworkSlice slice;
    slice.window_start = start;
    slice.window_end = clipped;
    slice.graph = to_network(characters, weights, &active);
    net.slices.push_back(std::move(slice));
    if (end >= token_count) break;
    if (token_count <= 0) break;
  }
  return net;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
cooccurrence_pairs(const std::vector<Character>& characters,
                   const ExtractionConfig& config) {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  auto mentions = all_mentions(characters);
  for (std::size_t i = 0; i < mentions.size(); ++i) {
    for (std::size_t j = i + 1; j < mentions.size(); ++j) {
      const Occurrence& a = mentions[i];
      const Occurrence& b = mentions[j];
      if (a.character == b.character) continue;
      const Occurrence& earlier = (a.first <= b.first) ? a : b;
      const Occurrence& later = (a.first <= b.first) ? b : a;
      int gap = later.first - earlier.last;
      if (gap < 0 || gap > config.co_occurrences_dist) continue;
      pairs.push_back({{std::min(a.character, b.character),
                        std::max(a.character, b.character)},
                       {earlier.first, later.first}});
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace fabula::reference
