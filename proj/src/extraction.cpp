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

#include "fabula/extraction.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fabula/errors.hpp"
#include "fabula/quotes.hpp"

namespace fabula {
namespace {

struct FlatMention {
  int first;
  int last;
  int character;
};

std::vector<FlatMention> flatten_mentions(
    const std::vector<Character>& characters) {
  std::vector<FlatMention> flat;
  for (const auto& c : characters)
    for (const auto& m : c.mentions)
      flat.push_back({m.first_token, m.last_token, c.id});
  std::sort(flat.begin(), flat.end(), [](const FlatMention& a,
                                         const FlatMention& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.last < b.last;
  });
  return flat;
}

using WeightMap = std::unordered_map<std::uint64_t, int>;

std::uint64_t edge_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Counts co-occurring pairs over flat[lo, hi): for every mention, scan
// forward while the boundary gap stays within dist. The scan window is tiny
// compared to n for narrative inputs, and iterations over i are independent,
// which is what the parallel kernel exploits.
void sweep_pairs(const std::vector<FlatMention>& flat, std::size_t lo,
                 std::size_t hi, int dist, WeightMap& weights) {
  for (std::size_t i = lo; i < hi; ++i) {
    for (std::size_t j = i + 1; j < hi; ++j) {
      int gap = flat[j].first - flat[i].last;
      if (gap > dist) break;  // flat is sorted by first: gaps only grow
      if (gap < 0) continue;
      if (flat[i].character == flat[j].character) continue;
      ++weights[edge_key(flat[i].character, flat[j].character)];
    }
  }
}

CharacterNetwork build_network(const std::vector<Character>& characters,
                               const WeightMap& weights,
                               const std::vector<int>* vertex_ids,
                               const std::vector<int>* mention_counts) {
  CharacterNetwork net;
  std::map<std::pair<int, int>, int> ordered;
  for (const auto& [key, w] : weights)
    ordered[{static_cast<int>(key >> 32),
             static_cast<int>(key & 0xFFFFFFFFu)}] = w;

  std::map<int, int> degree;
  for (const auto& [pair, w] : ordered) {
    net.edges.push_back({pair.first, pair.second, w});
    ++degree[pair.first];
    ++degree[pair.second];
  }

  if (vertex_ids) {
    for (std::size_t k = 0; k < vertex_ids->size(); ++k) {
      int id = (*vertex_ids)[k];
      const Character& c = characters[id];
      net.vertices.push_back({c.id, c.canonical,
                              mention_counts ? (*mention_counts)[k]
                                             : static_cast<int>(c.mentions.size()),
                              degree.count(id) ? degree[id] : 0});
    }
  } else {
    for (const auto& c : characters)
      net.vertices.push_back({c.id, c.canonical,
                              static_cast<int>(c.mentions.size()),
                              degree.count(c.id) ? degree[c.id] : 0});
  }
  return net;
}

}  // namespace

std::vector<std::pair<int, int>> dynamic_windows(int token_count, int window,
                                                 int overlap) {
  if (window < 1) throw Error("dynamic_window must be >= 1");
  if (overlap < 0 || overlap >= window)
    throw Error("dynamic_overlap must be in [0, dynamic_window)");
  std::vector<std::pair<int, int>> windows;
  if (token_count <= 0) {
    windows.emplace_back(0, 0);
    return windows;
  }
  const int stride = window - overlap;
  for (int k = 0;; ++k) {
    int start = k * stride;
    if (k > 0 && start >= token_count) break;
    int end = start + window;
    windows.emplace_back(start, std::min(end, token_count));
    if (end >= token_count) break;
  }
  return windows;
}

CharacterNetwork extract_cooccurrence_static(
    const std::vector<Character>& characters, const ExtractionConfig& config) {
  if (config.co_occurrences_dist < 1)
    throw Error("co_occurrences_dist must be >= 1");
  const auto flat = flatten_mentions(characters);
  const int dist = config.co_occurrences_dist;
  const std::size_t n = flat.size();

  WeightMap weights;
#ifdef _OPENMP
  if (n > 2048) {
    const int threads = omp_get_max_threads();
    std::vector<WeightMap> partial(threads);
#pragma omp parallel num_threads(threads)
    {
      WeightMap& local = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          int gap = flat[j].first - flat[i].last;
          if (gap > dist) break;
          if (gap < 0) continue;
          if (flat[i].character == flat[j].character) continue;
          ++local[edge_key(flat[i].character, flat[j].character)];
        }
      }
    }
    for (const auto& part : partial)
      for (const auto& [key, w] : part) weights[key] += w;
  } else {
    sweep_pairs(flat, 0, n, dist, weights);
  }
#else
  sweep_pairs(flat, 0, n, dist, weights);
#endif

  return build_network(characters, weights, nullptr, nullptr);
}

DynamicNetwork extract_cooccurrence_dynamic(
    const std::vector<Character>& characters, const ExtractionConfig& config,
    int token_count) {
  if (!config.dynamic) throw Error("config.dynamic must be set");
  const auto windows =
      dynamic_windows(token_count, config.dynamic_window,
                      config.dynamic_overlap);
  const auto flat = flatten_mentions(characters);
  const int dist = config.co_occurrences_dist;
  const int slice_count = static_cast<int>(windows.size());

  DynamicNetwork net;
  net.slices.resize(slice_count);

  // Windows are independent given the mention list; each slice restricts the
  // sweep to mentions fully contained in its window. Results land in a
  // pre-sized vector, so assembly order is window order regardless of the
  // execution order.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int k = 0; k < slice_count; ++k) {
    const auto [w_start, w_end] = windows[k];
    auto begin = std::lower_bound(
        flat.begin(), flat.end(), w_start,
        [](const FlatMention& m, int v) { return m.first < v; });
    std::vector<FlatMention> contained;
    for (auto it = begin; it != flat.end() && it->first < w_end; ++it)
      if (it->last < w_end) contained.push_back(*it);

    WeightMap weights;
    sweep_pairs(contained, 0, contained.size(), dist, weights);

    std::map<int, int> active;  // character id -> mentions in window
    for (const auto& m : contained) ++active[m.character];
    std::vector<int> ids;
    std::vector<int> counts;
    for (const auto& [id, count] : active) {
      ids.push_back(id);
      counts.push_back(count);
    }

    NetworkSlice slice;
    slice.window_start = w_start;
    slice.window_end = w_end;
    slice.graph = build_network(characters, weights, &ids, &counts);
    net.slices[k] = std::move(slice);
  }
  return net;
}

CharacterNetwork extract_conversational(
    const std::vector<Quote>& quotes,
    const std::vector<SpeakerAttribution>& attributions,
    const std::vector<Character>& characters, int conversation_gap) {
  // Resolve attributed mentions to characters through the unifier partition.
  std::map<std::pair<int, int>, int> character_of_span;
  for (const auto& c : characters)
    for (const auto& m : c.mentions)
      character_of_span[{m.first_token, m.last_token}] = c.id;

  auto speaker_of = [&](int quote_index) -> int {
    for (const auto& a : attributions) {
      if (a.quote_index != quote_index) continue;
      if (!a.mention) return -1;
      auto it = character_of_span.find(
          {a.mention->first_token, a.mention->last_token});
      return it == character_of_span.end() ? -1 : it->second;
    }
    return -1;
  };

  WeightMap weights;
  for (const auto& [first, last] : segment_conversations(quotes,
                                                         conversation_gap)) {
    int previous = -1;
    for (int q = first; q <= last; ++q) {
      int speaker = speaker_of(q);
      if (speaker < 0) continue;  // skipped, conversation continues
      if (previous >= 0 && previous != speaker)
        ++weights[edge_key(previous, speaker)];
      previous = speaker;
    }
  }
  return build_network(characters, weights, nullptr, nullptr);
}

}  // namespace fabula
