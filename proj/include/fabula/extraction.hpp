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

#ifndef FABULA_EXTRACTION_HPP_
#define FABULA_EXTRACTION_HPP_

#include <utility>
#include <vector>

#include "fabula/types.hpp"

namespace fabula {

// Static co-occurrence network. For every pair of mentions of distinct
// characters whose token gap (later.first_token - earlier.last_token) is
// between 0 and co_occurrences_dist, the pair's edge weight is incremented.
// Vertices cover all characters, isolates included. The kernel is a sorted
// sweep, parallelized with OpenMP when available; weights are integer sums,
// so the result does not depend on the thread count.
CharacterNetwork extract_cooccurrence_static(
    const std::vector<Character>& characters, const ExtractionConfig& config);

// Dynamic co-occurrence network over sliding token windows
// [k*(window-overlap), k*(window-overlap)+window). Each slice applies the
// static rule to the mentions fully contained in its window and its vertex
// set holds only the characters active there. Slices are computed in
// parallel and assembled in window order.
DynamicNetwork extract_cooccurrence_dynamic(
    const std::vector<Character>& characters, const ExtractionConfig& config,
    int token_count);

// The window layout used by dynamic extraction: [start, end) pairs, ordered,
// generated until the last token is covered; the final window is clipped to
// token_count. With overlap 0 the windows partition [0, token_count).
std::vector<std::pair<int, int>> dynamic_windows(int token_count, int window,
                                                 int overlap);

// Conversational network: quotes are segmented into conversations by
// `conversation_gap`, and each pair of consecutive attributed quotes with
// distinct resolved speakers increments that pair's edge weight.
// Unattributed quotes are skipped without breaking the conversation.
CharacterNetwork extract_conversational(
    const std::vector<Quote>& quotes,
    const std::vector<SpeakerAttribution>& attributions,
    const std::vector<Character>& characters, int conversation_gap);

}  // namespace fabula

#endif  // FABULA_EXTRACTION_HPP_
