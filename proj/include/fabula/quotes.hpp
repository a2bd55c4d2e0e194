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

#ifndef FABULA_QUOTES_HPP_
#define FABULA_QUOTES_HPP_

#include <utility>
#include <vector>

#include "fabula/resources.hpp"
#include "fabula/types.hpp"

namespace fabula {

struct QuoteOptions {
  // Longer candidate quotes are dropped as pairing errors.
  int max_quote_len = 500;
};

// Pairs quote delimiters into quote spans. Curly quotes and guillemets are
// paired with a stack per pair type; straight double quotes are paired
// greedily left to right. Unclosed openings at end of text are dropped, inner
// nested quotes are dropped in favor of the outermost span, and output spans
// never overlap.
std::vector<Quote> detect_quotes(const std::vector<Token>& tokens,
                                 const QuoteOptions& options = {});

struct AttributionOptions {
  int window = 10;            // search radius around a quote, in tokens
  int conversation_gap = 100; // max tokens between quotes of one conversation
};

// Attributes each quote to a person mention with deterministic heuristics,
// tried strictly in order: trailing speech verb with an adjacent mention,
// leading speech verb with an adjacent mention, nearest mention within the
// window, two-party alternation within the conversation, otherwise none.
// All inputs must come from the same token sequence. The attributed mention
// never lies inside the quote span, and the searches never cross a
// neighboring quote.
std::vector<SpeakerAttribution> attribute_speakers(
    const std::vector<Quote>& quotes,
    const std::vector<EntityMention>& mentions,
    const std::vector<Token>& tokens, const ResourceSet& resources,
    const AttributionOptions& options = {});

// Groups quote indices into conversations: consecutive quotes separated by at
// most `conversation_gap` tokens belong to the same conversation. Returns
// inclusive [first_quote, last_quote] index ranges in order.
std::vector<std::pair<int, int>> segment_conversations(
    const std::vector<Quote>& quotes, int conversation_gap);

}  // namespace fabula

#endif  // FABULA_QUOTES_HPP_
