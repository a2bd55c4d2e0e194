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

#ifndef FABULA_TYPES_HPP_
#define FABULA_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fabula {

// A token with byte offsets into the source text. `text` is always equal to
// the source substring [start, end).
struct Token {
  int index = 0;
  std::string text;
  std::size_t start = 0;  // inclusive
  std::size_t end = 0;    // exclusive

  friend bool operator==(const Token&, const Token&) = default;
};

// Inclusive token index range of one sentence. Sentences partition the token
// sequence: contiguous, non-overlapping, covering all tokens.
struct SentenceSpan {
  int first_token = 0;
  int last_token = 0;

  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

enum class BioTag { B_PER, I_PER, O };

// A person-name occurrence. Only the PER label exists in this library, so the
// label is implicit. `surface` is the space-joined token texts.
struct EntityMention {
  int first_token = 0;
  int last_token = 0;  // inclusive
  std::string surface;

  int length() const { return last_token - first_token + 1; }

  friend bool operator==(const EntityMention&, const EntityMention&) = default;
  friend auto operator<=>(const EntityMention&, const EntityMention&) = default;
};

// A quotation span, delimiters included. Marks are stored as strings because
// curly quotes and guillemets are multi-byte in UTF-8.
struct Quote {
  int first_token = 0;
  int last_token = 0;  // inclusive
  std::string open_mark;
  std::string close_mark;

  int length() const { return last_token - first_token + 1; }

  friend bool operator==(const Quote&, const Quote&) = default;
};

enum class AttributionMethod {
  TrailingSaid,  // speech verb after the quote, adjacent person mention
  LeadingSaid,   // speech verb before the quote, adjacent person mention
  Nearest,       // nearest person mention within the window
  Alternation,   // two-party conversation alternation
  None,
};

std::string to_string(AttributionMethod method);

struct SpeakerAttribution {
  int quote_index = 0;
  std::optional<EntityMention> mention;  // never inside the quote span
  AttributionMethod method = AttributionMethod::None;

  friend bool operator==(const SpeakerAttribution&,
                         const SpeakerAttribution&) = default;
};

// One coreference chain: token spans referring to the same entity. Consumed
// only through the injection path.
struct CorefChain {
  struct Span {
    int first_token = 0;
    int last_token = 0;  // inclusive

    friend bool operator==(const Span&, const Span&) = default;
  };
  std::vector<Span> mentions;

  friend bool operator==(const CorefChain&, const CorefChain&) = default;
};

// Decomposition of a person-name surface form. Empty strings mean "absent".
// When neither first nor last could be filled the name is unparseable and is
// excluded from unification rule matching.
struct HumanName {
  std::string title;
  std::string first;
  std::vector<std::string> middle;
  std::string last;
  std::string raw;

  bool parseable() const { return !first.empty() || !last.empty(); }
};

// A unified character: a set of name-variant spellings plus every mention.
struct Character {
  int id = 0;
  std::vector<std::string> names;  // distinct variant spellings, sorted
  std::string canonical;           // longest among the most frequent variants
  std::vector<EntityMention> mentions;  // in text order

  friend bool operator==(const Character&, const Character&) = default;
};

// --- Networks ---------------------------------------------------------------

struct NetworkVertex {
  int id = 0;
  std::string canonical;
  int mention_count = 0;
  int degree = 0;

  friend bool operator==(const NetworkVertex&, const NetworkVertex&) = default;
};

// Undirected weighted edge, a < b, weight >= 1.
struct NetworkEdge {
  int a = 0;
  int b = 0;
  int weight = 0;

  friend bool operator==(const NetworkEdge&, const NetworkEdge&) = default;
  friend auto operator<=>(const NetworkEdge&, const NetworkEdge&) = default;
};

struct CharacterNetwork {
  std::vector<NetworkVertex> vertices;  // ordered by id
  std::vector<NetworkEdge> edges;       // ordered by (a, b)

  friend bool operator==(const CharacterNetwork&,
                         const CharacterNetwork&) = default;
};

// One slice of a dynamic network: the graph over [window_start, window_end).
struct NetworkSlice {
  int window_start = 0;
  int window_end = 0;
  CharacterNetwork graph;

  friend bool operator==(const NetworkSlice&, const NetworkSlice&) = default;
};

struct DynamicNetwork {
  std::vector<NetworkSlice> slices;  // ordered by window_start

  friend bool operator==(const DynamicNetwork&,
                         const DynamicNetwork&) = default;
};

// The `character_network` artifact holds either a static or a dynamic network.
struct NetworkArtifact {
  std::variant<CharacterNetwork, DynamicNetwork> value;

  bool is_dynamic() const {
    return std::holds_alternative<DynamicNetwork>(value);
  }
  const CharacterNetwork& static_network() const {
    return std::get<CharacterNetwork>(value);
  }
  const DynamicNetwork& dynamic_network() const {
    return std::get<DynamicNetwork>(value);
  }

  friend bool operator==(const NetworkArtifact&,
                         const NetworkArtifact&) = default;
};

struct ExtractionConfig {
  int co_occurrences_dist = 10;  // max token gap between mention boundaries
  bool dynamic = false;
  int dynamic_window = 0;   // window width in tokens
  int dynamic_overlap = 0;  // 0 <= overlap < window
};

}  // namespace fabula

#endif  // FABULA_TYPES_HPP_
