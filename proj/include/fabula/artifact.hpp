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

#ifndef FABULA_ARTIFACT_HPP_
#define FABULA_ARTIFACT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fabula/types.hpp"

namespace fabula {

// The closed set of artifact keys. Every step's needs and productions draw
// only from this enumeration; adding an artifact kind means adding a key here.
enum class ArtifactKey : std::uint8_t {
  Text = 0,
  Tokens,
  Sentences,
  Entities,
  Corefs,
  Quotes,
  Speakers,
  Characters,
  CharacterNetwork,
};

inline constexpr int kArtifactKeyCount = 9;

std::string_view to_string(ArtifactKey key);
std::optional<ArtifactKey> artifact_key_from(std::string_view name);

// Small ordered set of artifact keys, used throughout pipeline validation.
class KeySet {
 public:
  constexpr KeySet() = default;
  constexpr KeySet(std::initializer_list<ArtifactKey> keys) {
    for (ArtifactKey k : keys) insert(k);
  }

  constexpr bool contains(ArtifactKey k) const {
    return (bits_ >> static_cast<int>(k)) & 1u;
  }
  constexpr void insert(ArtifactKey k) { bits_ |= 1u << static_cast<int>(k); }
  constexpr void erase(ArtifactKey k) { bits_ &= ~(1u << static_cast<int>(k)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return __builtin_popcount(bits_); }

  constexpr bool subset_of(KeySet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr KeySet operator|(KeySet o) const { return KeySet(bits_ | o.bits_); }
  constexpr KeySet operator&(KeySet o) const { return KeySet(bits_ & o.bits_); }
  // Set difference: keys in *this but not in `o`.
  constexpr KeySet operator-(KeySet o) const {
    return KeySet(bits_ & ~o.bits_);
  }
  constexpr KeySet& operator|=(KeySet o) {
    bits_ |= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(KeySet, KeySet) = default;

  // Keys in enumeration order.
  std::vector<ArtifactKey> keys() const {
    std::vector<ArtifactKey> out;
    for (int i = 0; i < kArtifactKeyCount; ++i)
      if ((bits_ >> i) & 1u) out.push_back(static_cast<ArtifactKey>(i));
    return out;
  }

  std::string to_string() const;  // "{tokens, entities}"

 private:
  explicit constexpr KeySet(std::uint16_t bits) : bits_(bits) {}
  std::uint16_t bits_ = 0;
};

// The value stored under an artifact key. The alternative types are distinct,
// so a value can be checked against its key.
using ArtifactValue =
    std::variant<std::string,                     // text
                 std::vector<Token>,              // tokens
                 std::vector<SentenceSpan>,       // sentences
                 std::vector<EntityMention>,      // entities
                 std::vector<CorefChain>,         // corefs
                 std::vector<Quote>,              // quotes
                 std::vector<SpeakerAttribution>, // speakers
                 std::vector<Character>,          // characters
                 NetworkArtifact>;                // character_network

// True when `value` holds the alternative that belongs to `key`.
bool value_matches_key(ArtifactKey key, const ArtifactValue& value);

}  // namespace fabula

#endif  // FABULA_ARTIFACT_HPP_
