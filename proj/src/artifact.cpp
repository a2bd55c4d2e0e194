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

#include "fabula/artifact.hpp"

namespace fabula {
namespace {

constexpr std::string_view kKeyNames[kArtifactKeyCount] = {
    "text",   "tokens",   "sentences",  "entities",         "corefs",
    "quotes", "speakers", "characters", "character_network"};

}  // namespace

std::string_view to_string(ArtifactKey key) {
  return kKeyNames[static_cast<int>(key)];
}

std::optional<ArtifactKey> artifact_key_from(std::string_view name) {
  for (int i = 0; i < kArtifactKeyCount; ++i)
    if (kKeyNames[i] == name) return static_cast<ArtifactKey>(i);
  return std::nullopt;
}

std::string KeySet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (ArtifactKey k : keys()) {
    if (!first) out += ", ";
    out += fabula::to_string(k);
    first = false;
  }
  out += "}";
  return out;
}

bool value_matches_key(ArtifactKey key, const ArtifactValue& value) {
  // The variant alternatives are declared in enumeration order.
  return value.index() == static_cast<std::size_t>(key);
}

std::string to_string(AttributionMethod method) {
  switch (method) {
    case AttributionMethod::TrailingSaid:
      return "trailing-said";
    case AttributionMethod::LeadingSaid:
      return "leading-said";
    case AttributionMethod::Nearest:
      return "nearest";
    case AttributionMethod::Alternation:
      return "alternation";
    case AttributionMethod::None:
      return "none";
  }
  return "none";
}

}  // namespace fabula
