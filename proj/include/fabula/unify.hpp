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

#ifndef FABULA_UNIFY_HPP_
#define FABULA_UNIFY_HPP_

#include <vector>

#include "fabula/resources.hpp"
#include "fabula/types.hpp"

namespace fabula {

// Groups mentions into characters by case-folded exact surface match, then
// drops groups with fewer than `min_appearance` mentions. Character ids are
// assigned in order of first mention.
std::vector<Character> unify_naive(const std::vector<EntityMention>& mentions,
                                   int min_appearance);

// Name-variant graph unification.
//
// Vertices are the distinct parsed name variants. LINK edges are added when:
//   L1  a first-name-only variant matches another variant's first name
//   L2  a last-name-only (or title+last) variant matches another variant's
//       last name and the titles are gender-compatible
//   L3  one variant's first name is a hypocorism of the other's
//   L4  one variant's tokens are a subsequence of a longer variant's
// CANNOT-LINK constraints are added when:
//   C1  the titles imply different genders
//   C2  both variants have last names and they differ
//   C3  both variants have first names and they differ non-hypocoristically
// A LINK between a CANNOT-LINKed pair is discarded. When coreference chains
// are supplied, variants co-occurring in one chain gain LINK edges, still
// subject to CANNOT-LINK. Connected components of the surviving LINK graph
// become characters; a variant whose links would join two mutually
// incompatible groups is detached and kept as a singleton. Groups with fewer
// than `min_appearance` mentions are dropped.
//
// Output is independent of mention input order. Throws MissingResource when
// the hypocorism table is absent for the resource language.
std::vector<Character> unify_graph_rules(
    const std::vector<EntityMention>& mentions, const ResourceSet& resources,
    int min_appearance,
    const std::vector<CorefChain>* coref_chains = nullptr);

}  // namespace fabula

#endif  // FABULA_UNIFY_HPP_
