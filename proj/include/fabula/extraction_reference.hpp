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

#ifndef FABULA_EXTRACTION_REFERENCE_HPP_
#define FABULA_EXTRACTION_REFERENCE_HPP_

#include <utility>
#include <vector>

#include "fabula/types.hpp"

// Serial reference implementations of the extraction kernels: a plain O(n^2)
// enumeration of all cross-character mention pairs, no sorting, no sweep, no
// threading. Kept as an independent oracle for the tests and as the baseline
// for the benchmark; deliberately shares no code with fabula::extract_*.
namespace fabula::reference {

CharacterNetwork cooccurrence_static(const std::vector<Character>& characters,
                                     const ExtractionConfig& config);

DynamicNetwork cooccurrence_dynamic(const std::vector<Character>& characters,
                                    const ExtractionConfig& config,
                                    int token_count);

// Every counted mention pair of the static rule, as
// ((char_a, char_b), (earlier mention first, later mention first)) records.
// Used by tests that need instance-level diffs between static and dynamic
// extraction.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>
cooccurrence_pairs(const std::vector<Character>& characters,
                   const ExtractionConfig& config);

}  // namespace fabula::reference

#endif  // FABULA_EXTRACTION_REFERENCE_HPP_
