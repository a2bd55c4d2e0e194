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

#ifndef FABULA_NER_HPP_
#define FABULA_NER_HPP_

#include <vector>

#include "fabula/resources.hpp"
#include "fabula/types.hpp"

namespace fabula {

struct NerOptions {
  // A candidate run is accepted once its surface has been seen this many
  // times across the text (applied retroactively to every occurrence).
  int recurrence_threshold = 2;
  int max_mention_len = 8;  // runs longer than this are skipped
};

// Rule-based person-name recognition over capitalized token runs.
//
// A candidate run is a maximal sequence of capitalized word tokens inside one
// sentence, where all-caps tokens and closed-class stopwords are excluded and
// honorifics may only appear as a leading prefix. A run becomes a PER mention
// when (a) any of its tokens is in the gazetteer, (b) it starts with an
// honorific followed by at least one name token (the honorific is part of the
// mention), or (c) its surface recurs at least `recurrence_threshold` times.
// Output mentions are non-overlapping and ordered by first token.
std::vector<EntityMention> recognize_entities(
    const std::vector<Token>& tokens,
    const std::vector<SentenceSpan>& sentences, const ResourceSet& resources,
    const NerOptions& options = {});

// Decodes a BIO tag sequence into mentions. A dangling I-PER (after O or at
// the start) is repaired as B-PER. Throws LengthMismatch when the tag and
// token sequences differ in length.
std::vector<EntityMention> decode_bio(const std::vector<BioTag>& tags,
                                      const std::vector<Token>& tokens);

// Inverse of decode_bio for valid, non-overlapping, ordered mention sets.
std::vector<BioTag> encode_bio(const std::vector<EntityMention>& mentions,
                               std::size_t token_count);

}  // namespace fabula

#endif  // FABULA_NER_HPP_
