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

#ifndef FABULA_TEXT_HPP_
#define FABULA_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "fabula/resources.hpp"
#include "fabula/types.hpp"

namespace fabula {

// One text substitution. `pattern` is an ECMAScript regular expression;
// `replacement` may reference capture groups with $1..$9.
struct SubstitutionRule {
  std::string pattern;
  std::string replacement;
};

// Applies the rules in order, each globally. Deterministic; later rules see
// the output of earlier ones. Throws InvalidPattern when a pattern does not
// compile or a replacement references an undefined group.
std::string apply_substitutions(const std::string& text,
                                const std::vector<SubstitutionRule>& rules);

struct Tokenization {
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;
};

// Rule-based tokenizer: whitespace split, punctuation peeling (quote marks,
// brackets and dashes become standalone tokens), abbreviation-aware sentence
// segmentation. Offsets are byte offsets into the UTF-8 input, and every
// non-whitespace byte lies inside exactly one token, so the input can be
// reconstructed from tokens plus inter-token gaps.
//
// The abbreviation table of `resources` suppresses sentence breaks ("Mr."
// keeps its period and does not end the sentence). A blank line always ends
// the current sentence. Empty text produces empty outputs.
Tokenization tokenize(std::string_view text, const std::string& language,
                      const ResourceSet& resources);

}  // namespace fabula

#endif  // FABULA_TEXT_HPP_
