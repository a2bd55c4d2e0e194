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

#ifndef FABULA_STEPS_HPP_
#define FABULA_STEPS_HPP_

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fabula/pipeline.hpp"
#include "fabula/resources.hpp"

namespace fabula {

// The built-in steps and their per-step options (all optional):
//
//   substitutions             rules: [{pattern, replacement}, ...]
//   tokenizer                 abbreviations: path
//   quote_detector            max_quote_len: int
//   ner                       gazetteer: path, recurrence_threshold: int,
//                             max_mention_len: int
//   naive_unifier             min_appearance: int
//   graph_rules_unifier       min_appearance: int, hypocorisms: path,
//                             gendered_titles: path
//   speaker_detector          window: int, conversation_gap: int,
//                             speech_verbs: path
//   cooccurrence_extractor    co_occurrences_dist: int, dynamic: bool,
//                             dynamic_window: int, dynamic_overlap: int
//   conversational_extractor  conversation_gap: int
std::vector<std::string> known_step_names();

// Signature of a built-in step under its default options. Throws ConfigError
// for unknown names.
StepSignature builtin_signature(const std::string& name);

// Instantiates a built-in step. Unknown names, unknown option keys and
// ill-typed option values raise ConfigError. The resource set is shared,
// immutable, and may serve several steps.
StepPtr make_step(const std::string& name, const nlohmann::json& options,
                  std::shared_ptr<const ResourceSet> resources);

}  // namespace fabula

#endif  // FABULA_STEPS_HPP_
