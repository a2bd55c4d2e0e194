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

#ifndef FABULA_PIPELINE_HPP_
#define FABULA_PIPELINE_HPP_

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fabula/artifact.hpp"
#include "fabula/errors.hpp"

namespace fabula {

// What a step consumes and produces; the unit of pipeline validation.
struct StepSignature {
  std::string step_name;
  KeySet needs;
  KeySet optional_needs;  // disjoint from needs
  KeySet produces;        // never empty
  // ISO-639-3 codes, or the wildcard "any".
  std::vector<std::string> supported_languages;

  bool supports_language(const std::string& language) const;
};

struct ValidationDiagnostic {
  int step_index = 0;
  std::string step_name;
  KeySet missing;  // needs not available when the step would run
  bool language_mismatch = false;

  friend bool operator==(const ValidationDiagnostic&,
                         const ValidationDiagnostic&) = default;
};

// Result of simulating artifact availability across a pipeline.
// valid == diagnostics.empty(); invalidity is data, not an exception.
struct ValidationReport {
  bool valid = true;
  std::vector<ValidationDiagnostic> diagnostics;

  std::string to_string() const;  // one line per diagnostic
};

// Simulates availability: starts from {text} plus `injected`, walks the
// signatures in order, records a diagnostic for every step whose needs are
// not met or whose language set excludes `language`, and accumulates
// productions. Never throws.
ValidationReport validate_pipeline(std::span<const StepSignature> signatures,
                                   const std::string& language,
                                   KeySet injected = {});

// The evolving artifact store threaded through the steps of one run.
struct PipelineState {
  std::string language;
  std::map<ArtifactKey, ArtifactValue> artifacts;
  // Which step produced each key; "input" for the constructed text,
  // "injected" for injected artifacts.
  std::map<ArtifactKey, std::string> provenance;

  bool has(ArtifactKey key) const { return artifacts.count(key) != 0; }

  template <typename T>
  const T& get(ArtifactKey key) const {
    auto it = artifacts.find(key);
    if (it == artifacts.end())
      throw Error("artifact '" + std::string(to_string(key)) +
                  "' is not in the state");
    return std::get<T>(it->second);
  }

  const std::string& text() const { return get<std::string>(ArtifactKey::Text); }
};

// Pipeline invalid; carries the full report so the caller can explain why.
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("invalid pipeline:\n" + report.to_string()),
        report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// A step's window onto the state. Reads are restricted to declared needs and
// optional needs; writes are buffered and must cover exactly the declared
// productions. Violations surface as StepError.
class StepContext {
 public:
  StepContext(const PipelineState& state, const StepSignature& signature);

  const std::string& language() const { return state_.language; }

  // True when `key` is declared (needs or optional_needs) and available.
  bool has(ArtifactKey key) const;

  template <typename T>
  const T& get(ArtifactKey key) const {
    return std::get<T>(get_value(key));
  }

  void put(ArtifactKey key, ArtifactValue value);

  const std::map<ArtifactKey, ArtifactValue>& written() const {
    return written_;
  }

 private:
  const ArtifactValue& get_value(ArtifactKey key) const;

  const PipelineState& state_;
  const StepSignature& signature_;
  std::map<ArtifactKey, ArtifactValue> written_;
};

// A pipeline step: a pure function of (declared inputs, configuration).
// Implementations must be immutable after construction; distinct runs may
// share one instance across threads.
class PipelineStep {
 public:
  virtual ~PipelineStep() = default;
  virtual const StepSignature& signature() const = 0;
  virtual void run(StepContext& ctx) const = 0;
};

using StepPtr = std::shared_ptr<const PipelineStep>;
using InjectedArtifacts = std::map<ArtifactKey, ArtifactValue>;

// Structural validation of an artifact about to be injected: the key must be
// injectable (entities, corefs or quotes; `text` is reserved), the value must
// match the key, spans must be ordered and non-overlapping where the key
// demands it. Throws MalformedArtifact.
void validate_injected(ArtifactKey key, const ArtifactValue& value);

// Range validation once the token count is known: every injected span must
// lie inside [0, token_count). Also fills the empty surfaces of injected
// entity mentions from the tokens. Throws MalformedArtifact.
void bind_injected_to_tokens(InjectedArtifacts& injected,
                             const std::vector<Token>& tokens);

// An ordered series of steps run one after the other over a shared state.
class Pipeline {
 public:
  explicit Pipeline(std::vector<StepPtr> steps);

  const std::vector<StepPtr>& steps() const { return steps_; }
  std::vector<StepSignature> signatures() const;

  ValidationReport validate(const std::string& language,
                            KeySet injected = {}) const;

  // Validates (with the injected keys seeded) and then executes every step in
  // order. Each step reads only its declared needs and writes exactly its
  // declared productions; provenance is recorded per key, last writer wins.
  // Throws ValidationError when invalid, StepError when a step fails, and
  // MalformedArtifact when an injected artifact is rejected.
  PipelineState run(std::string text, const std::string& language,
                    InjectedArtifacts injected = {}) const;

 private:
  std::vector<StepPtr> steps_;
};

}  // namespace fabula

#endif  // FABULA_PIPELINE_HPP_
