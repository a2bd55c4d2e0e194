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

#include "fabula/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace fabula {

bool StepSignature::supports_language(const std::string& language) const {
  for (const auto& l : supported_languages)
    if (l == "any" || l == language) return true;
  return false;
}

std::string ValidationReport::to_string() const {
  if (valid) return "pipeline is valid";
  std::ostringstream out;
  for (const auto& d : diagnostics) {
    out << "step " << d.step_index << " (" << d.step_name << "):";
    if (!d.missing.empty()) out << " missing " << d.missing.to_string();
    if (d.language_mismatch) out << " language not supported";
    out << "\n";
  }
  return out.str();
}

ValidationReport validate_pipeline(std::span<const StepSignature> signatures,
                                   const std::string& language,
                                   KeySet injected) {
  ValidationReport report;
  KeySet available = injected;
  available.insert(ArtifactKey::Text);
  int index = 0;
  for (const auto& sig : signatures) {
    ValidationDiagnostic diag;
    diag.step_index = index;
    diag.step_name = sig.step_name;
    if (!sig.needs.subset_of(available)) diag.missing = sig.needs - available;
    diag.language_mismatch = !sig.supports_language(language);
    if (!diag.missing.empty() || diag.language_mismatch)
      report.diagnostics.push_back(std::move(diag));
    available |= sig.produces;
    ++index;
  }
  report.valid = report.diagnostics.empty();
  return report;
}

// --- StepContext -------------------------------------------------------------

StepContext::StepContext(const PipelineState& state,
                         const StepSignature& signature)
    : state_(state), signature_(signature) {}

bool StepContext::has(ArtifactKey key) const {
  if (!signature_.needs.contains(key) &&
      !signature_.optional_needs.contains(key))
    return false;
  return state_.has(key);
}

const ArtifactValue& StepContext::get_value(ArtifactKey key) const {
  if (!signature_.needs.contains(key) &&
      !signature_.optional_needs.contains(key))
    throw StepError(signature_.step_name,
                    "read of undeclared artifact '" +
                        std::string(to_string(key)) + "'");
  auto it = state_.artifacts.find(key);
  if (it == state_.artifacts.end())
    throw StepError(signature_.step_name,
                    "declared artifact '" + std::string(to_string(key)) +
                        "' is not available");
  return it->second;
}

void StepContext::put(ArtifactKey key, ArtifactValue value) {
  if (!signature_.produces.contains(key))
    throw StepError(signature_.step_name,
                    "write of undeclared artifact '" +
                        std::string(to_string(key)) + "'");
  if (!value_matches_key(key, value))
    throw StepError(signature_.step_name,
                    "value type does not match artifact '" +
                        std::string(to_string(key)) + "'");
  written_[key] = std::move(value);
}

// --- Injection checks --------------------------------------------------------

namespace {

void check_spans_ordered(const std::vector<EntityMention>& mentions) {
  int prev_end = -1;
  for (const auto& m : mentions) {
    if (m.first_token < 0 || m.last_token < m.first_token)
      throw MalformedArtifact("entity span is inverted or negative");
    if (m.first_token <= prev_end)
      throw MalformedArtifact("entity spans overlap or are out of order");
    if (m.length() > 8)
      throw MalformedArtifact("entity mention longer than 8 tokens");
    prev_end = m.last_token;
  }
}

void check_chains(const std::vector<CorefChain>& chains) {
  for (const auto& chain : chains) {
    if (chain.mentions.empty())
      throw MalformedArtifact("empty coreference chain");
    for (const auto& s : chain.mentions)
      if (s.first_token < 0 || s.last_token < s.first_token)
        throw MalformedArtifact("coreference span is inverted or negative");
  }
}

void check_quotes(const std::vector<Quote>& quotes) {
  int prev_end = -1;
  for (const auto& q : quotes) {
    if (q.first_token < 0 || q.last_token < q.first_token)
      throw MalformedArtifact("quote span is inverted or negative");
    if (q.first_token <= prev_end)
      throw MalformedArtifact("quote spans overlap or are out of order");
    prev_end = q.last_token;
  }
}

int max_token_of(const ArtifactValue& value) {
  int max_token = -1;
  if (const auto* ms = std::get_if<std::vector<EntityMention>>(&value)) {
    for (const auto& m : *ms) max_token = std::max(max_token, m.last_token);
  } else if (const auto* cs = std::get_if<std::vector<CorefChain>>(&value)) {
    for (const auto& c : *cs)
      for (const auto& s : c.mentions)
        max_token = std::max(max_token, s.last_token);
  } else if (const auto* qs = std::get_if<std::vector<Quote>>(&value)) {
    for (const auto& q : *qs) max_token = std::max(max_token, q.last_token);
  }
  return max_token;
}

}  // namespace

void validate_injected(ArtifactKey key, const ArtifactValue& value) {
  if (key == ArtifactKey::Text)
    throw MalformedArtifact(
        "'text' is reserved: it is produced by pipeline construction");
  if (key != ArtifactKey::Entities && key != ArtifactKey::Corefs &&
      key != ArtifactKey::Quotes)
    throw MalformedArtifact("artifact '" + std::string(to_string(key)) +
                            "' cannot be injected");
  if (!value_matches_key(key, value))
    throw MalformedArtifact("value type does not match artifact '" +
                            std::string(to_string(key)) + "'");
  switch (key) {
    case ArtifactKey::Entities:
      check_spans_ordered(std::get<std::vector<EntityMention>>(value));
      break;
    case ArtifactKey::Corefs:
      check_chains(std::get<std::vector<CorefChain>>(value));
      break;
    case ArtifactKey::Quotes:
      check_quotes(std::get<std::vector<Quote>>(value));
      break;
    default:
      break;
  }
}

void bind_injected_to_tokens(InjectedArtifacts& injected,
                             const std::vector<Token>& tokens) {
  const int count = static_cast<int>(tokens.size());
  for (auto& [key, value] : injected) {
    if (max_token_of(value) >= count)
      throw MalformedArtifact("injected '" + std::string(to_string(key)) +
                              "' span exceeds the token range (" +
                              std::to_string(count) + " tokens)");
    if (auto* ms = std::get_if<std::vector<EntityMention>>(&value)) {
      for (auto& m : *ms) {
        if (!m.surface.empty()) continue;
        std::string surface;
        for (int t = m.first_token; t <= m.last_token; ++t) {
          if (t > m.first_token) surface += ' ';
          surface += tokens[t].text;
        }
        m.surface = std::move(surface);
      }
    }
  }
}

// --- Pipeline ----------------------------------------------------------------

Pipeline::Pipeline(std::vector<StepPtr> steps) : steps_(std::move(steps)) {
  for (const auto& s : steps_)
    if (!s) throw Error("null pipeline step");
}

std::vector<StepSignature> Pipeline::signatures() const {
  std::vector<StepSignature> sigs;
  sigs.reserve(steps_.size());
  for (const auto& s : steps_) sigs.push_back(s->signature());
  return sigs;
}

ValidationReport Pipeline::validate(const std::string& language,
                                    KeySet injected) const {
  auto sigs = signatures();
  return validate_pipeline(sigs, language, injected);
}

PipelineState Pipeline::run(std::string text, const std::string& language,
                            InjectedArtifacts injected) const {
  KeySet injected_keys;
  for (const auto& [key, value] : injected) {
    validate_injected(key, value);
    injected_keys.insert(key);
  }

  ValidationReport report = validate(language, injected_keys);
  if (!report.valid) throw ValidationError(std::move(report));

  PipelineState state;
  state.language = language;
  state.artifacts[ArtifactKey::Text] = std::move(text);
  state.provenance[ArtifactKey::Text] = "input";

  // Injected artifacts are visible from the first step on. Their spans are
  // checked against the token range as soon as tokens exist; a pipeline that
  // never produces tokens must carry entity surfaces in the injected values.
  bool pending_token_check = false;
  if (!injected.empty()) {
    KeySet produced;
    for (const auto& s : steps_) produced |= s->signature().produces;
    pending_token_check = produced.contains(ArtifactKey::Tokens);
    if (!pending_token_check)
      for (const auto& [key, value] : injected)
        if (const auto* ms = std::get_if<std::vector<EntityMention>>(&value))
          for (const auto& m : *ms)
            if (m.surface.empty())
              throw MalformedArtifact(
                  "injected entities have empty surfaces and the pipeline "
                  "produces no tokens to fill them from");
    for (auto& [key, value] : injected) {
      state.artifacts[key] = std::move(value);
      state.provenance[key] = "injected";
    }
  }

  for (const auto& step : steps_) {
    const StepSignature& sig = step->signature();
    StepContext ctx(state, sig);
    try {
      step->run(ctx);
    } catch (const StepError&) {
      throw;
    } catch (const std::exception& e) {
      throw StepError(sig.step_name, e.what());
    }

    for (ArtifactKey key : sig.produces.keys())
      if (ctx.written().find(key) == ctx.written().end())
        throw StepError(sig.step_name,
                        "declared production '" + std::string(to_string(key)) +
                            "' was not written");
    for (const auto& [key, value] : ctx.written()) {
      state.artifacts[key] = value;
      state.provenance[key] = sig.step_name;
    }

    if (pending_token_check && state.has(ArtifactKey::Tokens)) {
      InjectedArtifacts still;
      for (const auto& [key, prov] : state.provenance)
        if (prov == "injected") still[key] = state.artifacts[key];
      bind_injected_to_tokens(
          still, state.get<std::vector<Token>>(ArtifactKey::Tokens));
      for (auto& [key, value] : still) state.artifacts[key] = std::move(value);
      pending_token_check = false;
    }
  }
  return state;
}

}  // namespace fabula
