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

#include "fabula/steps.hpp"

#include <set>

#include "fabula/errors.hpp"
#include "fabula/extraction.hpp"
#include "fabula/ner.hpp"
#include "fabula/quotes.hpp"
#include "fabula/text.hpp"
#include "fabula/unify.hpp"

namespace fabula {
namespace {

using nlohmann::json;
using Key = ArtifactKey;

std::shared_ptr<const ResourceSet> ensure_resources(
    std::shared_ptr<const ResourceSet> resources) {
  if (resources) return resources;
  return std::make_shared<ResourceSet>(ResourceSet::builtin_eng());
}

// Rejects unknown option keys and wrong option types up front.
class Options {
 public:
  Options(const std::string& step, const json& doc) : step_(step) {
    if (doc.is_null()) return;
    if (!doc.is_object())
      throw ConfigError("step '" + step + "': options must be an object");
    doc_ = doc;
  }

  int get_int(const char* key, int fallback) {
    mark(key);
    if (!doc_.contains(key)) return fallback;
    if (!doc_[key].is_number_integer()) type_error(key, "an integer");
    return doc_[key].get<int>();
  }
  bool get_bool(const char* key, bool fallback) {
    mark(key);
    if (!doc_.contains(key)) return fallback;
    if (!doc_[key].is_boolean()) type_error(key, "a boolean");
    return doc_[key].get<bool>();
  }
  std::string get_string(const char* key, const std::string& fallback) {
    mark(key);
    if (!doc_.contains(key)) return fallback;
    if (!doc_[key].is_string()) type_error(key, "a string");
    return doc_[key].get<std::string>();
  }
  json get_raw(const char* key) {
    mark(key);
    return doc_.contains(key) ? doc_[key] : json();
  }

  void finish() const {
    for (const auto& [key, value] : doc_.items())
      if (!known_.count(key))
        throw ConfigError("step '" + step_ + "': unknown option '" + key +
                          "'");
  }

 private:
  [[noreturn]] void type_error(const char* key, const char* expected) const {
    throw ConfigError("step '" + step_ + "': option '" + key + "' must be " +
                      expected);
  }
  void mark(const char* key) { known_.insert(key); }

  std::string step_;
  json doc_ = json::object();
  std::set<std::string> known_;
};

// Loads a per-step table override into a private copy of the shared set.
std::shared_ptr<const ResourceSet> override_table(
    std::shared_ptr<const ResourceSet> base, const std::string& table,
    const std::string& path) {
  if (path.empty()) return base;
  auto copy = std::make_shared<ResourceSet>(*base);
  copy->load_table(table, path);
  return copy;
}

class SubstitutionsStep : public PipelineStep {
 public:
  SubstitutionsStep(std::vector<SubstitutionRule> rules)
      : rules_(std::move(rules)) {
    signature_.step_name = "substitutions";
    signature_.needs = {Key::Text};
    signature_.produces = {Key::Text};
    signature_.supported_languages = {"any"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    ctx.put(Key::Text,
            apply_substitutions(ctx.get<std::string>(Key::Text), rules_));
  }

 private:
  StepSignature signature_;
  std::vector<SubstitutionRule> rules_;
};

class TokenizerStep : public PipelineStep {
 public:
  explicit TokenizerStep(std::shared_ptr<const ResourceSet> resources)
      : resources_(std::move(resources)) {
    signature_.step_name = "tokenizer";
    signature_.needs = {Key::Text};
    signature_.produces = {Key::Tokens, Key::Sentences};
    signature_.supported_languages = {"any"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    auto result =
        tokenize(ctx.get<std::string>(Key::Text), ctx.language(), *resources_);
    ctx.put(Key::Tokens, std::move(result.tokens));
    ctx.put(Key::Sentences, std::move(result.sentences));
  }

 private:
  StepSignature signature_;
  std::shared_ptr<const ResourceSet> resources_;
};

class QuoteDetectorStep : public PipelineStep {
 public:
  explicit QuoteDetectorStep(QuoteOptions options) : options_(options) {
    signature_.step_name = "quote_detector";
    signature_.needs = {Key::Tokens};
    signature_.produces = {Key::Quotes};
    signature_.supported_languages = {"any"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    ctx.put(Key::Quotes,
            detect_quotes(ctx.get<std::vector<Token>>(Key::Tokens), options_));
  }

 private:
  StepSignature signature_;
  QuoteOptions options_;
};

class NerStep : public PipelineStep {
 public:
  NerStep(std::shared_ptr<const ResourceSet> resources, NerOptions options)
      : resources_(std::move(resources)), options_(options) {
    signature_.step_name = "ner";
    signature_.needs = {Key::Tokens, Key::Sentences};
    signature_.produces = {Key::Entities};
    signature_.supported_languages = {"eng"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    ctx.put(Key::Entities,
            recognize_entities(ctx.get<std::vector<Token>>(Key::Tokens),
                               ctx.get<std::vector<SentenceSpan>>(Key::Sentences),
                               *resources_, options_));
  }

 private:
  StepSignature signature_;
  std::shared_ptr<const ResourceSet> resources_;
  NerOptions options_;
};

class NaiveUnifierStep : public PipelineStep {
 public:
  explicit NaiveUnifierStep(int min_appearance)
      : min_appearance_(min_appearance) {
    signature_.step_name = "naive_unifier";
    signature_.needs = {Key::Entities};
    signature_.produces = {Key::Characters};
    signature_.supported_languages = {"any"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    ctx.put(Key::Characters,
            unify_naive(ctx.get<std::vector<EntityMention>>(Key::Entities),
                        min_appearance_));
  }

 private:
  StepSignature signature_;
  int min_appearance_;
};

class GraphRulesUnifierStep : public PipelineStep {
 public:
  GraphRulesUnifierStep(std::shared_ptr<const ResourceSet> resources,
                        int min_appearance)
      : resources_(std::move(resources)), min_appearance_(min_appearance) {
    signature_.step_name = "graph_rules_unifier";
    signature_.needs = {Key::Entities};
    signature_.optional_needs = {Key::Corefs};
    signature_.produces = {Key::Characters};
    signature_.supported_languages = {"eng", "fra"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    const std::vector<CorefChain>* chains = nullptr;
    if (ctx.has(Key::Corefs))
      chains = &ctx.get<std::vector<CorefChain>>(Key::Corefs);
    ctx.put(Key::Characters,
            unify_graph_rules(ctx.get<std::vector<EntityMention>>(Key::Entities),
                              *resources_, min_appearance_, chains));
  }

 private:
  StepSignature signature_;
  std::shared_ptr<const ResourceSet> resources_;
  int min_appearance_;
};

class SpeakerDetectorStep : public PipelineStep {
 public:
  SpeakerDetectorStep(std::shared_ptr<const ResourceSet> resources,
                      AttributionOptions options)
      : resources_(std::move(resources)), options_(options) {
    signature_.step_name = "speaker_detector";
    signature_.needs = {Key::Tokens, Key::Quotes, Key::Entities};
    signature_.produces = {Key::Speakers};
    signature_.supported_languages = {"eng"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    ctx.put(Key::Speakers,
            attribute_speakers(ctx.get<std::vector<Quote>>(Key::Quotes),
                               ctx.get<std::vector<EntityMention>>(Key::Entities),
                               ctx.get<std::vector<Token>>(Key::Tokens),
                               *resources_, options_));
  }

 private:
  StepSignature signature_;
  std::shared_ptr<const ResourceSet> resources_;
  AttributionOptions options_;
};

class CooccurrenceExtractorStep : public PipelineStep {
 public:
  explicit CooccurrenceExtractorStep(ExtractionConfig config)
      : config_(config) {
    signature_.step_name = "cooccurrence_extractor";
    signature_.needs = {Key::Characters};
    signature_.optional_needs = {Key::Tokens};
    signature_.produces = {Key::CharacterNetwork};
    signature_.supported_languages = {"any"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    const auto& characters = ctx.get<std::vector<Character>>(Key::Characters);
    if (!config_.dynamic) {
      ctx.put(Key::CharacterNetwork,
              NetworkArtifact{extract_cooccurrence_static(characters, config_)});
      return;
    }
    int token_count = 0;
    if (ctx.has(Key::Tokens)) {
      token_count =
          static_cast<int>(ctx.get<std::vector<Token>>(Key::Tokens).size());
    } else {
      for (const auto& c : characters)
        for (const auto& m : c.mentions)
          token_count = std::max(token_count, m.last_token + 1);
    }
    ctx.put(Key::CharacterNetwork,
            NetworkArtifact{
                extract_cooccurrence_dynamic(characters, config_, token_count)});
  }

 private:
  StepSignature signature_;
  ExtractionConfig config_;
};

class ConversationalExtractorStep : public PipelineStep {
 public:
  explicit ConversationalExtractorStep(int conversation_gap)
      : conversation_gap_(conversation_gap) {
    signature_.step_name = "conversational_extractor";
    signature_.needs = {Key::Quotes, Key::Speakers, Key::Characters};
    signature_.produces = {Key::CharacterNetwork};
    signature_.supported_languages = {"any"};
  }
  const StepSignature& signature() const override { return signature_; }
  void run(StepContext& ctx) const override {
    ctx.put(Key::CharacterNetwork,
            NetworkArtifact{extract_conversational(
                ctx.get<std::vector<Quote>>(Key::Quotes),
                ctx.get<std::vector<SpeakerAttribution>>(Key::Speakers),
                ctx.get<std::vector<Character>>(Key::Characters),
                conversation_gap_)});
  }

 private:
  StepSignature signature_;
  int conversation_gap_;
};

}  // namespace

std::vector<std::string> known_step_names() {
  return {"substitutions",      "tokenizer",
          "quote_detector",     "ner",
          "naive_unifier",      "graph_rules_unifier",
          "speaker_detector",   "cooccurrence_extractor",
          "conversational_extractor"};
}

StepSignature builtin_signature(const std::string& name) {
  return make_step(name, nlohmann::json(), nullptr)->signature();
}

StepPtr make_step(const std::string& name, const nlohmann::json& options,
                  std::shared_ptr<const ResourceSet> resources) {
  Options opt(name, options);
  auto res = ensure_resources(std::move(resources));

  StepPtr step;
  if (name == "substitutions") {
    std::vector<SubstitutionRule> rules;
    json raw = opt.get_raw("rules");
    if (!raw.is_null()) {
      if (!raw.is_array())
        throw ConfigError("step 'substitutions': 'rules' must be an array");
      for (const auto& r : raw) {
        if (!r.is_object() || !r.contains("pattern") ||
            !r.contains("replacement") || !r["pattern"].is_string() ||
            !r["replacement"].is_string())
          throw ConfigError(
              "step 'substitutions': each rule needs string fields "
              "'pattern' and 'replacement'");
        rules.push_back({r["pattern"].get<std::string>(),
                         r["replacement"].get<std::string>()});
      }
    }
    step = std::make_shared<SubstitutionsStep>(std::move(rules));
  } else if (name == "tokenizer") {
    res = override_table(res, "abbreviations",
                         opt.get_string("abbreviations", ""));
    step = std::make_shared<TokenizerStep>(res);
  } else if (name == "quote_detector") {
    QuoteOptions q;
    q.max_quote_len = opt.get_int("max_quote_len", q.max_quote_len);
    step = std::make_shared<QuoteDetectorStep>(q);
  } else if (name == "ner") {
    NerOptions n;
    n.recurrence_threshold =
        opt.get_int("recurrence_threshold", n.recurrence_threshold);
    n.max_mention_len = opt.get_int("max_mention_len", n.max_mention_len);
    res = override_table(res, "gazetteer", opt.get_string("gazetteer", ""));
    step = std::make_shared<NerStep>(res, n);
  } else if (name == "naive_unifier") {
    step = std::make_shared<NaiveUnifierStep>(opt.get_int("min_appearance", 1));
  } else if (name == "graph_rules_unifier") {
    res = override_table(res, "hypocorisms", opt.get_string("hypocorisms", ""));
    res = override_table(res, "gendered_titles",
                         opt.get_string("gendered_titles", ""));
    step = std::make_shared<GraphRulesUnifierStep>(
        res, opt.get_int("min_appearance", 1));
  } else if (name == "speaker_detector") {
    AttributionOptions a;
    a.window = opt.get_int("window", a.window);
    a.conversation_gap = opt.get_int("conversation_gap", a.conversation_gap);
    res = override_table(res, "speech_verbs",
                         opt.get_string("speech_verbs", ""));
    step = std::make_shared<SpeakerDetectorStep>(res, a);
  } else if (name == "cooccurrence_extractor") {
    ExtractionConfig c;
    c.co_occurrences_dist =
        opt.get_int("co_occurrences_dist", c.co_occurrences_dist);
    c.dynamic = opt.get_bool("dynamic", false);
    c.dynamic_window = opt.get_int("dynamic_window", 0);
    c.dynamic_overlap = opt.get_int("dynamic_overlap", 0);
    if (c.co_occurrences_dist < 1)
      throw ConfigError(
          "step 'cooccurrence_extractor': co_occurrences_dist must be >= 1");
    if (c.dynamic && c.dynamic_window < 1)
      throw ConfigError(
          "step 'cooccurrence_extractor': dynamic mode needs dynamic_window "
          ">= 1");
    if (c.dynamic &&
        (c.dynamic_overlap < 0 || c.dynamic_overlap >= c.dynamic_window))
      throw ConfigError(
          "step 'cooccurrence_extractor': dynamic_overlap must be in "
          "[0, dynamic_window)");
    step = std::make_shared<CooccurrenceExtractorStep>(c);
  } else if (name == "conversational_extractor") {
    step = std::make_shared<ConversationalExtractorStep>(
        opt.get_int("conversation_gap", 100));
  } else {
    throw ConfigError("unknown step '" + name + "'");
  }

  opt.finish();
  return step;
}

}  // namespace fabula
