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

#include "fabula/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>

#include "fabula/injection.hpp"
#include "fabula/steps.hpp"

namespace fabula {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("config must be a JSON object");
  static const std::set<std::string> known_keys = {
      "version", "input",  "language", "steps",
      "inject",  "output", "resources"};
  for (const auto& [key, value] : doc.items())
    if (!known_keys.count(key)) fail("unknown config key '" + key + "'");

  RunConfig config;
  config.version = doc.value("version", 1);
  if (config.version != 1)
    fail("unsupported config version " + std::to_string(config.version));

  if (doc.contains("input")) {
    if (!doc["input"].is_string()) fail("'input' must be a string path");
    config.input_path = doc["input"].get<std::string>();
  }
  if (doc.contains("language")) {
    if (!doc["language"].is_string()) fail("'language' must be a string");
    config.language = doc["language"].get<std::string>();
  }
  if (doc.contains("resources")) {
    if (!doc["resources"].is_string()) fail("'resources' must be a string");
    config.resource_dir = doc["resources"].get<std::string>();
  }

  if (!doc.contains("steps") || !doc["steps"].is_array())
    fail("config needs a 'steps' array");
  auto known_steps = known_step_names();
  for (const auto& s : doc["steps"]) {
    RunConfig::Step step;
    if (s.is_string()) {
      step.name = s.get<std::string>();
      step.options = json::object();
    } else if (s.is_object()) {
      if (!s.contains("name") || !s["name"].is_string())
        fail("each step needs a string 'name'");
      step.name = s["name"].get<std::string>();
      step.options = s;
      step.options.erase("name");
    } else {
      fail("each step must be a name or an object");
    }
    if (std::find(known_steps.begin(), known_steps.end(), step.name) ==
        known_steps.end())
      fail("unknown step '" + step.name + "'");
    config.steps.push_back(std::move(step));
  }

  if (doc.contains("inject")) {
    if (!doc["inject"].is_object())
      fail("'inject' must map artifact keys to file paths");
    for (const auto& [key, value] : doc["inject"].items()) {
      auto artifact = artifact_key_from(key);
      if (!artifact) fail("unknown artifact key '" + key + "' in 'inject'");
      if (!value.is_string()) fail("injection path for '" + key +
                                   "' must be a string");
      config.inject[*artifact] = value.get<std::string>();
    }
  }

  if (doc.contains("output")) {
    const auto& out = doc["output"];
    if (!out.is_object()) fail("'output' must be an object");
    for (const auto& [key, value] : out.items())
      if (key != "format" && key != "path" && key != "styled")
        fail("unknown output key '" + key + "'");
    config.output.format = out.value("format", "json");
    config.output.path = out.value("path", "");
    config.output.styled = out.value("styled", false);
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    fail("config is not valid JSON: " + std::string(e.what()));
  }
  return parse_config(doc);
}

Pipeline build_pipeline(const RunConfig& config,
                        std::shared_ptr<const ResourceSet> resources) {
  if (!resources) {
    std::string dir = config.resource_dir;
    if (dir.empty()) {
      const char* env = std::getenv("FABULA_RESOURCES");
      if (env) dir = env;
    }
    resources = std::make_shared<ResourceSet>(
        ResourceSet::for_language(config.language, dir));
  }
  std::vector<StepPtr> steps;
  steps.reserve(config.steps.size());
  for (const auto& s : config.steps)
    steps.push_back(make_step(s.name, s.options, resources));
  return Pipeline(std::move(steps));
}

InjectedArtifacts load_injections(const RunConfig& config) {
  InjectedArtifacts injected;
  for (const auto& [key, path] : config.inject)
    injected[key] = read_injection_file(path, key);
  return injected;
}

}  // namespace fabula
