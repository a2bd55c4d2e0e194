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

#ifndef FABULA_CONFIG_HPP_
#define FABULA_CONFIG_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "fabula/pipeline.hpp"
#include "fabula/resources.hpp"

namespace fabula {

// A run configuration: the JSON schema (version 1) described in the README.
// It mirrors a pipeline definition one-to-one: an ordered step list with
// per-step options, plus input, language, injection sidecars and output.
struct RunConfig {
  int version = 1;
  std::string input_path;
  std::string language = "eng";

  struct Step {
    std::string name;
    nlohmann::json options;  // object; step-specific keys
  };
  std::vector<Step> steps;

  std::map<ArtifactKey, std::string> inject;  // key -> sidecar path

  struct Output {
    std::string format = "json";
    std::string path;
    bool styled = false;
  };
  Output output;

  std::string resource_dir;  // optional; overrides built-in tables
};

// Parses and validates a config document / file. Unknown top-level keys,
// unknown steps, unknown artifact keys and schema violations raise
// ConfigError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

// Builds the pipeline described by the config. The resource set is resolved
// from config.language and config.resource_dir unless one is supplied.
Pipeline build_pipeline(const RunConfig& config,
                        std::shared_ptr<const ResourceSet> resources = nullptr);

// Reads every injection sidecar named by the config.
InjectedArtifacts load_injections(const RunConfig& config);

}  // namespace fabula

#endif  // FABULA_CONFIG_HPP_
