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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fabula/config.hpp"
#include "fabula/graph_io.hpp"
#include "fabula/pipeline.hpp"
#include "fabula/steps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;     // step failure, IO errors
constexpr int kExitInvalid = 2;     // pipeline validation failure

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fabula::Error("cannot read input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// write-temp-then-rename so readers never observe a partial file
void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  if (target.has_parent_path())
    std::filesystem::create_directories(target.parent_path());
  std::filesystem::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw fabula::Error("cannot write output file: " + path);
    out << content;
  }
  std::filesystem::rename(temp, target);
}

void print_diagnostics(const fabula::ValidationReport& report) {
  for (const auto& d : report.diagnostics) {
    std::cerr << "error: step " << d.step_index << " (" << d.step_name << ")";
    if (!d.missing.empty())
      std::cerr << " is missing " << d.missing.to_string();
    if (d.language_mismatch)
      std::cerr << (d.missing.empty() ? " does" : " and")
                << " not support the pipeline language";
    std::cerr << "\n";
  }
}

struct CommonFlags {
  std::string language;
  std::string resources;
};

fabula::RunConfig load_with_overrides(const std::string& config_path,
                                      const CommonFlags& flags) {
  fabula::RunConfig config = fabula::load_config(config_path);
  if (!flags.language.empty()) config.language = flags.language;
  if (!flags.resources.empty()) config.resource_dir = flags.resources;
  return config;
}

int do_validate(const std::string& config_path, const CommonFlags& flags) {
  auto config = load_with_overrides(config_path, flags);
  auto pipeline = fabula::build_pipeline(config);
  auto injected = fabula::load_injections(config);
  fabula::KeySet injected_keys;
  for (const auto& [key, value] : injected) injected_keys.insert(key);

  // Availability trace, one line per step.
  fabula::KeySet available = injected_keys;
  available.insert(fabula::ArtifactKey::Text);
  int index = 0;
  for (const auto& step : pipeline.steps()) {
    const auto& sig = step->signature();
    auto missing = sig.needs - available;
    std::cout << "step " << index << " " << sig.step_name << ": available "
              << available.to_string() << ", needs " << sig.needs.to_string();
    if (missing.empty() && sig.supports_language(config.language))
      std::cout << " -> ok, produces " << sig.produces.to_string();
    if (!missing.empty()) std::cout << " -> MISSING " << missing.to_string();
    if (!sig.supports_language(config.language))
      std::cout << " -> language '" << config.language << "' unsupported";
    std::cout << "\n";
    available |= sig.produces;
    ++index;
  }

  auto report = pipeline.validate(config.language, injected_keys);
  if (!report.valid) {
    print_diagnostics(report);
    return kExitInvalid;
  }
  std::cout << "pipeline is valid\n";
  return kExitOk;
}

int do_run(const std::string& config_path, const CommonFlags& flags,
           const std::string& input_override,
           const std::string& output_override,
           const std::string& format_override, bool styled_override) {
  auto config = load_with_overrides(config_path, flags);
  if (!input_override.empty()) config.input_path = input_override;
  if (!output_override.empty()) config.output.path = output_override;
  if (!format_override.empty()) config.output.format = format_override;
  if (styled_override) config.output.styled = true;

  if (config.input_path.empty())
    throw fabula::ConfigError("no input: set 'input' in the config or --input");
  if (config.output.path.empty())
    throw fabula::ConfigError(
        "no output path: set 'output.path' in the config or --output");
  auto format = fabula::graph_format_from(config.output.format);

  auto pipeline = fabula::build_pipeline(config);
  auto injected = fabula::load_injections(config);
  fabula::KeySet injected_keys;
  for (const auto& [key, value] : injected) injected_keys.insert(key);

  auto report = pipeline.validate(config.language, injected_keys);
  if (!report.valid) {
    print_diagnostics(report);
    return kExitInvalid;
  }
  fabula::KeySet produced = injected_keys;
  produced.insert(fabula::ArtifactKey::Text);
  for (const auto& step : pipeline.steps())
    produced |= step->signature().produces;
  if (!produced.contains(fabula::ArtifactKey::CharacterNetwork)) {
    std::cerr << "error: no step produces {character_network}; nothing to "
                 "export\n";
    return kExitInvalid;
  }

  auto state = pipeline.run(read_file(config.input_path), config.language,
                            std::move(injected));
  const auto& network =
      state.get<fabula::NetworkArtifact>(fabula::ArtifactKey::CharacterNetwork);
  write_file_atomic(config.output.path,
                    fabula::export_network(network, format,
                                           config.output.styled));

  if (network.is_dynamic()) {
    std::cout << "wrote " << config.output.path << " ("
              << network.dynamic_network().slices.size() << " slices)\n";
  } else {
    std::cout << "wrote " << config.output.path << " ("
              << network.static_network().vertices.size() << " characters, "
              << network.static_network().edges.size() << " edges)\n";
  }
  return kExitOk;
}

int do_export(const std::string& state_path, const std::string& format_name,
              const std::string& output_path, bool styled) {
  auto network = fabula::import_json(read_file(state_path));
  auto format = fabula::graph_format_from(format_name);
  auto content = fabula::export_network(network, format, styled);
  if (output_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(output_path, content);
    std::cout << "wrote " << output_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "fabula: character network extraction from narrative text.\n"
      "Pipelines are described by a JSON config; see the README for the "
      "schema."};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string config_path, input_override, output_override, format_override;
  std::string state_path, export_format = "gexf", export_output;
  bool styled = false, export_styled = false;

  auto* run = app.add_subcommand("run", "run a pipeline over a text");
  run->add_option("config", config_path, "pipeline config file")->required();
  run->add_option("--input", input_override, "input text (overrides config)");
  run->add_option("--output", output_override,
                  "output path (overrides config)");
  run->add_option("--format", format_override,
                  "gexf|graphml|dot|json (overrides config)");
  run->add_flag("--styled", styled, "emit visual attributes");
  run->add_option("--language", flags.language,
                  "ISO 639-3 language (overrides config)");
  run->add_option("--resources", flags.resources,
                  "resource directory (or FABULA_RESOURCES)");

  auto* validate =
      app.add_subcommand("validate", "explain whether a pipeline can run");
  validate->add_option("config", config_path, "pipeline config file")
      ->required();
  validate->add_option("--language", flags.language,
                       "ISO 639-3 language (overrides config)");
  validate->add_option("--resources", flags.resources, "resource directory");

  auto* exp = app.add_subcommand(
      "export", "convert a JSON network export to another format");
  exp->add_option("state", state_path, "JSON network file from 'run'")
      ->required();
  exp->add_option("--format", export_format, "gexf|graphml|dot|json");
  exp->add_option("-o,--output", export_output,
                  "output path (stdout when omitted)");
  exp->add_flag("--styled", export_styled, "emit visual attributes");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return do_run(config_path, flags, input_override, output_override,
                    format_override, styled);
    if (validate->parsed()) return do_validate(config_path, flags);
    if (exp->parsed())
      return do_export(state_path, export_format, export_output,
                       export_styled);
  } catch (const fabula::ValidationError& e) {
    print_diagnostics(e.report());
    return kExitInvalid;
  } catch (const fabula::StepError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
