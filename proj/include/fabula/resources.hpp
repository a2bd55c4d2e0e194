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

#ifndef FABULA_RESOURCES_HPP_
#define FABULA_RESOURCES_HPP_

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace fabula {

// Language resource tables used by the rule-based steps. All lookups are on
// case-folded strings. English tables are built in; any table can be replaced
// from a resource directory (one file per table) or per-step file options.
//
// File formats, one entry per line, '#' starts a comment:
//   abbreviations_<lang>.txt   token spelling, trailing period kept ("Mr.")
//   honorifics_<lang>.txt      title spelling ("Mrs.", "Miss", "Sir")
//   stopwords_<lang>.txt       case-folded word
//   speech_verbs_<lang>.txt    case-folded verb form ("said", "replied")
//   gazetteer_<lang>.txt       person name, one per line
//   gendered_titles_<lang>.tsv title <TAB> gender (m|f)
//   hypocorisms_<lang>.tsv     nickname <TAB> fullname[,fullname...]
struct ResourceSet {
  std::string language = "eng";

  std::unordered_set<std::string> abbreviations;
  std::unordered_set<std::string> honorifics;
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> speech_verbs;
  std::unordered_set<std::string> gazetteer;
  // Normalized title (folded, trailing period stripped) -> 'm' or 'f'.
  std::unordered_map<std::string, char> gendered_titles;
  // Folded nickname -> folded full given names it may stand for.
  std::unordered_map<std::string, std::vector<std::string>> hypocorisms;

  bool is_honorific(const std::string& folded_token) const;
  // Gender implied by a title token, or '\0' when unknown.
  char title_gender(const std::string& folded_title) const;

  // Built-in English tables.
  static ResourceSet builtin_eng();

  // Tables for `language`: built-ins for "eng", empty otherwise, then any
  // per-table files found in `resource_dir` (may be empty) replace their
  // table. The directory is typically supplied via the FABULA_RESOURCES
  // environment variable.
  static ResourceSet for_language(const std::string& language,
                                  const std::string& resource_dir = "");

  // Replace one table from a file. `table` is the file-name prefix listed
  // above ("abbreviations", "hypocorisms", ...). Throws MissingResource when
  // the file cannot be read, MalformedArtifact on a bad record.
  void load_table(const std::string& table, const std::string& path);
};

// Shared helpers for resource lookups.
std::string fold_case(std::string_view text);
// Case-fold and strip one trailing period: "Mr." -> "mr".
std::string normalize_title(std::string_view title);

}  // namespace fabula

#endif  // FABULA_RESOURCES_HPP_
