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

#ifndef FABULA_INJECTION_HPP_
#define FABULA_INJECTION_HPP_

#include <string>

#include "fabula/artifact.hpp"

namespace fabula {

// Reads one injection sidecar file. Records are line-delimited with
// tab-separated fields and token-index spans; blank lines and lines starting
// with '#' are skipped.
//
//   entities  first_token <TAB> last_token <TAB> label      (label: PER)
//   corefs    one chain per line: first:last spans, tab-separated
//   quotes    first_token <TAB> last_token [<TAB> open <TAB> close]
//
// The artifact is structurally validated (validate_injected); span-vs-token
// range checks happen inside Pipeline::run once tokens exist. Throws
// MalformedArtifact carrying the offending line number, or Error when the
// file cannot be read.
ArtifactValue read_injection_file(const std::string& path, ArtifactKey key);

}  // namespace fabula

#endif  // FABULA_INJECTION_HPP_
