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

#ifndef FABULA_NAMES_HPP_
#define FABULA_NAMES_HPP_

#include <string_view>

#include "fabula/resources.hpp"
#include "fabula/types.hpp"

namespace fabula {

// Decomposes a name surface form. Leading honorifics become the title; of the
// remaining tokens a single token is the first name, two or more become
// first + last with the interior as middle names. A title followed by exactly
// one token is read as title + last ("Miss Bennet"). Never throws: a surface
// with no name tokens comes back unparseable.
HumanName parse_human_name(std::string_view surface,
                           const ResourceSet& resources);

// Gender implied by the name's title, or '\0' when unknown.
char name_gender(const HumanName& name, const ResourceSet& resources);

}  // namespace fabula

#endif  // FABULA_NAMES_HPP_
