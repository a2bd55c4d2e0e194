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

#include "fabula/names.hpp"

#include <sstream>

namespace fabula {
namespace {

std::vector<std::string> split_words(std::string_view surface) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : surface) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

}  // namespace

HumanName parse_human_name(std::string_view surface,
                           const ResourceSet& resources) {
  HumanName name;
  name.raw = std::string(surface);
  auto words = split_words(surface);

  std::size_t i = 0;
  std::vector<std::string> title_words;
  while (i < words.size() && resources.is_honorific(fold_case(words[i]))) {
    title_words.push_back(words[i]);
    ++i;
  }
  if (!title_words.empty()) {
    std::string t;
    for (std::size_t k = 0; k < title_words.size(); ++k) {
      if (k) t += ' ';
      t += title_words[k];
    }
    name.title = std::move(t);
  }

  std::vector<std::string> rest(words.begin() + i, words.end());
  if (rest.empty()) return name;  // title-only or empty: unparseable

  if (rest.size() == 1) {
    // A title followed by a single token names the family: "Miss Bennet".
    if (!name.title.empty())
      name.last = rest[0];
    else
      name.first = rest[0];
    return name;
  }
  name.first = rest.front();
  name.last = rest.back();
  name.middle.assign(rest.begin() + 1, rest.end() - 1);
  return name;
}

char name_gender(const HumanName& name, const ResourceSet& resources) {
  if (name.title.empty()) return '\0';
  for (const auto& word : split_words(name.title)) {
    char g = resources.title_gender(fold_case(word));
    if (g) return g;
  }
  return '\0';
}

}  // namespace fabula
