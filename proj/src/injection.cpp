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

#include "fabula/injection.hpp"

#include <fstream>

#include "fabula/errors.hpp"
#include "fabula/pipeline.hpp"

namespace fabula {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

int parse_index(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw MalformedArtifact("expected a token index, got '" + s + "'", line);
  }
}

}  // namespace

ArtifactValue read_injection_file(const std::string& path, ArtifactKey key) {
  if (key != ArtifactKey::Entities && key != ArtifactKey::Corefs &&
      key != ArtifactKey::Quotes)
    throw MalformedArtifact("artifact '" + std::string(to_string(key)) +
                            "' cannot be injected from a file");
  std::ifstream in(path);
  if (!in) throw Error("cannot read injection file: " + path);

  std::vector<EntityMention> entities;
  std::vector<CorefChain> chains;
  std::vector<Quote> quotes;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);

    switch (key) {
      case ArtifactKey::Entities: {
        if (fields.size() != 3)
          throw MalformedArtifact(
              "entity record needs 3 tab-separated fields "
              "(first, last, label)",
              line_no);
        EntityMention m;
        m.first_token = parse_index(fields[0], line_no);
        m.last_token = parse_index(fields[1], line_no);
        if (fields[2] != "PER")
          throw MalformedArtifact("unsupported entity label '" + fields[2] +
                                  "' (only PER)", line_no);
        if (m.first_token > m.last_token)
          throw MalformedArtifact("entity span is inverted", line_no);
        entities.push_back(std::move(m));
        break;
      }
      case ArtifactKey::Corefs: {
        CorefChain chain;
        for (const auto& field : fields) {
          if (field.empty()) continue;
          auto colon = field.find(':');
          if (colon == std::string::npos)
            throw MalformedArtifact(
                "coref span must be first:last, got '" + field + "'", line_no);
          CorefChain::Span span;
          span.first_token = parse_index(field.substr(0, colon), line_no);
          span.last_token = parse_index(field.substr(colon + 1), line_no);
          if (span.first_token > span.last_token)
            throw MalformedArtifact("coref span is inverted", line_no);
          chain.mentions.push_back(span);
        }
        if (chain.mentions.empty())
          throw MalformedArtifact("empty coreference chain", line_no);
        chains.push_back(std::move(chain));
        break;
      }
      case ArtifactKey::Quotes: {
        if (fields.size() != 2 && fields.size() != 4)
          throw MalformedArtifact(
              "quote record needs 2 or 4 tab-separated fields "
              "(first, last[, open, close])",
              line_no);
        Quote q;
        q.first_token = parse_index(fields[0], line_no);
        q.last_token = parse_index(fields[1], line_no);
        if (q.first_token > q.last_token)
          throw MalformedArtifact("quote span is inverted", line_no);
        q.open_mark = fields.size() == 4 ? fields[2] : "\"";
        q.close_mark = fields.size() == 4 ? fields[3] : "\"";
        quotes.push_back(std::move(q));
        break;
      }
      default:
        break;
    }
  }

  ArtifactValue value;
  switch (key) {
    case ArtifactKey::Entities:
      value = std::move(entities);
      break;
    case ArtifactKey::Corefs:
      value = std::move(chains);
      break;
    default:
      value = std::move(quotes);
      break;
  }
  validate_injected(key, value);  // ordering/overlap checks
  return value;
}

}  // namespace fabula
