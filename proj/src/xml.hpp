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

// Just enough XML for writing and reading back GEXF/GraphML documents:
// elements, attributes, text, the five named entities and numeric character
// references. Not a general XML processor.

#ifndef FABULA_SRC_XML_HPP_
#define FABULA_SRC_XML_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fabula::xml {

std::string escape(std::string_view text);

struct Node {
  std::string name;
  std::map<std::string, std::string> attrs;
  std::vector<Node> children;
  std::string text;  // concatenated character data

  const Node* child(std::string_view name) const;
  std::vector<const Node*> children_named(std::string_view name) const;
  std::string attr(std::string_view key, std::string_view fallback = "") const;
  bool has_attr(std::string_view key) const;
};

// Parses a document into its root element. Throws SerializationError on
// malformed input. Comments, processing instructions and DOCTYPE are skipped.
Node parse(std::string_view document);

// Indented writer. Attribute order follows insertion order.
class Writer {
 public:
  Writer();
  void open(std::string_view name);
  void attr(std::string_view key, std::string_view value);
  void attr(std::string_view key, int value);
  void attr(std::string_view key, double value);
  void close();            // </name> or self-closing when empty
  void text(std::string_view content);
  std::string take();      // final document

 private:
  void flush_open_tag(bool self_close);

  std::string out_;
  std::vector<std::string> stack_;
  bool tag_open_ = false;
  bool had_content_ = false;
};

// Fixed-precision decimal for deterministic output across platforms.
std::string format_double(double value);

}  // namespace fabula::xml

#endif  // FABULA_SRC_XML_HPP_
