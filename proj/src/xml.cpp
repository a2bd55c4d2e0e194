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

#include "xml.hpp"

#include <cmath>
#include <cstdio>

#include "fabula/errors.hpp"
#include "unicode.hpp"

namespace fabula::xml {

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

const Node* Node::child(std::string_view name) const {
  for (const auto& c : children)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<const Node*> Node::children_named(std::string_view name) const {
  std::vector<const Node*> out;
  for (const auto& c : children)
    if (c.name == name) out.push_back(&c);
  return out;
}

std::string Node::attr(std::string_view key, std::string_view fallback) const {
  auto it = attrs.find(std::string(key));
  return it == attrs.end() ? std::string(fallback) : it->second;
}

bool Node::has_attr(std::string_view key) const {
  return attrs.find(std::string(key)) != attrs.end();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view doc) : doc_(doc) {}

  Node parse_document() {
    skip_misc();
    Node root = parse_element();
    skip_misc();
    if (pos_ != doc_.size()) fail("trailing content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw SerializationError("xml: " + what + " at byte " +
                             std::to_string(pos_));
  }

  bool starts_with(std::string_view prefix) const {
    return doc_.substr(pos_, prefix.size()) == prefix;
  }

  void skip_ws() {
    while (pos_ < doc_.size() &&
           (doc_[pos_] == ' ' || doc_[pos_] == '\t' || doc_[pos_] == '\n' ||
            doc_[pos_] == '\r'))
      ++pos_;
  }

  // Whitespace, XML declaration, comments, doctype.
  void skip_misc() {
    while (true) {
      skip_ws();
      if (starts_with("<?")) {
        auto end = doc_.find("?>", pos_);
        if (end == std::string_view::npos) fail("unterminated declaration");
        pos_ = end + 2;
      } else if (starts_with("<!--")) {
        auto end = doc_.find("-->", pos_);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
      } else if (starts_with("<!")) {
        auto end = doc_.find('>', pos_);
        if (end == std::string_view::npos) fail("unterminated <! section");
        pos_ = end + 1;
      } else {
        return;
      }
    }
  }

  static bool name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
           c == ':';
  }

  std::string parse_name() {
    std::size_t start = pos_;
    while (pos_ < doc_.size() && name_char(doc_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(doc_.substr(start, pos_ - start));
  }

  std::string decode_entities(std::string_view raw) {
    std::string out;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out += raw[i];
        continue;
      }
      auto semi = raw.find(';', i);
      if (semi == std::string_view::npos) fail("unterminated entity");
      std::string_view entity = raw.substr(i + 1, semi - i - 1);
      if (entity == "amp")
        out += '&';
      else if (entity == "lt")
        out += '<';
      else if (entity == "gt")
        out += '>';
      else if (entity == "quot")
        out += '"';
      else if (entity == "apos")
        out += '\'';
      else if (!entity.empty() && entity[0] == '#') {
        long cp = 0;
        if (entity.size() > 1 && (entity[1] == 'x' || entity[1] == 'X'))
          cp = std::strtol(std::string(entity.substr(2)).c_str(), nullptr, 16);
        else
          cp = std::strtol(std::string(entity.substr(1)).c_str(), nullptr, 10);
        out += uni::encode_utf8(static_cast<char32_t>(cp));
      } else {
        fail("unknown entity '&" + std::string(entity) + ";'");
      }
      i = semi;
    }
    return out;
  }

  Node parse_element() {
    if (pos_ >= doc_.size() || doc_[pos_] != '<') fail("expected '<'");
    ++pos_;
    Node node;
    node.name = parse_name();
    while (true) {
      skip_ws();
      if (pos_ >= doc_.size()) fail("unterminated tag");
      if (doc_[pos_] == '/') {
        if (!starts_with("/>")) fail("expected '/>'");
        pos_ += 2;
        return node;  // self-closing
      }
      if (doc_[pos_] == '>') {
        ++pos_;
        break;
      }
      std::string key = parse_name();
      skip_ws();
      if (pos_ >= doc_.size() || doc_[pos_] != '=') fail("expected '='");
      ++pos_;
      skip_ws();
      if (pos_ >= doc_.size() || (doc_[pos_] != '"' && doc_[pos_] != '\''))
        fail("expected a quoted attribute value");
      char quote = doc_[pos_++];
      auto end = doc_.find(quote, pos_);
      if (end == std::string_view::npos) fail("unterminated attribute value");
      node.attrs[key] = decode_entities(doc_.substr(pos_, end - pos_));
      pos_ = end + 1;
    }

    // Content until the matching close tag.
    while (true) {
      if (pos_ >= doc_.size()) fail("unterminated element <" + node.name + ">");
      if (starts_with("</")) {
        pos_ += 2;
        std::string closing = parse_name();
        if (closing != node.name)
          fail("mismatched close tag </" + closing + "> for <" + node.name +
               ">");
        skip_ws();
        if (pos_ >= doc_.size() || doc_[pos_] != '>') fail("expected '>'");
        ++pos_;
        return node;
      }
      if (starts_with("<!--")) {
        auto end = doc_.find("-->", pos_);
        if (end == std::string_view::npos) fail("unterminated comment");
        pos_ = end + 3;
        continue;
      }
      if (starts_with("<![CDATA[")) {
        auto end = doc_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA");
        node.text += std::string(doc_.substr(pos_ + 9, end - pos_ - 9));
        pos_ = end + 3;
        continue;
      }
      if (doc_[pos_] == '<') {
        node.children.push_back(parse_element());
        continue;
      }
      auto next = doc_.find('<', pos_);
      if (next == std::string_view::npos) fail("unterminated element content");
      node.text += decode_entities(doc_.substr(pos_, next - pos_));
      pos_ = next;
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
};

}  // namespace

Node parse(std::string_view document) {
  return Parser(document).parse_document();
}

Writer::Writer() {
  out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
}

void Writer::flush_open_tag(bool self_close) {
  if (!tag_open_) return;
  out_ += self_close ? "/>\n" : ">\n";
  tag_open_ = false;
}

void Writer::open(std::string_view name) {
  flush_open_tag(false);
  out_.append(stack_.size() * 2, ' ');
  out_ += '<';
  out_ += name;
  stack_.emplace_back(name);
  tag_open_ = true;
  had_content_ = false;
}

void Writer::attr(std::string_view key, std::string_view value) {
  out_ += ' ';
  out_ += key;
  out_ += "=\"";
  out_ += escape(value);
  out_ += '"';
}

void Writer::attr(std::string_view key, int value) {
  attr(key, std::to_string(value));
}

void Writer::attr(std::string_view key, double value) {
  attr(key, format_double(value));
}

void Writer::text(std::string_view content) {
  flush_open_tag(false);
  // Drop the trailing newline of the open tag for inline text.
  if (!out_.empty() && out_.back() == '\n') out_.pop_back();
  out_ += escape(content);
  had_content_ = true;
}

void Writer::close() {
  if (stack_.empty()) throw SerializationError("xml: close without open");
  std::string name = stack_.back();
  stack_.pop_back();
  if (tag_open_) {
    flush_open_tag(true);
    return;
  }
  if (had_content_) {
    out_ += "</" + name + ">\n";
    had_content_ = false;
    return;
  }
  out_.append(stack_.size() * 2, ' ');
  out_ += "</" + name + ">\n";
}

std::string Writer::take() {
  if (!stack_.empty())
    throw SerializationError("xml: unclosed element <" + stack_.back() + ">");
  return std::move(out_);
}

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", value);
  return buf;
}

}  // namespace fabula::xml
