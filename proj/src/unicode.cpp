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

#include "unicode.hpp"

namespace fabula::uni {

std::vector<CodePoint> decode_utf8(std::string_view text) {
  std::vector<CodePoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    char32_t cp = b0;
    if (b0 >= 0xF0)
      len = 4;
    else if (b0 >= 0xE0)
      len = 3;
    else if (b0 >= 0xC0)
      len = 2;

    if (len > 1) {
      if (i + len > text.size()) len = 1;  // truncated sequence
      bool ok = len > 1;
      char32_t acc = b0 & (0x7F >> len);
      for (std::size_t k = 1; ok && k < len; ++k) {
        unsigned char bk = static_cast<unsigned char>(text[i + k]);
        if ((bk & 0xC0) != 0x80) ok = false;
        acc = (acc << 6) | (bk & 0x3F);
      }
      if (ok)
        cp = acc;
      else
        len = 1;  // invalid byte passes through alone
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

std::string encode_utf8(char32_t cp) {
  std::string s;
  if (cp < 0x80) {
    s += static_cast<char>(cp);
  } else if (cp < 0x800) {
    s += static_cast<char>(0xC0 | (cp >> 6));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    s += static_cast<char>(0xE0 | (cp >> 12));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    s += static_cast<char>(0xF0 | (cp >> 18));
    s += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    s += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    s += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return s;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\f':
    case U'\v':
    case 0x00A0:  // no-break space
    case 0x2028:
    case 0x2029:
      return true;
    default:
      return false;
  }
}

bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x24F) return true;  // Latin Extended-A/B
  return false;
}

bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return true;
  if (cp >= 0x100 && cp <= 0x137) return (cp & 1) == 0;
  if (cp >= 0x139 && cp <= 0x148) return (cp & 1) == 1;
  if (cp >= 0x14A && cp <= 0x177) return (cp & 1) == 0;
  if (cp == 0x178 || cp == 0x179 || cp == 0x17B || cp == 0x17D) return true;
  return false;
}

bool is_lower(char32_t cp) { return is_letter(cp) && !is_upper(cp); }

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x137 && (cp & 1) == 0) return cp + 1;
  if (cp >= 0x139 && cp <= 0x148 && (cp & 1) == 1) return cp + 1;
  if (cp >= 0x14A && cp <= 0x177 && (cp & 1) == 0) return cp + 1;
  if (cp == 0x178) return 0xFF;  // Ÿ -> ÿ
  if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
  return cp;
}

bool is_open_quote(char32_t cp) {
  return cp == kStraightDouble || cp == 0x201C /* “ */ ||
         cp == 0x2018 /* ‘ */ || cp == 0x00AB /* « */;
}

bool is_close_quote(char32_t cp) {
  return cp == kStraightDouble || cp == 0x201D /* ” */ ||
         cp == 0x2019 /* ’ */ || cp == 0x00BB /* » */;
}

char32_t matching_close(char32_t open) {
  switch (open) {
    case 0x201C:
      return 0x201D;
    case 0x2018:
      return 0x2019;
    case 0x00AB:
      return 0x00BB;
    default:
      return open;  // straight quote closes itself
  }
}

bool is_sentence_terminal(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026 /* … */;
}

bool is_trailing_closer(char32_t cp) {
  return is_close_quote(cp) || cp == U')' || cp == U']' || cp == U'}' ||
         cp == U'\'';
}

bool is_dash(char32_t cp) {
  return cp == U'-' || cp == 0x2013 /* – */ || cp == 0x2014 /* — */;
}

}  // namespace fabula::uni
