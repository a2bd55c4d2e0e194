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

// Minimal UTF-8 and Latin-script character classification, enough for
// tokenizing narrative prose. Not a general Unicode library.

#ifndef FABULA_SRC_UNICODE_HPP_
#define FABULA_SRC_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fabula::uni {

struct CodePoint {
  char32_t cp = 0;
  std::size_t offset = 0;  // byte offset of the first byte
  std::size_t size = 0;    // encoded byte length
};

// Decodes UTF-8. An invalid byte is passed through as its own code point so
// byte offsets always reconstruct the input exactly.
std::vector<CodePoint> decode_utf8(std::string_view text);

std::string encode_utf8(char32_t cp);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
char32_t to_lower(char32_t cp);

// Quotation delimiters.
inline constexpr char32_t kStraightDouble = U'"';
bool is_open_quote(char32_t cp);   // " “ ‘ «
bool is_close_quote(char32_t cp);  // " ” ’ »
// The closing mark paired with an opening mark.
char32_t matching_close(char32_t open);

// Sentence-final punctuation: . ! ? …
bool is_sentence_terminal(char32_t cp);
// Marks absorbed into the sentence after a terminal: closing quotes and
// closing brackets.
bool is_trailing_closer(char32_t cp);
bool is_dash(char32_t cp);  // - – —

}  // namespace fabula::uni

#endif  // FABULA_SRC_UNICODE_HPP_
