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

#include "fabula/text.hpp"

#include <regex>

#include "fabula/errors.hpp"
#include "unicode.hpp"

namespace fabula {
namespace {

using uni::CodePoint;

// Rejects replacement strings referencing capture groups the pattern lacks.
void check_replacement(const std::string& replacement,
                       std::size_t group_count) {
  for (std::size_t i = 0; i + 1 < replacement.size(); ++i) {
    if (replacement[i] != '$') continue;
    char next = replacement[i + 1];
    if (next == '$') {
      ++i;  // escaped dollar
      continue;
    }
    if (next >= '0' && next <= '9') {
      std::size_t j = i + 1;
      unsigned long group = 0;
      while (j < replacement.size() && replacement[j] >= '0' &&
             replacement[j] <= '9' && j - i <= 2)
        group = group * 10 + (replacement[j++] - '0');
      if (group > group_count)
        throw InvalidPattern("replacement references group $" +
                             std::to_string(group) + " but the pattern has " +
                             std::to_string(group_count) + " group(s)");
    }
  }
}

bool is_word_cp(char32_t cp) {
  return uni::is_letter(cp) || uni::is_digit(cp) || cp == U'_';
}

// An apostrophe flanked by word characters belongs to the word ("Darcy's").
bool is_internal_apostrophe(const std::vector<CodePoint>& cps, std::size_t i,
                            std::size_t begin, std::size_t end) {
  char32_t cp = cps[i].cp;
  if (cp != U'\'' && cp != 0x2019) return false;
  return i > begin && i + 1 < end && is_word_cp(cps[i - 1].cp) &&
         is_word_cp(cps[i + 1].cp);
}

bool is_punct_cp(const std::vector<CodePoint>& cps, std::size_t i,
                 std::size_t begin, std::size_t end) {
  char32_t cp = cps[i].cp;
  if (is_word_cp(cp)) return false;
  if (is_internal_apostrophe(cps, i, begin, end)) return false;
  // Word-internal hyphens, periods between digits ("1.5"), commas between
  // digits ("1,000") stay inside the token.
  if ((cp == U'-' || cp == U'.' || cp == U',') && i > begin && i + 1 < end &&
      is_word_cp(cps[i - 1].cp) && is_word_cp(cps[i + 1].cp)) {
    if (cp == U'-') return false;
    if (uni::is_digit(cps[i - 1].cp) && uni::is_digit(cps[i + 1].cp))
      return false;
  }
  return true;
}

struct RawToken {
  std::size_t cp_begin;
  std::size_t cp_end;  // exclusive
};

}  // namespace

std::string apply_substitutions(const std::string& text,
                                const std::vector<SubstitutionRule>& rules) {
  std::string result = text;
  for (const auto& rule : rules) {
    std::regex re;
    try {
      re = std::regex(rule.pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw InvalidPattern("pattern '" + rule.pattern +
                           "' does not compile: " + e.what());
    }
    check_replacement(rule.replacement, re.mark_count());
    result = std::regex_replace(result, re, rule.replacement);
  }
  return result;
}

Tokenization tokenize(std::string_view text, const std::string& /*language*/,
                      const ResourceSet& resources) {
  Tokenization out;
  const std::vector<CodePoint> cps = uni::decode_utf8(text);

  auto substr = [&](std::size_t cp_begin, std::size_t cp_end) {
    if (cp_begin >= cp_end) return std::string();
    std::size_t b = cps[cp_begin].offset;
    std::size_t e = cps[cp_end - 1].offset + cps[cp_end - 1].size;
    return std::string(text.substr(b, e - b));
  };
  auto folded_substr = [&](std::size_t cp_begin, std::size_t cp_end) {
    std::string s;
    for (std::size_t i = cp_begin; i < cp_end; ++i)
      s += uni::encode_utf8(uni::to_lower(cps[i].cp));
    return s;
  };

  std::vector<RawToken> raw;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (uni::is_space(cps[i].cp)) {
      ++i;
      continue;
    }
    std::size_t chunk_end = i;
    while (chunk_end < n && !uni::is_space(cps[chunk_end].cp)) ++chunk_end;

    // Peel punctuation off both ends of the chunk; runs of an identical mark
    // stay together ("..." or "!!"). The abbreviation check runs before each
    // trailing peel so "Mr.," ends up as ["Mr.", ","].
    std::size_t b = i;
    std::size_t e = chunk_end;
    std::vector<RawToken> trailing;
    while (b < e) {
      if (is_punct_cp(cps, b, i, chunk_end)) {
        std::size_t run = b + 1;
        while (run < e && cps[run].cp == cps[b].cp &&
               is_punct_cp(cps, run, i, chunk_end))
          ++run;
        raw.push_back({b, run});
        b = run;
        continue;
      }
      std::string folded = folded_substr(b, e);
      bool keep_whole = resources.abbreviations.count(folded) != 0;
      // Single-letter initials ("A.") keep their period too.
      if (!keep_whole && e - b == 2 && uni::is_letter(cps[b].cp) &&
          cps[e - 1].cp == U'.')
        keep_whole = true;
      if (keep_whole) {
        raw.push_back({b, e});
        b = e;
        break;
      }
      if (is_punct_cp(cps, e - 1, i, chunk_end)) {
        std::size_t run = e - 1;
        while (run > b && cps[run - 1].cp == cps[e - 1].cp &&
               is_punct_cp(cps, run - 1, i, chunk_end))
          --run;
        trailing.push_back({run, e});
        e = run;
        continue;
      }
      raw.push_back({b, e});
      b = e;
      break;
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it)
      raw.push_back(*it);
    i = chunk_end;
  }

  out.tokens.reserve(raw.size());
  for (std::size_t t = 0; t < raw.size(); ++t) {
    Token tok;
    tok.index = static_cast<int>(t);
    tok.text = substr(raw[t].cp_begin, raw[t].cp_end);
    tok.start = cps[raw[t].cp_begin].offset;
    tok.end =
        cps[raw[t].cp_end - 1].offset + cps[raw[t].cp_end - 1].size;
    out.tokens.push_back(std::move(tok));
  }

  if (out.tokens.empty()) return out;

  // Sentence segmentation. A terminal-punctuation token ends the sentence,
  // after absorbing trailing closers, unless the continuation clearly belongs
  // to the same sentence (next token starts lowercase or is joining
  // punctuation). A blank line between tokens always ends the sentence.
  auto token_is_terminal = [&](const Token& tok) {
    auto tcps = uni::decode_utf8(tok.text);
    for (const auto& c : tcps)
      if (!uni::is_sentence_terminal(c.cp)) return false;
    return !tcps.empty();
  };
  auto token_is_closer = [&](const Token& tok) {
    auto tcps = uni::decode_utf8(tok.text);
    return tcps.size() == 1 && uni::is_trailing_closer(tcps[0].cp);
  };
  auto blank_line_before = [&](std::size_t token_index) {
    if (token_index == 0) return false;
    std::size_t gap_begin = out.tokens[token_index - 1].end;
    std::size_t gap_end = out.tokens[token_index].start;
    int newlines = 0;
    for (std::size_t p = gap_begin; p < gap_end; ++p)
      if (text[p] == '\n') ++newlines;
    return newlines >= 2;
  };
  auto continues_sentence = [&](const Token& tok) {
    auto tcps = uni::decode_utf8(tok.text);
    if (tcps.empty()) return false;
    char32_t first = tcps[0].cp;
    if (uni::is_lower(first)) return true;
    return first == U',' || first == U';' || first == U':' ||
           uni::is_dash(first);
  };

  std::vector<SentenceSpan> sentences;
  int sentence_first = 0;
  std::size_t t = 0;
  const std::size_t count = out.tokens.size();
  while (t < count) {
    bool boundary = false;
    std::size_t last = t;
    if (token_is_terminal(out.tokens[t])) {
      // Cluster consecutive terminals ("?" "!") and absorb closers.
      while (last + 1 < count && token_is_terminal(out.tokens[last + 1]))
        ++last;
      while (last + 1 < count && token_is_closer(out.tokens[last + 1]) &&
             !blank_line_before(last + 1))
        ++last;
      boundary = true;
      if (last + 1 < count && !blank_line_before(last + 1) &&
          continues_sentence(out.tokens[last + 1]))
        boundary = false;
    } else if (t + 1 < count && blank_line_before(t + 1)) {
      boundary = true;
    }
    if (boundary) {
      sentences.push_back({sentence_first, static_cast<int>(last)});
      sentence_first = static_cast<int>(last) + 1;
    }
    t = last + 1;
  }
  if (sentence_first < static_cast<int>(count))
    sentences.push_back({sentence_first, static_cast<int>(count) - 1});
  out.sentences = std::move(sentences);
  return out;
}

}  // namespace fabula
