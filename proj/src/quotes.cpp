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

#include "fabula/quotes.hpp"

#include <algorithm>
#include <optional>

#include "unicode.hpp"

namespace fabula {
namespace {

// A token that is exactly one quote delimiter.
std::optional<char32_t> quote_mark(const Token& token) {
  auto cps = uni::decode_utf8(token.text);
  if (cps.size() != 1) return std::nullopt;
  char32_t cp = cps[0].cp;
  if (uni::is_open_quote(cp) || uni::is_close_quote(cp)) return cp;
  return std::nullopt;
}

bool is_punct_token(const Token& token) {
  auto cps = uni::decode_utf8(token.text);
  for (const auto& c : cps)
    if (uni::is_letter(c.cp) || uni::is_digit(c.cp)) return false;
  return !cps.empty();
}

}  // namespace

std::vector<Quote> detect_quotes(const std::vector<Token>& tokens,
                                 const QuoteOptions& options) {
  std::vector<Quote> raw;
  // One stack per distinct-pair type; straight double quotes pair greedily
  // left to right.
  std::vector<int> curly, single, guillemet;
  int straight_open = -1;

  auto emit = [&](int open_idx, int close_idx) {
    Quote q;
    q.first_token = open_idx;
    q.last_token = close_idx;
    q.open_mark = tokens[open_idx].text;
    q.close_mark = tokens[close_idx].text;
    raw.push_back(std::move(q));
  };

  for (int t = 0; t < static_cast<int>(tokens.size()); ++t) {
    auto mark = quote_mark(tokens[t]);
    if (!mark) continue;
    switch (*mark) {
      case uni::kStraightDouble:
        if (straight_open < 0) {
          straight_open = t;
        } else {
          emit(straight_open, t);
          straight_open = -1;
        }
        break;
      case 0x201C:
        curly.push_back(t);
        break;
      case 0x201D:
        if (!curly.empty()) {
          emit(curly.back(), t);
          curly.pop_back();
        }
        break;
      case 0x2018:
        single.push_back(t);
        break;
      case 0x2019:
        if (!single.empty()) {
          emit(single.back(), t);
          single.pop_back();
        }
        break;
      case 0x00AB:
        guillemet.push_back(t);
        break;
      case 0x00BB:
        if (!guillemet.empty()) {
          emit(guillemet.back(), t);
          guillemet.pop_back();
        }
        break;
      default:
        break;
    }
  }
  // Openings still on a stack here were never closed and are dropped.

  std::erase_if(
      raw, [&](const Quote& q) { return q.length() > options.max_quote_len; });

  // Keep the outermost span wherever spans nest or overlap.
  std::sort(raw.begin(), raw.end(), [](const Quote& a, const Quote& b) {
    if (a.first_token != b.first_token) return a.first_token < b.first_token;
    return a.last_token > b.last_token;
  });
  std::vector<Quote> quotes;
  int covered_until = -1;
  for (auto& q : raw) {
    if (q.first_token <= covered_until) continue;
    covered_until = q.last_token;
    quotes.push_back(std::move(q));
  }
  return quotes;
}

std::vector<std::pair<int, int>> segment_conversations(
    const std::vector<Quote>& quotes, int conversation_gap) {
  std::vector<std::pair<int, int>> segments;
  if (quotes.empty()) return segments;
  int first = 0;
  for (int i = 1; i < static_cast<int>(quotes.size()); ++i) {
    int between = quotes[i].first_token - quotes[i - 1].last_token - 1;
    if (between > conversation_gap) {
      segments.emplace_back(first, i - 1);
      first = i;
    }
  }
  segments.emplace_back(first, static_cast<int>(quotes.size()) - 1);
  return segments;
}

std::vector<SpeakerAttribution> attribute_speakers(
    const std::vector<Quote>& quotes, const std::vector<EntityMention>& mentions,
    const std::vector<Token>& tokens, const ResourceSet& resources,
    const AttributionOptions& options) {
  std::vector<SpeakerAttribution> out;
  out.reserve(quotes.size());
  if (quotes.empty()) return out;

  std::vector<int> conversation_of(quotes.size(), 0);
  auto segments = segment_conversations(quotes, options.conversation_gap);
  for (int s = 0; s < static_cast<int>(segments.size()); ++s)
    for (int q = segments[s].first; q <= segments[s].second; ++q)
      conversation_of[q] = s;

  auto is_speech_verb = [&](int t) {
    return resources.speech_verbs.count(fold_case(tokens[t].text)) != 0;
  };
  auto mention_starting_at = [&](int t) -> const EntityMention* {
    auto it = std::lower_bound(
        mentions.begin(), mentions.end(), t,
        [](const EntityMention& m, int v) { return m.first_token < v; });
    if (it != mentions.end() && it->first_token == t) return &*it;
    return nullptr;
  };
  auto mention_ending_at = [&](int t) -> const EntityMention* {
    for (const auto& m : mentions) {
      if (m.last_token == t) return &m;
      if (m.first_token > t) break;
    }
    return nullptr;
  };
  // Mention directly next to the verb at `v`, allowing one punctuation token
  // in between ("said, very softly, Elizabeth" does not match; "said,
  // Elizabeth" does). The mention must lie fully inside [lo, hi].
  auto adjacent_mention = [&](int v, int lo, int hi) -> const EntityMention* {
    auto in_range = [&](const EntityMention& m) {
      return m.first_token >= lo && m.last_token <= hi;
    };
    if (const auto* m = mention_starting_at(v + 1))
      if (in_range(*m)) return m;
    if (v + 2 <= hi && is_punct_token(tokens[v + 1]))
      if (const auto* m = mention_starting_at(v + 2))
        if (in_range(*m)) return m;
    if (v - 1 >= lo)
      if (const auto* m = mention_ending_at(v - 1))
        if (in_range(*m)) return m;
    if (v - 2 >= lo && is_punct_token(tokens[v - 1]))
      if (const auto* m = mention_ending_at(v - 2))
        if (in_range(*m)) return m;
    return nullptr;
  };

  const int token_count = static_cast<int>(tokens.size());

  for (int i = 0; i < static_cast<int>(quotes.size()); ++i) {
    const Quote& q = quotes[i];
    SpeakerAttribution attribution;
    attribution.quote_index = i;
    attribution.method = AttributionMethod::None;

    // Search ranges never cross the neighboring quotes, so mentions spoken
    // inside other quotes are not picked up.
    int after_lo = q.last_token + 1;
    int after_hi = std::min(q.last_token + options.window, token_count - 1);
    if (i + 1 < static_cast<int>(quotes.size()))
      after_hi = std::min(after_hi, quotes[i + 1].first_token - 1);
    int before_hi = q.first_token - 1;
    int before_lo = std::max(q.first_token - options.window, 0);
    if (i > 0) before_lo = std::max(before_lo, quotes[i - 1].last_token + 1);

    // (1) trailing speech verb with adjacent mention
    for (int v = after_lo; v <= after_hi && !attribution.mention; ++v) {
      if (!is_speech_verb(v)) continue;
      if (const auto* m = adjacent_mention(v, after_lo, after_hi)) {
        attribution.mention = *m;
        attribution.method = AttributionMethod::TrailingSaid;
      }
    }
    // (2) leading speech verb with adjacent mention
    for (int v = before_hi; v >= before_lo && !attribution.mention; --v) {
      if (!is_speech_verb(v)) continue;
      if (const auto* m = adjacent_mention(v, before_lo, before_hi)) {
        attribution.mention = *m;
        attribution.method = AttributionMethod::LeadingSaid;
      }
    }
    // (3) nearest mention within the window on either side; ties go to the
    // mention after the quote
    if (!attribution.mention) {
      const EntityMention* best = nullptr;
      int best_distance = options.window + 1;
      bool best_after = false;
      for (const auto& m : mentions) {
        int distance;
        bool after;
        if (m.first_token >= after_lo && m.last_token <= after_hi) {
          distance = m.first_token - q.last_token;
          after = true;
        } else if (m.first_token >= before_lo && m.last_token <= before_hi) {
          distance = q.first_token - m.last_token;
          after = false;
        } else {
          continue;
        }
        if (distance < best_distance ||
            (distance == best_distance && after && !best_after)) {
          best = &m;
          best_distance = distance;
          best_after = after;
        }
      }
      if (best) {
        attribution.mention = *best;
        attribution.method = AttributionMethod::Nearest;
      }
    }
    // (4) two-party alternation inside one conversation
    if (!attribution.mention && i >= 2 &&
        conversation_of[i] == conversation_of[i - 1] &&
        conversation_of[i] == conversation_of[i - 2]) {
      const auto& a = out[i - 2].mention;
      const auto& b = out[i - 1].mention;
      if (a && b && a->surface != b->surface) {
        attribution.mention = *a;
        attribution.method = AttributionMethod::Alternation;
      }
    }

    out.push_back(std::move(attribution));
  }
  return out;
}

}  // namespace fabula
