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

#include "fabula/ner.hpp"

#include <unordered_map>

#include "fabula/errors.hpp"
#include "unicode.hpp"

namespace fabula {
namespace {

// A word usable inside a person-name run: starts uppercase, contains letters,
// is not an all-caps word ("CHAPTER") and is not a closed-class stopword.
bool name_like(const Token& token, const ResourceSet& res,
               std::string* folded_out) {
  auto cps = uni::decode_utf8(token.text);
  if (cps.empty() || !uni::is_upper(cps[0].cp)) return false;
  int letters = 0;
  int upper = 0;
  for (const auto& c : cps) {
    if (uni::is_letter(c.cp)) {
      ++letters;
      if (uni::is_upper(c.cp)) ++upper;
    }
  }
  if (letters == 0) return false;
  if (letters >= 2 && upper == letters) return false;  // all caps
  std::string folded = fold_case(token.text);
  if (res.stopwords.count(folded)) return false;
  if (folded_out) *folded_out = std::move(folded);
  return true;
}

struct CandidateRun {
  int first_token;
  int last_token;       // inclusive
  int honorific_count;  // leading honorific tokens
  std::string folded_surface;
  // A run opening its sentence may start with a capitalized non-name word
  // ("Later Jane joined..."); when the full surface has no evidence the run
  // is retried without its first token.
  bool trim_eligible;
  std::string folded_trimmed;
};

std::string join_surface(const std::vector<Token>& tokens, int first,
                         int last) {
  std::string s;
  for (int t = first; t <= last; ++t) {
    if (t > first) s += ' ';
    s += tokens[t].text;
  }
  return s;
}

// "A" or "A." — an initial (or a roman-numeral chapter number). Initials may
// sit inside a name run but cannot carry one alone.
bool is_initial(const Token& token) {
  auto cps = uni::decode_utf8(token.text);
  if (cps.empty() || cps.size() > 2 || !uni::is_letter(cps[0].cp))
    return false;
  return cps.size() == 1 || cps[1].cp == U'.';
}

}  // namespace

std::vector<EntityMention> recognize_entities(
    const std::vector<Token>& tokens,
    const std::vector<SentenceSpan>& sentences, const ResourceSet& resources,
    const NerOptions& options) {
  // Case profile: a word that shows up lowercase anywhere in the text is an
  // ordinary word, and recurrence alone ("Morning visits... Morning came...")
  // cannot make it a name. Gazetteer and honorific evidence still can.
  std::unordered_set<std::string> lowercase_vocabulary;
  for (const auto& token : tokens) {
    auto cps = uni::decode_utf8(token.text);
    if (!cps.empty() && uni::is_lower(cps[0].cp))
      lowercase_vocabulary.insert(fold_case(token.text));
  }

  // Pass 1: collect candidate runs per sentence and count surfaces.
  std::vector<CandidateRun> runs;
  std::unordered_map<std::string, int> surface_count;

  for (const auto& sentence : sentences) {
    int t = sentence.first_token;
    while (t <= sentence.last_token) {
      std::string folded;
      if (!name_like(tokens[t], resources, &folded)) {
        ++t;
        continue;
      }
      // Leading honorifics, then name tokens. An honorific after the core
      // has begun ends the run and starts the next one.
      int first = t;
      int honorifics = 0;
      while (t <= sentence.last_token &&
             name_like(tokens[t], resources, &folded) &&
             resources.is_honorific(fold_case(tokens[t].text))) {
        ++honorifics;
        ++t;
      }
      int core = 0;
      while (t <= sentence.last_token &&
             name_like(tokens[t], resources, &folded) &&
             !resources.is_honorific(fold_case(tokens[t].text))) {
        ++core;
        ++t;
      }
      int last = t - 1;
      if (core == 0) continue;  // honorifics alone are not a name
      bool all_initials = true;
      for (int c = first + honorifics; c <= last && all_initials; ++c)
        if (!is_initial(tokens[c])) all_initials = false;
      if (all_initials && honorifics == 0) continue;
      int length = last - first + 1;
      if (length > options.max_mention_len) continue;
      CandidateRun run{first, last, honorifics, std::string(), false, ""};
      run.folded_surface = fold_case(join_surface(tokens, first, last));
      run.trim_eligible =
          first == sentence.first_token && length >= 2 && honorifics == 0;
      ++surface_count[run.folded_surface];
      if (run.trim_eligible) {
        run.folded_trimmed = fold_case(join_surface(tokens, first + 1, last));
        ++surface_count[run.folded_trimmed];
      }
      runs.push_back(std::move(run));
    }
  }

  // Pass 2: accept runs by gazetteer, honorific prefix, or recurrence,
  // falling back to the trimmed form of a sentence-opening run.
  std::vector<EntityMention> mentions;
  auto in_gazetteer = [&](int t) {
    return resources.gazetteer.count(fold_case(tokens[t].text)) != 0;
  };
  auto case_profile_ok = [&](int first, int last) {
    for (int t = first; t <= last; ++t)
      if (lowercase_vocabulary.count(fold_case(tokens[t].text))) return false;
    return true;
  };
  for (const auto& run : runs) {
    int accept_from = -1;
    bool gazetteer_hit = false;
    for (int t = run.first_token + run.honorific_count; t <= run.last_token;
         ++t)
      if (in_gazetteer(t)) gazetteer_hit = true;

    const int core_first = run.first_token + run.honorific_count;
    if (run.honorific_count > 0) {
      accept_from = run.first_token;
    } else if (gazetteer_hit &&
               (!run.trim_eligible || in_gazetteer(run.first_token))) {
      accept_from = run.first_token;
    } else if (surface_count[run.folded_surface] >=
                   options.recurrence_threshold &&
               case_profile_ok(core_first, run.last_token)) {
      accept_from = run.first_token;
    } else if (run.trim_eligible &&
               (gazetteer_hit ||
                (surface_count[run.folded_trimmed] >=
                     options.recurrence_threshold &&
                 case_profile_ok(run.first_token + 1, run.last_token)))) {
      accept_from = run.first_token + 1;
    }
    if (accept_from < 0) continue;
    EntityMention m;
    m.first_token = accept_from;
    m.last_token = run.last_token;
    m.surface = join_surface(tokens, accept_from, run.last_token);
    mentions.push_back(std::move(m));
  }
  return mentions;
}

std::vector<EntityMention> decode_bio(const std::vector<BioTag>& tags,
                                      const std::vector<Token>& tokens) {
  if (tags.size() != tokens.size())
    throw LengthMismatch("got " + std::to_string(tags.size()) + " tags for " +
                         std::to_string(tokens.size()) + " tokens");
  std::vector<EntityMention> mentions;
  int open = -1;
  auto close = [&](int last) {
    if (open < 0) return;
    EntityMention m;
    m.first_token = open;
    m.last_token = last;
    std::string s;
    for (int t = open; t <= last; ++t) {
      if (t > open) s += ' ';
      s += tokens[t].text;
    }
    m.surface = std::move(s);
    mentions.push_back(std::move(m));
    open = -1;
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    switch (tags[i]) {
      case BioTag::B_PER:
        close(static_cast<int>(i) - 1);
        open = static_cast<int>(i);
        break;
      case BioTag::I_PER:
        // A dangling I-PER opens a new mention, as if it were B-PER.
        if (open < 0) open = static_cast<int>(i);
        break;
      case BioTag::O:
        close(static_cast<int>(i) - 1);
        break;
    }
  }
  close(static_cast<int>(tags.size()) - 1);
  return mentions;
}

std::vector<BioTag> encode_bio(const std::vector<EntityMention>& mentions,
                               std::size_t token_count) {
  std::vector<BioTag> tags(token_count, BioTag::O);
  for (const auto& m : mentions) {
    tags[m.first_token] = BioTag::B_PER;
    for (int t = m.first_token + 1; t <= m.last_token; ++t)
      tags[t] = BioTag::I_PER;
  }
  return tags;
}

}  // namespace fabula
