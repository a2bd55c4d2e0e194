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

#include "fabula/unify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "fabula/errors.hpp"
#include "fabula/names.hpp"

namespace fabula {
namespace {

// One distinct case-folded surface form.
struct Variant {
  std::string key;  // folded surface
  std::map<std::string, int> spellings;  // raw spelling -> count
  std::vector<EntityMention> mentions;
  HumanName name;
  char gender = '\0';
  std::vector<std::string> folded_tokens;  // of the folded surface
};

std::vector<std::string> split_folded(const std::string& s) {
  std::vector<std::string> words;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) words.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) words.push_back(std::move(cur));
  return words;
}

// Most frequent spelling of a variant; ties break lexicographically.
const std::string& representative(const Variant& v) {
  const std::string* best = nullptr;
  int best_count = -1;
  for (const auto& [spelling, count] : v.spellings) {
    if (count > best_count) {
      best = &spelling;
      best_count = count;
    }
  }
  return *best;
}

std::vector<Variant> collect_variants(std::vector<EntityMention> mentions,
                                      const ResourceSet& resources) {
  // Sorting first makes the result independent of the input order.
  std::sort(mentions.begin(), mentions.end());
  std::map<std::string, Variant> by_key;
  for (auto& m : mentions) {
    std::string key = fold_case(m.surface);
    Variant& v = by_key[key];
    if (v.key.empty()) v.key = key;
    ++v.spellings[m.surface];
    v.mentions.push_back(std::move(m));
  }
  std::vector<Variant> variants;
  variants.reserve(by_key.size());
  for (auto& [key, v] : by_key) {
    v.name = parse_human_name(representative(v), resources);
    v.gender = name_gender(v.name, resources);
    v.folded_tokens = split_folded(key);
    variants.push_back(std::move(v));
  }
  return variants;  // sorted by key
}

// Assembles characters from groups of variant indices. Ids follow the first
// mention position in the text; canonical is the longest spelling among the
// most frequent variants, ties lexicographic.
std::vector<Character> assemble(const std::vector<Variant>& variants,
                                const std::vector<std::vector<int>>& groups,
                                int min_appearance) {
  struct Draft {
    Character character;
    int first_position;
  };
  std::vector<Draft> drafts;
  for (const auto& group : groups) {
    int mention_count = 0;
    for (int vi : group) mention_count += variants[vi].mentions.size();
    if (mention_count < min_appearance) continue;

    Draft draft;
    std::set<std::string> names;
    int best_frequency = -1;
    std::vector<const Variant*> most_frequent;
    for (int vi : group) {
      const Variant& v = variants[vi];
      for (const auto& [spelling, count] : v.spellings) names.insert(spelling);
      for (const auto& m : v.mentions)
        draft.character.mentions.push_back(m);
      int freq = static_cast<int>(v.mentions.size());
      if (freq > best_frequency) {
        best_frequency = freq;
        most_frequent.assign(1, &v);
      } else if (freq == best_frequency) {
        most_frequent.push_back(&v);
      }
    }
    std::string canonical;
    for (const Variant* v : most_frequent) {
      const std::string& spelling = representative(*v);
      if (canonical.empty() || spelling.size() > canonical.size() ||
          (spelling.size() == canonical.size() && spelling < canonical))
        canonical = spelling;
    }
    draft.character.canonical = std::move(canonical);
    draft.character.names.assign(names.begin(), names.end());
    std::sort(draft.character.mentions.begin(),
              draft.character.mentions.end());
    draft.first_position = draft.character.mentions.front().first_token;
    drafts.push_back(std::move(draft));
  }

  std::sort(drafts.begin(), drafts.end(), [](const Draft& a, const Draft& b) {
    if (a.first_position != b.first_position)
      return a.first_position < b.first_position;
    return a.character.canonical < b.character.canonical;
  });
  std::vector<Character> characters;
  characters.reserve(drafts.size());
  for (auto& d : drafts) {
    d.character.id = static_cast<int>(characters.size());
    characters.push_back(std::move(d.character));
  }
  return characters;
}

// hypo*(first): the folded first name plus every full form it may stand for.
std::set<std::string> hypocorism_closure(const std::string& folded_first,
                                         const ResourceSet& resources) {
  std::set<std::string> closure{folded_first};
  auto it = resources.hypocorisms.find(folded_first);
  if (it != resources.hypocorisms.end())
    closure.insert(it->second.begin(), it->second.end());
  return closure;
}

bool tokens_subsequence(const std::vector<std::string>& shorter,
                        const std::vector<std::string>& longer) {
  std::size_t i = 0;
  for (const auto& tok : longer) {
    if (i < shorter.size() && shorter[i] == tok) ++i;
  }
  return i == shorter.size();
}

}  // namespace

std::vector<Character> unify_naive(const std::vector<EntityMention>& mentions,
                                   int min_appearance) {
  ResourceSet empty;  // surface grouping needs no tables
  auto variants = collect_variants(mentions, empty);
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < static_cast<int>(variants.size()); ++i)
    groups.push_back({i});
  return assemble(variants, groups, min_appearance);
}

std::vector<Character> unify_graph_rules(
    const std::vector<EntityMention>& mentions, const ResourceSet& resources,
    int min_appearance, const std::vector<CorefChain>* coref_chains) {
  if (resources.hypocorisms.empty() && resources.language != "eng")
    throw MissingResource("no hypocorism table for language '" +
                          resources.language + "'");

  auto variants = collect_variants(mentions, resources);
  const int n = static_cast<int>(variants.size());

  // Folded first names and their hypocorism closures, precomputed.
  std::vector<std::set<std::string>> first_closure(n);
  std::vector<std::string> folded_first(n), folded_last(n);
  for (int i = 0; i < n; ++i) {
    folded_first[i] = fold_case(variants[i].name.first);
    folded_last[i] = fold_case(variants[i].name.last);
    if (!folded_first[i].empty())
      first_closure[i] = hypocorism_closure(folded_first[i], resources);
  }

  auto closures_intersect = [&](int a, int b) {
    for (const auto& s : first_closure[a])
      if (first_closure[b].count(s)) return true;
    return false;
  };

  // CANNOT-LINK: C1 gender conflict, C2 different last names, C3 first names
  // that differ non-hypocoristically.
  auto cannot_link = [&](int a, int b) {
    const Variant& va = variants[a];
    const Variant& vb = variants[b];
    if (!va.name.parseable() || !vb.name.parseable()) return false;
    if (va.gender && vb.gender && va.gender != vb.gender) return true;
    if (!folded_last[a].empty() && !folded_last[b].empty() &&
        folded_last[a] != folded_last[b])
      return true;
    if (!folded_first[a].empty() && !folded_first[b].empty() &&
        !closures_intersect(a, b))
      return true;
    return false;
  };

  // LINK: L1 first-only match, L2 last-only/title+last match with compatible
  // titles, L3 hypocorism, L4 token subsequence.
  auto link = [&](int a, int b) {
    const Variant& va = variants[a];
    const Variant& vb = variants[b];
    if (!va.name.parseable() || !vb.name.parseable()) return false;

    auto one_way = [&](int x, int y) {
      const Variant& vx = variants[x];
      const Variant& vy = variants[y];
      // L1: "Elizabeth" <-> anything whose first name is Elizabeth.
      if (!folded_first[x].empty() && folded_last[x].empty() &&
          vx.name.title.empty() && folded_first[x] == folded_first[y])
        return true;
      // L2: "Bennet" / "Miss Bennet" <-> anything with last name Bennet,
      // titles permitting (gender conflicts are C1's business and already
      // exclude the pair).
      if (!folded_last[x].empty() && folded_first[x].empty() &&
          folded_last[x] == folded_last[y])
        return true;
      // L3: "Liz" <-> anything whose first name Liz abbreviates.
      if (!folded_first[x].empty() && !folded_first[y].empty() &&
          folded_first[x] != folded_first[y]) {
        auto it = resources.hypocorisms.find(folded_first[x]);
        if (it != resources.hypocorisms.end())
          for (const auto& full : it->second)
            if (full == folded_first[y]) return true;
      }
      // L4: token subsequence ("Mr. Darcy" within "Mr. Fitzwilliam Darcy").
      if (vx.folded_tokens.size() < vy.folded_tokens.size() &&
          tokens_subsequence(vx.folded_tokens, vy.folded_tokens))
        return true;
      return false;
    };
    return one_way(a, b) || one_way(b, a);
  };

  // Build the constrained link graph.
  std::vector<std::pair<int, int>> cannot_pairs;
  std::vector<std::set<int>> adjacency(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (cannot_link(a, b)) {
        cannot_pairs.emplace_back(a, b);
        continue;  // a CANNOT-LINK always beats a LINK
      }
      if (link(a, b)) {
        adjacency[a].insert(b);
        adjacency[b].insert(a);
      }
    }
  }

  // Coreference chains add link evidence between the variants of the spans
  // they contain, still subject to CANNOT-LINK.
  if (coref_chains) {
    std::map<std::pair<int, int>, int> variant_of_span;
    for (int vi = 0; vi < n; ++vi)
      for (const auto& m : variants[vi].mentions)
        variant_of_span[{m.first_token, m.last_token}] = vi;
    std::set<std::pair<int, int>> forbidden(cannot_pairs.begin(),
                                            cannot_pairs.end());
    for (const auto& chain : *coref_chains) {
      std::set<int> chain_variants;
      for (const auto& span : chain.mentions) {
        auto it = variant_of_span.find({span.first_token, span.last_token});
        if (it != variant_of_span.end()) chain_variants.insert(it->second);
      }
      for (int a : chain_variants) {
        for (int b : chain_variants) {
          if (a >= b) continue;
          if (forbidden.count({a, b})) continue;
          adjacency[a].insert(b);
          adjacency[b].insert(a);
        }
      }
    }
  }

  // Resolve components. A variant whose links would join two mutually
  // incompatible groups ("Miss Bennet" between two sisters) is ambiguous and
  // is detached to a singleton. Candidates are, in order: vertices whose
  // removal separates a violated pair, vertices directly linked to both
  // members of a constrained pair, and finally the pair endpoints themselves.
  // Among candidates the least specific variants (fewest name components) are
  // detached first, all of them at once, so the outcome does not depend on
  // any iteration order.
  std::vector<bool> detached(n, false);
  std::set<std::pair<int, int>> cannot_set(cannot_pairs.begin(),
                                           cannot_pairs.end());
  auto is_cannot = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return cannot_set.count({a, b}) != 0;
  };
  auto specificity = [&](int w) {
    return (variants[w].name.first.empty() ? 0 : 1) +
           (variants[w].name.last.empty() ? 0 : 1);
  };

  auto component_of = [&](std::vector<int>& comp) {
    comp.assign(n, -1);
    int next = 0;
    for (int start = 0; start < n; ++start) {
      if (comp[start] >= 0 || detached[start]) continue;
      std::queue<int> frontier;
      frontier.push(start);
      comp[start] = next;
      while (!frontier.empty()) {
        int u = frontier.front();
        frontier.pop();
        for (int v : adjacency[u]) {
          if (detached[v] || comp[v] >= 0) continue;
          comp[v] = next;
          frontier.push(v);
        }
      }
      ++next;
    }
  };

  // True when removing w disconnects u from v among non-detached vertices.
  auto separates = [&](int w, int u, int v) {
    std::vector<bool> seen(n, false);
    seen[w] = true;
    std::queue<int> frontier;
    frontier.push(u);
    seen[u] = true;
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop();
      for (int y : adjacency[x]) {
        if (detached[y] || seen[y]) continue;
        if (y == v) return false;
        seen[y] = true;
        frontier.push(y);
      }
    }
    return true;
  };

  std::vector<int> comp;
  while (true) {
    component_of(comp);
    std::vector<std::pair<int, int>> violated;
    for (const auto& [a, b] : cannot_pairs)
      if (!detached[a] && !detached[b] && comp[a] == comp[b] && comp[a] >= 0)
        violated.emplace_back(a, b);
    if (violated.empty()) break;

    std::set<int> violating_comps;
    for (const auto& [a, b] : violated) violating_comps.insert(comp[a]);

    // Candidate pool: vertices whose removal separates a violated pair, plus
    // vertices directly linked to both members of a constrained pair.
    std::set<int> candidates;
    for (const auto& [a, b] : violated)
      for (int w = 0; w < n; ++w) {
        if (detached[w] || w == a || w == b || comp[w] != comp[a]) continue;
        if (separates(w, a, b)) candidates.insert(w);
      }
    for (int w = 0; w < n; ++w) {
      if (detached[w] || !violating_comps.count(comp[w])) continue;
      bool bridges = false;
      for (int u : adjacency[w]) {
        for (int v : adjacency[w]) {
          if (u < v && is_cannot(u, v)) bridges = true;
        }
        if (bridges) break;
      }
      if (bridges) candidates.insert(w);
    }
    if (candidates.empty())
      for (const auto& [a, b] : violated) {
        candidates.insert(a);
        candidates.insert(b);
      }

    int min_spec = 3;
    for (int w : candidates) min_spec = std::min(min_spec, specificity(w));
    for (int w : candidates) {
      if (specificity(w) != min_spec) continue;
      detached[w] = true;
      for (int y : adjacency[w]) adjacency[y].erase(w);
      adjacency[w].clear();
    }
  }

  std::vector<std::vector<int>> groups;
  std::map<int, std::vector<int>> by_component;
  for (int i = 0; i < n; ++i) {
    if (detached[i])
      groups.push_back({i});
    else
      by_component[comp[i]].push_back(i);
  }
  for (auto& [c, members] : by_component) groups.push_back(std::move(members));

  return assemble(variants, groups, min_appearance);
}

}  // namespace fabula
