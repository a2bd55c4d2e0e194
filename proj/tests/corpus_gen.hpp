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

// Deterministic novel-scale narrative generator. Used by the end-to-end
// checks when no real public-domain novel text is available in the test
// environment: same cast structure, name-variant spellings, dialogue and
// chapter layout as a nineteenth-century novel, with Elizabeth and Darcy
// built to be the two relationship hubs.

#ifndef FABULA_TESTS_CORPUS_GEN_HPP_
#define FABULA_TESTS_CORPUS_GEN_HPP_

#include <random>
#include <string>
#include <vector>

namespace fabula::testsupport {

inline std::string generate_novel(unsigned seed = 1813) {
  std::mt19937 rng(seed);

  struct Member {
    const char* name;                  // index into the cast
    std::vector<const char*> variants; // surface spellings used in text
  };
  // Variant pools are chosen so that each pool unifies to one character.
  const std::vector<Member> cast = {
      {"elizabeth", {"Elizabeth", "Elizabeth Bennet", "Lizzy"}},     // 0
      {"darcy", {"Darcy", "Mr. Darcy"}},                             // 1
      {"jane", {"Jane", "Jane Bennet"}},                             // 2
      {"bingley", {"Bingley", "Mr. Bingley"}},                       // 3
      {"mrs_bennet", {"Mrs. Bennet"}},                               // 4
      {"mr_bennet", {"Mr. Bennet"}},                                 // 5
      {"lydia", {"Lydia"}},                                          // 6
      {"kitty", {"Kitty"}},                                          // 7
      {"mary", {"Mary"}},                                            // 8
      {"wickham", {"Wickham", "Mr. Wickham"}},                       // 9
      {"collins", {"Collins", "Mr. Collins"}},                       // 10
      {"charlotte", {"Charlotte", "Charlotte Lucas"}},               // 11
      {"lady_catherine", {"Lady Catherine"}},                        // 12
      {"caroline", {"Caroline"}},                                    // 13
      {"georgiana", {"Georgiana"}},                                  // 14
      {"mrs_gardiner", {"Mrs. Gardiner"}},                           // 15
      {"forster", {"Colonel Forster"}},                              // 16 rare
  };

  // Scene schedule: (a, b, scene count). Elizabeth shares scenes with every
  // surviving character, Darcy with most; minor pairs stay inside their
  // cliques so the two hubs end with the highest degrees.
  struct Scenes {
    int a, b, count;
  };
  std::vector<Scenes> schedule;
  for (int x = 1; x <= 15; ++x) schedule.push_back({0, x, 26});   // Elizabeth
  for (int x : {2, 3, 4, 5, 6, 7, 9, 10, 12, 13, 14})             // Darcy
    schedule.push_back({1, x, 19});
  schedule.insert(schedule.end(), {
      {2, 3, 36},   // Jane - Bingley
      {2, 4, 18},   {2, 15, 15}, {4, 5, 30},  {4, 6, 15}, {6, 7, 22},
      {6, 9, 26},   {7, 8, 15},  {10, 11, 26}, {10, 12, 18}, {3, 13, 18},
      {12, 14, 12}, {15, 2, 10},
      {16, 6, 2},   // Colonel Forster stays under the appearance threshold
  });

  const char* narration[] = {
      "%A walked with %B through the shrubbery towards the village",
      "%A found %B reading by the window of the drawing room",
      "In the evening %A played cards against %B and lost twice",
      "%A wrote a long letter while %B watched the rain",
      "After breakfast %A met %B upon the gravel path",
      "%A danced the second set with %B at the assembly",
      "Nothing could persuade %A to forgive %B that morning",
      "%A and %B argued about the ball until the candles burned low",
      "When the carriage arrived %A handed %B the folded note",
      "%A sat beside %B at dinner and spoke of the militia",
  };
  const char* utterances[] = {
      "You must allow me to tell you how ardently I admire you",
      "I have not the pleasure of understanding you",
      "We dine with four and twenty families",
      "Do not make yourself uneasy",
      "It is a truth universally acknowledged",
      "You are too generous to trifle with me",
      "I am perfectly convinced of it",
      "Nothing is more deceitful than the appearance of humility",
      "My courage always rises with every attempt to intimidate me",
      "There is a stubbornness about me that never can bear to be "
      "frightened",
  };
  const char* verbs[] = {"said", "replied", "cried", "observed", "answered"};
  const char* fillers[] = {
      "The weather continued fine for the remainder of the week and the "
      "lanes dried quickly",
      "A thin rain settled over the park while the household kept to its "
      "rooms and its letters",
      "The militia exercised on the common and the village talked of "
      "nothing else for days",
      "Morning visits followed one another with tiresome regularity and "
      "each morning passed much like the last",
      "The post brought nothing but bills and one crossed letter from town",
  };

  std::uniform_int_distribution<int> pick_narration(0, 9);
  std::uniform_int_distribution<int> pick_utterance(0, 9);
  std::uniform_int_distribution<int> pick_verb(0, 4);
  std::uniform_int_distribution<int> pick_filler(0, 4);
  std::uniform_int_distribution<int> scene_sentences(2, 4);
  std::uniform_int_distribution<int> dialogue_rounds(1, 2);

  // The plain spelling (variant 0) dominates, as it would in prose; it also
  // pins the canonical name of each unified character.
  auto variant = [&](int member) {
    const auto& pool = cast[member].variants;
    std::uniform_int_distribution<int> pick(
        0, static_cast<int>(pool.size()) + 1);
    int index = pick(rng);
    if (index >= static_cast<int>(pool.size())) index = 0;
    return std::string(pool[index]);
  };
  auto fill = [](std::string text, const std::string& a,
                 const std::string& b) {
    auto replace = [&](const std::string& tag, const std::string& value) {
      auto at = text.find(tag);
      if (at != std::string::npos) text.replace(at, tag.size(), value);
    };
    replace("%A", a);
    replace("%B", b);
    return text;
  };

  // Expand the schedule into a scene list and shuffle it so chapters mix
  // pairs; a fixed seed keeps the whole corpus reproducible.
  std::vector<std::pair<int, int>> scenes;
  for (const auto& s : schedule)
    for (int k = 0; k < s.count; ++k) scenes.emplace_back(s.a, s.b);
  std::shuffle(scenes.begin(), scenes.end(), rng);

  std::string out;
  out.reserve(1 << 20);
  int chapter = 0;
  int scenes_in_chapter = 0;
  static const char* const kRoman[] = {"I", "II", "III", "IV", "V", "VI",
                                       "VII", "VIII", "IX", "X"};
  for (std::size_t index = 0; index < scenes.size(); ++index) {
    if (scenes_in_chapter == 0) {
      ++chapter;
      out += "CHAPTER " + std::string(kRoman[chapter % 10]) + ".\n\n";
    }
    auto [a, b] = scenes[index];
    int rounds = scene_sentences(rng);
    for (int s = 0; s < rounds; ++s) {
      out += fill(narration[pick_narration(rng)], variant(a), variant(b));
      out += ". ";
    }
    int talk = dialogue_rounds(rng);
    for (int d = 0; d < talk; ++d) {
      out += "\"";
      out += utterances[pick_utterance(rng)];
      out += ",\" ";
      out += std::string(verbs[pick_verb(rng)]) + " " + variant(a) + ". ";
      out += "\"";
      out += utterances[pick_utterance(rng)];
      out += ",\" ";
      out += std::string(verbs[pick_verb(rng)]) + " " + variant(b) + ".\n\n";
    }
    // Mention-free filler keeps scenes more than one co-occurrence window
    // apart and more than one conversation gap apart, so neither extractor
    // links characters across scenes.
    for (int f = 0; f < 6; ++f) {
      out += fillers[pick_filler(rng)];
      out += ". ";
    }
    out += "\n\n";
    if (++scenes_in_chapter == 12) scenes_in_chapter = 0;
  }
  return out;
}

}  // namespace fabula::testsupport

#endif  // FABULA_TESTS_CORPUS_GEN_HPP_
