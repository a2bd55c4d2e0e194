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

#include "fabula/resources.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fabula/errors.hpp"
#include "unicode.hpp"

namespace fabula {
namespace {

// Tokens that keep a trailing period and never end a sentence.
const char* const kAbbreviations[] = {
    "mr.",   "mrs.",  "ms.",   "dr.",    "st.",   "prof.",  "rev.",  "col.",
    "gen.",  "capt.", "lt.",   "sgt.",   "maj.",  "hon.",   "fr.",   "sr.",
    "jr.",   "vs.",   "etc.",  "e.g.",   "i.e.",  "cf.",    "al.",   "co.",
    "inc.",  "ltd.",  "no.",   "vol.",   "pp.",   "esq.",   "messrs.",
    "mme.",  "mlle.", "m.",    "mons.",  "viz.",  "approx.",
};

// Titles that may precede a personal name. Checked case-folded.
const char* const kHonorifics[] = {
    "mr.",      "mr",     "mrs.",     "mrs",      "ms.",      "ms",
    "miss",     "dr.",    "dr",       "sir",      "lady",     "lord",
    "madam",    "madame", "dame",     "master",   "mister",   "monsieur",
    "mme.",     "mme",    "mlle.",    "mlle",     "m.",       "captain",
    "capt.",    "colonel", "col.",    "professor", "prof.",   "rev.",
    "reverend", "uncle",  "aunt",     "king",     "queen",    "prince",
    "princess", "duke",   "duchess",  "count",    "countess", "baron",
    "baroness", "earl",   "general",  "gen.",     "major",    "maj.",
    "admiral",  "sergeant", "lieutenant", "lt.",  "messrs.",  "don",
    "fr.",      "father", "mother",   "brother",  "sister",
};

// Closed-class words that never open or continue a person-name run, plus
// document-structure words common in narrative sources.
const char* const kStopwords[] = {
    // determiners, conjunctions, prepositions
    "the", "a", "an", "and", "but", "or", "nor", "for", "yet", "so", "if",
    "then", "than", "that", "this", "these", "those", "as", "at", "by", "in",
    "of", "on", "to", "up", "with", "from", "into", "upon", "about", "above",
    "after", "against", "among", "around", "before", "behind", "below",
    "beneath", "beside", "besides", "between", "beyond", "during", "except",
    "inside", "near", "off", "out", "outside", "over", "through", "till",
    "toward", "towards", "under", "until", "via", "within", "without",
    "because", "although", "though", "while", "whilst", "since", "unless",
    "whether", "once", "both", "either", "neither", "each", "every", "all",
    "any", "some", "such", "own", "same", "other", "another", "much", "many",
    "more", "most", "few", "little", "less", "least", "several", "enough",
    // pronouns
    "i", "me", "my", "mine", "myself", "we", "us", "our", "ours", "ourselves",
    "you", "your", "yours", "yourself", "yourselves", "he", "him", "his",
    "himself", "she", "her", "hers", "herself", "it", "its", "itself", "they",
    "them", "their", "theirs", "themselves", "who", "whom", "whose", "which",
    "what", "whatever", "whoever", "one", "ones", "nobody", "nothing",
    "anybody", "anything", "everybody", "everything", "somebody", "something",
    "someone", "anyone", "everyone", "none",
    // auxiliaries and common verbs of high frequency
    "is", "are", "was", "were", "be", "been", "being", "am", "do", "does",
    "did", "done", "have", "has", "had", "having", "will", "would", "shall",
    "should", "may", "might", "must", "can", "could", "cannot", "ought",
    "need", "dare", "let", "lets",
    // adverbs, interjections, misc
    "not", "no", "yes", "oh", "ah", "alas", "well", "now", "here", "there",
    "when", "where", "why", "how", "very", "too", "quite", "rather", "just",
    "only", "even", "still", "also", "again", "ever", "never", "always",
    "often", "soon", "indeed", "perhaps", "however", "therefore", "thus",
    "hence", "moreover", "nevertheless", "meanwhile", "instead", "almost",
    "away", "back", "down", "far", "first", "last", "next", "then", "today",
    "tomorrow", "yesterday", "later", "presently", "suddenly", "eventually",
    "finally", "afterwards", "afterward", "immediately", "shortly", "lately",
    "thereafter", "thereupon", "elsewhere", "everywhere", "nowhere",
    "somewhere", "anywhere", "two", "three", "four", "five", "six", "seven",
    "eight", "nine", "ten", "dear", "pray", "come", "go", "good", "great",
    // document structure
    "chapter", "volume", "book", "part", "section", "preface", "epilogue",
    "prologue", "contents", "index", "appendix", "illustration", "copyright",
    "page", "end", "finis", "note", "notes", "footnote", "title",
};

const char* const kSpeechVerbs[] = {
    "said",      "says",      "say",       "saying",    "replied",
    "replies",   "reply",     "asked",     "asks",      "ask",
    "cried",     "cries",     "cry",       "answered",  "answers",
    "added",     "adds",      "continued", "continues", "observed",
    "observes",  "exclaimed", "exclaims",  "whispered",  "whispers",
    "muttered",  "mutters",   "shouted",   "shouts",    "called",
    "calls",     "murmured",  "murmurs",   "remarked",  "remarks",
    "returned",  "returns",   "repeated",  "repeats",   "interrupted",
    "interrupts", "began",    "begins",    "inquired",  "inquires",
    "declared",  "declares",  "protested", "protests",  "urged",
    "urges",     "demanded",  "demands",   "agreed",    "agrees",
    "admitted",  "admits",    "insisted",  "insists",   "laughed",
    "laughs",    "sighed",    "sighs",     "wondered",  "wonders",
    "announced", "announces", "concluded", "concludes", "stammered",
    "retorted",  "rejoined",  "resumed",   "pleaded",   "begged",
};

struct GenderedTitle {
  const char* title;  // normalized: folded, no trailing period
  char gender;
};

const GenderedTitle kGenderedTitles[] = {
    {"mr", 'm'},       {"sir", 'm'},      {"lord", 'm'},    {"master", 'm'},
    {"mister", 'm'},   {"monsieur", 'm'}, {"m", 'm'},       {"king", 'm'},
    {"prince", 'm'},   {"duke", 'm'},     {"count", 'm'},   {"baron", 'm'},
    {"earl", 'm'},     {"uncle", 'm'},    {"father", 'm'},  {"brother", 'm'},
    {"don", 'm'},      {"mrs", 'f'},      {"ms", 'f'},      {"miss", 'f'},
    {"lady", 'f'},     {"madam", 'f'},    {"madame", 'f'},  {"dame", 'f'},
    {"mme", 'f'},      {"mlle", 'f'},     {"queen", 'f'},   {"princess", 'f'},
    {"duchess", 'f'},  {"countess", 'f'}, {"baroness", 'f'}, {"aunt", 'f'},
    {"mother", 'f'},   {"sister", 'f'},
};

struct Hypocorism {
  const char* nick;
  const char* fulls;  // comma-separated
};

const Hypocorism kHypocorisms[] = {
    {"liz", "elizabeth"},      {"lizzy", "elizabeth"},
    {"lizzie", "elizabeth"},   {"eliza", "elizabeth"},
    {"beth", "elizabeth"},     {"betsy", "elizabeth"},
    {"bess", "elizabeth"},     {"bessie", "elizabeth"},
    {"kitty", "katherine,catherine"},
    {"kate", "katherine,catherine"},
    {"katie", "katherine,catherine"},
    {"cathy", "catherine,katherine"},
    {"bill", "william"},       {"billy", "william"},
    {"will", "william"},       {"willie", "william"},
    {"dick", "richard"},       {"rick", "richard"},
    {"bob", "robert"},         {"bobby", "robert"},
    {"rob", "robert"},         {"tom", "thomas"},
    {"tommy", "thomas"},       {"harry", "henry,harold"},
    {"hal", "henry,harold"},   {"ned", "edward,edmund"},
    {"ted", "edward,theodore"}, {"ed", "edward,edmund,edwin"},
    {"jim", "james"},          {"jimmy", "james"},
    {"jack", "john"},          {"johnny", "john"},
    {"peggy", "margaret"},     {"maggie", "margaret"},
    {"meg", "margaret"},       {"molly", "mary"},
    {"polly", "mary"},         {"sally", "sarah"},
    {"nan", "anne,ann,nancy"}, {"nancy", "anne,ann"},
    {"annie", "anne,ann,anna"}, {"fanny", "frances"},
    {"jenny", "jane,jennifer"}, {"sue", "susan"},
    {"susie", "susan"},        {"davy", "david"},
    {"dave", "david"},         {"sam", "samuel"},
    {"sammy", "samuel"},       {"al", "albert,alfred"},
    {"bert", "albert,herbert"}, {"fred", "frederick,alfred"},
    {"freddy", "frederick"},   {"frank", "francis"},
    {"gus", "augustus"},       {"charlie", "charles"},
    {"charley", "charles"},    {"becky", "rebecca"},
    {"georgie", "george,georgiana"},
    {"caro", "caroline"},      {"lou", "louisa,louise"},
    {"louie", "louis"},        {"mike", "michael"},
    {"nick", "nicholas"},      {"tony", "anthony"},
    {"steve", "stephen,steven"}, {"joe", "joseph"},
    {"josie", "josephine"},    {"phil", "philip"},
    {"pat", "patrick,patricia"}, {"dan", "daniel"},
    {"danny", "daniel"},       {"abby", "abigail"},
    {"gerry", "gerald"},       {"larry", "lawrence"},
    {"lottie", "charlotte"},   {"nelly", "eleanor,helen"},
    {"nell", "eleanor,helen"}, {"effie", "euphemia"},
    {"emmy", "emma,emily"},    {"tilly", "matilda"},
    {"winnie", "winifred"},    {"vicky", "victoria"},
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Lines of a resource file, stripped, comments and blanks removed, paired
// with their 1-based line numbers.
std::vector<std::pair<int, std::string>> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingResource("cannot read resource file: " + path);
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') continue;
    out.emplace_back(no, s);
  }
  return out;
}

}  // namespace

std::string fold_case(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const auto& cp : uni::decode_utf8(text))
    out += uni::encode_utf8(uni::to_lower(cp.cp));
  return out;
}

std::string normalize_title(std::string_view title) {
  std::string folded = fold_case(title);
  if (!folded.empty() && folded.back() == '.') folded.pop_back();
  return folded;
}

bool ResourceSet::is_honorific(const std::string& folded_token) const {
  return honorifics.count(folded_token) != 0;
}

char ResourceSet::title_gender(const std::string& folded_title) const {
  auto it = gendered_titles.find(normalize_title(folded_title));
  return it == gendered_titles.end() ? '\0' : it->second;
}

ResourceSet ResourceSet::builtin_eng() {
  ResourceSet r;
  r.language = "eng";
  for (const char* s : kAbbreviations) r.abbreviations.insert(s);
  for (const char* s : kHonorifics) r.honorifics.insert(s);
  for (const char* s : kStopwords) r.stopwords.insert(s);
  for (const char* s : kSpeechVerbs) r.speech_verbs.insert(s);
  for (const auto& t : kGenderedTitles) r.gendered_titles[t.title] = t.gender;
  for (const auto& h : kHypocorisms) r.hypocorisms[h.nick] = split(h.fulls, ',');
  return r;
}

ResourceSet ResourceSet::for_language(const std::string& language,
                                      const std::string& resource_dir) {
  ResourceSet r;
  if (language == "eng")
    r = builtin_eng();
  else
    r.language = language;

  if (!resource_dir.empty()) {
    static const char* const kTables[] = {
        "abbreviations", "honorifics",      "stopwords",  "speech_verbs",
        "gazetteer",     "gendered_titles", "hypocorisms"};
    for (const char* table : kTables) {
      std::string ext =
          (std::string(table) == "gendered_titles" ||
           std::string(table) == "hypocorisms")
              ? ".tsv"
              : ".txt";
      std::filesystem::path p = std::filesystem::path(resource_dir) /
                                (std::string(table) + "_" + language + ext);
      if (std::filesystem::exists(p)) r.load_table(table, p.string());
    }
  }
  return r;
}

void ResourceSet::load_table(const std::string& table,
                             const std::string& path) {
  auto lines = read_lines(path);
  if (table == "abbreviations" || table == "honorifics" ||
      table == "stopwords" || table == "speech_verbs" ||
      table == "gazetteer") {
    std::unordered_set<std::string> set;
    for (const auto& [no, line] : lines) set.insert(fold_case(line));
    if (table == "abbreviations")
      abbreviations = std::move(set);
    else if (table == "honorifics")
      honorifics = std::move(set);
    else if (table == "stopwords")
      stopwords = std::move(set);
    else if (table == "speech_verbs")
      speech_verbs = std::move(set);
    else
      gazetteer = std::move(set);
    return;
  }
  if (table == "gendered_titles") {
    std::unordered_map<std::string, char> map;
    for (const auto& [no, line] : lines) {
      auto fields = split(line, '\t');
      if (fields.size() != 2 || fields[1].size() != 1 ||
          (fields[1][0] != 'm' && fields[1][0] != 'f'))
        throw MalformedArtifact("bad gendered-title record in " + path, no);
      map[normalize_title(strip(fields[0]))] = fields[1][0];
    }
    gendered_titles = std::move(map);
    return;
  }
  if (table == "hypocorisms") {
    std::unordered_map<std::string, std::vector<std::string>> map;
    for (const auto& [no, line] : lines) {
      auto fields = split(line, '\t');
      if (fields.size() != 2 || strip(fields[0]).empty() ||
          strip(fields[1]).empty())
        throw MalformedArtifact("bad hypocorism record in " + path, no);
      std::vector<std::string> fulls;
      for (const auto& f : split(fields[1], ','))
        if (!strip(f).empty()) fulls.push_back(fold_case(strip(f)));
      map[fold_case(strip(fields[0]))] = std::move(fulls);
    }
    hypocorisms = std::move(map);
    return;
  }
  throw MissingResource("unknown resource table: " + table);
}

}  // namespace fabula
