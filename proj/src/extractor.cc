// Copyright 2026 The clause-eval Authors.
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

#include "clause_eval/extractor.h"

#include <fstream>
#include <sstream>

namespace clause_eval {

namespace {

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    fields.push_back(Trim(line.substr(start, tab - start)));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool IsPunctuation(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case '"': case '(': case ')': case '[': case ']': case '{': case '}':
    case '`':
      return true;
    default:
      return false;
  }
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Strips edge apostrophes, ASCII or UTF-8 curly.
std::string_view StripQuotes(std::string_view token) {
  static constexpr std::string_view kCurly[] = {"\xE2\x80\x98", "\xE2\x80\x99"};
  bool changed = true;
  while (changed && !token.empty()) {
    changed = false;
    if (token.front() == '\'') { token.remove_prefix(1); changed = true; }
    if (!token.empty() && token.back() == '\'') { token.remove_suffix(1); changed = true; }
    for (std::string_view q : kCurly) {
      if (token.starts_with(q)) { token.remove_prefix(q.size()); changed = true; }
      if (token.ends_with(q)) { token.remove_suffix(q.size()); changed = true; }
    }
  }
  return token;
}

// Undoubled stem ("sitt" -> "sit") if the stem ends in a doubled consonant.
std::optional<std::string> Undouble(const std::string &stem) {
  if (stem.size() < 3) return std::nullopt;
  char last = stem.back();
  if (last != stem[stem.size() - 2]) return std::nullopt;
  if (last == 'a' || last == 'e' || last == 'i' || last == 'o' || last == 'u' ||
      last == 's' || last == 'l') {
    return std::nullopt;
  }
  return stem.substr(0, stem.size() - 1);
}

std::string StripVerbSuffix(std::string_view token, size_t suffix_length,
                            const ExtractionLexicon &lexicon) {
  std::string base(token.substr(0, token.size() - suffix_length));
  if (lexicon.IsKnownWord(base)) return base;
  if (lexicon.IsKnownWord(base + "e")) return base + "e";
  if (auto undoubled = Undouble(base); undoubled && lexicon.IsKnownWord(*undoubled)) {
    return *undoubled;
  }
  if (base.size() < 3) return std::string(token);
  return base;
}

bool IsGerund(std::string_view token, const ExtractionLexicon &lexicon) {
  return token.size() >= 5 && EndsWith(token, "ing") &&
         !lexicon.nouns.contains(token) && !lexicon.IsStopWord(token) &&
         !lexicon.IsAdjective(token);
}

}  // namespace

bool ExtractionLexicon::IsKnownWord(std::string_view word) const {
  if (verbs.contains(word) || nouns.contains(word)) return true;
  for (const auto &[surface, lemma] : verbs) {
    if (lemma == word) return true;
  }
  for (const auto &[surface, lemma] : nouns) {
    if (lemma == word) return true;
  }
  return false;
}

void ExtractionLexicon::Check() const {
  auto check = [](std::string_view section, std::string_view word) {
    if (!IsNormalizedLemma(word)) {
      throw Error("malformed " + std::string(section) + " entry '" +
                  std::string(word) + "'");
    }
  };
  for (const auto &[surface, lemma] : verbs) {
    check("verb", surface);
    check("verb", lemma);
    if (auxiliaries.contains(surface)) {
      throw Error("'" + surface + "' is both an auxiliary and a content verb");
    }
  }
  for (const auto &[surface, lemma] : nouns) {
    check("noun", surface);
    check("noun", lemma);
  }
  for (const auto &w : auxiliaries) check("aux", w);
  for (const auto &w : stop_words) check("stop", w);
  for (const auto &w : prepositions) check("prep", w);
  for (const auto &w : adjectives) check("adj", w);
}

ExtractionLexicon LoadExtractionLexicon(std::istream &in,
                                        const std::string &name) {
  ExtractionLexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::vector<std::string> f = SplitTabs(trimmed);
    auto expect = [&](size_t n) {
      if (f.size() != n) {
        throw ParseError(name, line_no,
                         "'" + f[0] + "' row needs " + std::to_string(n) +
                             " tab-separated fields, got " +
                             std::to_string(f.size()));
      }
      for (size_t i = 1; i < n; ++i) {
        f[i] = ToLower(f[i]);
        if (!IsNormalizedLemma(f[i])) {
          throw ParseError(name, line_no, "malformed word '" + f[i] + "'");
        }
      }
    };
    const std::string &tag = f[0];
    if (tag == "verb") {
      expect(3);
      lexicon.verbs[f[1]] = f[2];
    } else if (tag == "noun") {
      expect(3);
      lexicon.nouns[f[1]] = f[2];
    } else if (tag == "aux") {
      expect(2);
      lexicon.auxiliaries.insert(f[1]);
    } else if (tag == "stop") {
      expect(2);
      lexicon.stop_words.insert(f[1]);
    } else if (tag == "prep") {
      expect(2);
      lexicon.prepositions.insert(f[1]);
    } else if (tag == "adj") {
      expect(2);
      lexicon.adjectives.insert(f[1]);
    } else {
      throw ParseError(name, line_no, "unknown lexicon section '" + tag + "'");
    }
  }
  if (in.bad()) throw Error("cannot read " + name);
  try {
    lexicon.Check();
  } catch (const Error &e) {
    throw Error(name + ": " + e.what());
  }
  return lexicon;
}

ExtractionLexicon LoadExtractionLexicon(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return LoadExtractionLexicon(in, path.string());
}

void WriteExtractionLexicon(const ExtractionLexicon &lexicon,
                            std::ostream &out) {
  for (const auto &[s, l] : lexicon.verbs) out << "verb\t" << s << '\t' << l << '\n';
  for (const auto &w : lexicon.auxiliaries) out << "aux\t" << w << '\n';
  for (const auto &w : lexicon.stop_words) out << "stop\t" << w << '\n';
  for (const auto &w : lexicon.prepositions) out << "prep\t" << w << '\n';
  for (const auto &[s, l] : lexicon.nouns) out << "noun\t" << s << '\t' << l << '\n';
  for (const auto &w : lexicon.adjectives) out << "adj\t" << w << '\n';
}

std::vector<std::string> Tokenize(std::string_view text) {
  static constexpr std::string_view kCurlyDouble[] = {"\xE2\x80\x9C",
                                                      "\xE2\x80\x9D"};
  std::string cleaned;
  cleaned.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    bool curly = false;
    for (std::string_view q : kCurlyDouble) {
      if (text.substr(i).starts_with(q)) {
        cleaned.push_back(' ');
        i += q.size() - 1;
        curly = true;
        break;
      }
    }
    if (curly) continue;
    char c = text[i];
    if (IsPunctuation(c)) {
      cleaned.push_back(' ');
    } else if (c >= 'A' && c <= 'Z') {
      cleaned.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      cleaned.push_back(c);
    }
  }

  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && IsSpace(cleaned[i])) ++i;
    size_t start = i;
    while (i < cleaned.size() && !IsSpace(cleaned[i])) ++i;
    std::string_view token = StripQuotes(
        std::string_view(cleaned).substr(start, i - start));
    if (!token.empty()) tokens.emplace_back(token);
  }
  return tokens;
}

std::string Lemmatize(std::string_view token, const ExtractionLexicon &lexicon) {
  if (auto it = lexicon.nouns.find(token); it != lexicon.nouns.end()) {
    return it->second;
  }
  if (auto it = lexicon.verbs.find(token); it != lexicon.verbs.end()) {
    return it->second;
  }
  if (token.size() <= 3) return std::string(token);

  if (EndsWith(token, "ies") && token.size() > 4) {
    return std::string(token.substr(0, token.size() - 3)) + "y";
  }
  if (EndsWith(token, "sses")) {
    return std::string(token.substr(0, token.size() - 2));
  }
  if (EndsWith(token, "es")) {
    std::string base(token.substr(0, token.size() - 2));
    if (lexicon.IsKnownWord(base)) return base;
    return std::string(token.substr(0, token.size() - 1));
  }
  if (EndsWith(token, "s") && !EndsWith(token, "ss") && !EndsWith(token, "us") &&
      !EndsWith(token, "is")) {
    return std::string(token.substr(0, token.size() - 1));
  }
  if (EndsWith(token, "ing") && token.size() >= 5) {
    return StripVerbSuffix(token, 3, lexicon);
  }
  if (EndsWith(token, "ed") && token.size() >= 5) {
    return StripVerbSuffix(token, 2, lexicon);
  }
  return std::string(token);
}

std::vector<Token> Annotate(const std::vector<std::string> &tokens,
                            const ExtractionLexicon &lexicon) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const std::string &t : tokens) out.push_back({t, Lemmatize(t, lexicon)});
  return out;
}

std::optional<SpoTriple> ExtractSpo(const std::vector<std::string> &tokens,
                                    const ExtractionLexicon &lexicon,
                                    const BrandLexicon &brands) {
  const size_t n = tokens.size();
  if (n == 0) return std::nullopt;

  auto noun_like = [&](size_t i) {
    const std::string &t = tokens[i];
    return !lexicon.IsVerb(t) && !lexicon.IsAuxiliary(t) &&
           !lexicon.IsStopWord(t) && !lexicon.IsAdjective(t) &&
           !brands.IsBrandToken(t);
  };
  auto last_noun = [&](size_t begin, size_t end) -> std::optional<size_t> {
    for (size_t i = end; i > begin; --i) {
      if (noun_like(i - 1)) return i - 1;
    }
    return std::nullopt;
  };
  auto first_noun = [&](size_t begin, size_t end) -> std::optional<size_t> {
    for (size_t i = begin; i < end; ++i) {
      if (noun_like(i)) return i;
    }
    return std::nullopt;
  };

  // Predicate: first content verb; an auxiliary run followed by a verb or a
  // gerund collapses onto that word. Subjects are searched left of
  // `subject_end`, objects right of `predicate_at`.
  std::optional<size_t> predicate_at;
  std::string predicate;
  size_t subject_end = n;
  for (size_t i = 0; i < n && !predicate_at; ++i) {
    if (lexicon.IsVerb(tokens[i])) {
      predicate_at = i;
      predicate = lexicon.verbs.find(tokens[i])->second;
      subject_end = i;
    } else if (lexicon.IsAuxiliary(tokens[i])) {
      size_t j = i;
      while (j < n && lexicon.IsAuxiliary(tokens[j])) ++j;
      if (j < n && (lexicon.IsVerb(tokens[j]) || IsGerund(tokens[j], lexicon))) {
        predicate_at = j;
        predicate = Lemmatize(tokens[j], lexicon);
        subject_end = i;
      } else {
        i = j - 1;
      }
    }
  }

  std::optional<size_t> subject_at, object_at;
  if (predicate_at) {
    subject_at = last_noun(0, subject_end);
    object_at = first_noun(*predicate_at + 1, n);
  } else {
    std::optional<size_t> boundary;
    for (size_t i = 0; i < n && !boundary; ++i) {
      if (lexicon.IsPreposition(tokens[i]) && first_noun(0, i)) boundary = i;
    }
    if (boundary) {
      subject_at = last_noun(0, *boundary);
      object_at = first_noun(*boundary + 1, n);
    } else {
      subject_at = last_noun(0, n);
    }
  }

  SpoTriple triple;
  if (subject_at) triple.subject = Lemmatize(tokens[*subject_at], lexicon);
  if (predicate_at) triple.predicate = predicate;
  if (object_at) triple.object = Lemmatize(tokens[*object_at], lexicon);
  if (triple.empty()) return std::nullopt;
  return triple;
}

std::optional<SpoTriple> ExtractSpoFromText(std::string_view text,
                                            const ExtractionLexicon &lexicon,
                                            const BrandLexicon &brands) {
  return ExtractSpo(Tokenize(text), lexicon, brands);
}

}  // namespace clause_eval
