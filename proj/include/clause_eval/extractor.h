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

// Shallow rule-based clause extraction.
//
// A caption is tokenized, the predicate is located as the first content verb
// (an auxiliary directly followed by a gerund collapses onto the gerund), the
// subject is the last noun-like token in front of the predicate and the
// object is the first noun-like token after it. Brand names never become
// subject or object; "A hand is holding a Coca Cola can" yields
// (hand, hold, can).
//
// Captions without a content verb ("A room with blue walls and a white
// sink") are split at the first preposition that follows a noun-like token:
// the subject is the last noun-like token before it and the object the first
// one after it. Without such a preposition the subject is the last noun-like
// token of the sentence and there is no object.

#ifndef CLAUSE_EVAL_EXTRACTOR_H_
#define CLAUSE_EVAL_EXTRACTOR_H_

#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "clause_eval/types.h"

namespace clause_eval {

struct Token {
  std::string surface;
  std::string lemma;

  bool operator==(const Token &) const = default;
};

// Word lists driving the extractor. Every entry is lowercase.
//
// lexicon.tsv rows:
//   verb<TAB>surface<TAB>lemma   content verb form
//   aux<TAB>surface              auxiliary / copula
//   stop<TAB>surface             determiner, conjunction, pronoun, ...
//   prep<TAB>surface             preposition (also a stop word)
//   noun<TAB>surface<TAB>lemma   noun form with an explicit lemma
//   adj<TAB>surface              adjective
// Empty lines and lines starting with '#' are ignored.
struct ExtractionLexicon {
  std::map<std::string, std::string, std::less<>> verbs;
  std::set<std::string, std::less<>> auxiliaries;
  std::set<std::string, std::less<>> stop_words;
  std::set<std::string, std::less<>> prepositions;
  std::map<std::string, std::string, std::less<>> nouns;
  std::set<std::string, std::less<>> adjectives;

  // Verb lemmas, noun surfaces and lemmas; consulted by suffix rules.
  bool IsKnownWord(std::string_view word) const;

  bool IsVerb(std::string_view token) const { return verbs.contains(token); }
  bool IsAuxiliary(std::string_view token) const {
    return auxiliaries.contains(token);
  }
  bool IsPreposition(std::string_view token) const {
    return prepositions.contains(token);
  }
  bool IsStopWord(std::string_view token) const {
    return stop_words.contains(token) || prepositions.contains(token);
  }
  bool IsAdjective(std::string_view token) const {
    return adjectives.contains(token);
  }

  // Throws Error when auxiliaries and content verbs overlap or an entry is
  // not a normalized lemma.
  void Check() const;

  bool operator==(const ExtractionLexicon &) const = default;
};

ExtractionLexicon LoadExtractionLexicon(std::istream &in,
                                        const std::string &name);
ExtractionLexicon LoadExtractionLexicon(const std::filesystem::path &path);
void WriteExtractionLexicon(const ExtractionLexicon &lexicon,
                            std::ostream &out);

// Lowercases, strips sentence and quoting punctuation and splits on
// whitespace. Hyphens and word-internal apostrophes are kept.
std::vector<std::string> Tokenize(std::string_view text);

// Lexicon entries win; otherwise ordered suffix rules:
//   -ies -> -y, -sses -> -ss,
//   -es -> drop "es" when that base is known, else drop "s",
//   -s -> drop "s" (not after "s", "u" or "i"),
//   -ing / -ed -> strip, restoring a final "e" or undoubling a final
//   consonant when the lexicon knows that form.
// Words of three letters or fewer are returned unchanged.
std::string Lemmatize(std::string_view token, const ExtractionLexicon &lexicon);

std::vector<Token> Annotate(const std::vector<std::string> &tokens,
                            const ExtractionLexicon &lexicon);

// Returns nullopt only when no clause can be found, which includes empty
// input.
std::optional<SpoTriple> ExtractSpo(const std::vector<std::string> &tokens,
                                    const ExtractionLexicon &lexicon,
                                    const BrandLexicon &brands);

// Tokenize + ExtractSpo.
std::optional<SpoTriple> ExtractSpoFromText(std::string_view text,
                                            const ExtractionLexicon &lexicon,
                                            const BrandLexicon &brands);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_EXTRACTOR_H_
