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

#include "clause_eval/types.h"

#include <algorithm>
#include <cmath>

namespace clause_eval {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

ParseError::ParseError(const std::string &file, int line,
                       const std::string &what)
    : Error(file + ":" + std::to_string(line) + ": " + what),
      file_(file),
      line_(line) {}

std::string ToLower(std::string_view s) {
  std::string out(s);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && IsSpace(s[b])) ++b;
  while (e > b && IsSpace(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

bool IsNormalizedLemma(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (IsSpace(c) || (c >= 'A' && c <= 'Z')) return false;
  }
  return true;
}

std::string ToString(const SpoTriple &triple) {
  auto part = [](const std::optional<std::string> &s) {
    return s ? *s : std::string("-");
  };
  return "(" + part(triple.subject) + ", " + part(triple.predicate) + ", " +
         part(triple.object) + ")";
}

void CheckTriple(const SpoTriple &triple) {
  if (triple.empty()) throw Error("triple has no clause");
  for (const auto *clause : {&triple.subject, &triple.predicate, &triple.object}) {
    if (*clause && !IsNormalizedLemma(**clause)) {
      throw Error("malformed lemma '" + **clause + "' in triple " +
                  ToString(triple));
    }
  }
}

std::string_view RatingKindName(RatingKind kind) {
  switch (kind) {
    case RatingKind::kR1: return "r1";
    case RatingKind::kR2: return "r2";
    case RatingKind::kR3: return "r3";
  }
  return "?";
}

std::optional<RatingKind> ParseRatingKind(std::string_view name) {
  for (RatingKind kind : kAllRatingKinds) {
    if (RatingKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

void CheckVotes(const RatingVotes &votes) {
  if (votes.votes.empty()) {
    throw Error("no votes for image '" + votes.image_id + "' rating " +
                std::string(RatingKindName(votes.kind)));
  }
  auto in_range = [](int v) { return v >= 0 && v < kNumRatingValues; };
  if (!std::all_of(votes.votes.begin(), votes.votes.end(), in_range)) {
    throw Error("vote outside 0..4 for image '" + votes.image_id + "'");
  }
  if (votes.adjudicated_value && !in_range(*votes.adjudicated_value)) {
    throw Error("adjudicated value outside 0..4 for image '" +
                votes.image_id + "'");
  }
}

void CheckCandidateSet(const CandidateSet &set, int beam_size) {
  if (set.candidates.empty()) {
    throw Error("no candidates for image '" + set.image_id + "'");
  }
  if (static_cast<int>(set.candidates.size()) > beam_size) {
    throw Error("image '" + set.image_id + "' has " +
                std::to_string(set.candidates.size()) +
                " candidates, beam size is " + std::to_string(beam_size));
  }
  for (size_t i = 0; i < set.candidates.size(); ++i) {
    const Candidate &c = set.candidates[i];
    if (!std::isfinite(c.score)) {
      throw Error("non-finite candidate score for image '" + set.image_id +
                  "'");
    }
    if (i > 0 && c.score > set.candidates[i - 1].score) {
      throw Error("candidates for image '" + set.image_id +
                  "' are not sorted by descending score");
    }
  }
}

void BrandLexicon::AddClass(const std::string &name,
                            const std::vector<std::string> &tokens) {
  std::string cls = ToLower(Trim(name));
  if (!IsNormalizedLemma(cls)) throw Error("malformed brand class '" + name + "'");
  if (classes_.contains(cls)) throw Error("duplicate brand class '" + cls + "'");
  if (tokens.empty()) throw Error("brand class '" + cls + "' has no tokens");
  std::set<std::string> normalized;
  for (const std::string &t : tokens) {
    std::string token = ToLower(Trim(t));
    if (!IsNormalizedLemma(token)) {
      throw Error("malformed token '" + t + "' in brand class '" + cls + "'");
    }
    auto it = owner_.find(token);
    if (it != owner_.end() && it->second != cls) {
      throw Error("brand token '" + token + "' belongs to both '" +
                  it->second + "' and '" + cls + "'");
    }
    normalized.insert(token);
  }
  for (const std::string &token : normalized) owner_[token] = cls;
  classes_[cls] = std::move(normalized);
}

bool BrandLexicon::HasClass(const std::string &name) const {
  return classes_.contains(name);
}

const std::set<std::string> &BrandLexicon::Tokens(const std::string &name) const {
  auto it = classes_.find(name);
  if (it == classes_.end()) throw Error("unknown brand class '" + name + "'");
  return it->second;
}

std::optional<std::string> BrandLexicon::ClassOf(std::string_view token) const {
  auto it = owner_.find(token);
  if (it == owner_.end()) return std::nullopt;
  return it->second;
}

bool BrandLexicon::IsBrandToken(std::string_view token) const {
  return owner_.find(token) != owner_.end();
}

}  // namespace clause_eval
