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

#ifndef CLAUSE_EVAL_TYPES_H_
#define CLAUSE_EVAL_TYPES_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clause_eval {

// Base error for everything the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed record in a line-oriented input file. The message always names
// the file and the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string &file, int line, const std::string &what);

  const std::string &file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

constexpr int kNumRatingValues = 5;
constexpr int kDefaultBeamSize = 3;

// Subject/predicate/object lemma skeleton of a caption. Any clause may be
// missing, but a valid triple has at least one.
struct SpoTriple {
  std::optional<std::string> subject;
  std::optional<std::string> predicate;
  std::optional<std::string> object;

  bool empty() const { return !subject && !predicate && !object; }
  int num_present() const {
    return (subject ? 1 : 0) + (predicate ? 1 : 0) + (object ? 1 : 0);
  }

  bool operator==(const SpoTriple &) const = default;
};

// Renders "(hand, hold, can)" with "-" for absent clauses.
std::string ToString(const SpoTriple &triple);

// Throws Error unless every present clause is a lowercase, non-empty,
// whitespace-free lemma and at least one clause is present.
void CheckTriple(const SpoTriple &triple);

// True if `s` is non-empty, has no ASCII whitespace and no uppercase ASCII.
bool IsNormalizedLemma(std::string_view s);

struct CaptionRecord {
  std::string image_id;
  std::string annotator_id;
  std::string text;
  // Optional brand class of the depicted product.
  std::optional<std::string> brand_class;

  bool operator==(const CaptionRecord &) const = default;
};

struct TripleRecord {
  std::string image_id;
  std::string annotator_id;
  SpoTriple triple;

  bool operator==(const TripleRecord &) const = default;
};

enum class RatingKind { kR1 = 0, kR2 = 1, kR3 = 2 };

constexpr std::array<RatingKind, 3> kAllRatingKinds = {
    RatingKind::kR1, RatingKind::kR2, RatingKind::kR3};

std::string_view RatingKindName(RatingKind kind);

// Parses "r1", "r2" or "r3".
std::optional<RatingKind> ParseRatingKind(std::string_view name);

struct RatingVotes {
  std::string image_id;
  RatingKind kind = RatingKind::kR1;
  std::vector<int> votes;
  std::optional<int> adjudicated_value;

  bool operator==(const RatingVotes &) const = default;
};

// Throws Error if the vote list is empty or a value is outside 0..4.
void CheckVotes(const RatingVotes &votes);

struct Candidate {
  std::string caption;
  double score = 0.0;

  bool operator==(const Candidate &) const = default;
};

// Beam-search output for one image, best score first.
struct CandidateSet {
  std::string image_id;
  std::vector<Candidate> candidates;

  bool operator==(const CandidateSet &) const = default;
};

// Throws Error unless 1 <= |candidates| <= beam_size, scores are finite and
// non-increasing.
void CheckCandidateSet(const CandidateSet &set, int beam_size);

using RatingVector = std::array<double, kNumRatingValues>;

struct RatingPrediction {
  std::string image_id;
  RatingKind kind = RatingKind::kR1;
  RatingVector logits{};

  bool operator==(const RatingPrediction &) const = default;
};

// Brand class name -> surface tokens that name the brand in a caption.
class BrandLexicon {
 public:
  // Adds a class. Tokens are normalized to lowercase. Throws Error when the
  // token set is empty, a token is malformed, the class already exists or a
  // token is claimed by another class.
  void AddClass(const std::string &name, const std::vector<std::string> &tokens);

  bool HasClass(const std::string &name) const;
  const std::set<std::string> &Tokens(const std::string &name) const;

  // Class owning `token`, if any.
  std::optional<std::string> ClassOf(std::string_view token) const;
  bool IsBrandToken(std::string_view token) const;

  const std::map<std::string, std::set<std::string>> &classes() const {
    return classes_;
  }

  bool operator==(const BrandLexicon &) const = default;

 private:
  std::map<std::string, std::set<std::string>> classes_;
  std::map<std::string, std::string, std::less<>> owner_;
};

// ASCII lowercase copy.
std::string ToLower(std::string_view s);

// Copy without leading/trailing ASCII whitespace.
std::string Trim(std::string_view s);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_TYPES_H_
