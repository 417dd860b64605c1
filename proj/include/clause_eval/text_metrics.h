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

#ifndef CLAUSE_EVAL_TEXT_METRICS_H_
#define CLAUSE_EVAL_TEXT_METRICS_H_

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "clause_eval/types.h"

namespace clause_eval {

constexpr int kBleuOrder = 4;

using Tokens = std::vector<std::string>;

// n-gram counts of one token sequence for n = 1..4.
class NgramProfile {
 public:
  explicit NgramProfile(const Tokens &tokens);

  // Count of `ngram` (size 1..4), 0 if absent.
  int Count(std::span<const std::string> ngram) const;
  const std::map<std::vector<std::string>, int> &Order(int n) const;
  // max(0, |tokens| - n + 1)
  int Total(int n) const;

 private:
  std::array<std::map<std::vector<std::string>, int>, kBleuOrder> counts_;
  size_t length_;
};

struct Rational {
  long numerator = 0;
  long denominator = 0;

  double value() const {
    return denominator == 0 ? 0.0
                            : static_cast<double>(numerator) / denominator;
  }
  bool operator==(const Rational &) const = default;
};

// Clipped n-gram matches over candidate n-grams. A candidate shorter than n
// yields 0/0.
Rational ModifiedPrecision(const Tokens &candidate,
                           std::span<const Tokens> references, int n);

// Reference length closest to `candidate_length`, shorter on ties.
size_t EffectiveReferenceLength(size_t candidate_length,
                                std::span<const Tokens> references);

// Unsmoothed BLEU-4. Throws Error on an empty candidate or reference set.
double Bleu4Sentence(const Tokens &candidate,
                     std::span<const Tokens> references);

struct BleuSegment {
  Tokens candidate;
  std::vector<Tokens> references;
};

struct BleuStats {
  std::array<long, kBleuOrder> matches{};
  std::array<long, kBleuOrder> totals{};
  long candidate_length = 0;
  long reference_length = 0;

  BleuStats &operator+=(const BleuStats &other);
  double Score() const;
};

BleuStats SegmentStats(const Tokens &candidate,
                       std::span<const Tokens> references);

// Micro-averaged BLEU-4 over the corpus. Throws Error on empty input.
double Bleu4Corpus(std::span<const BleuSegment> segments);

struct LabeledCaption {
  std::string image_id;
  std::string brand_class;
  Tokens tokens;
};

struct ClassAccuracy {
  size_t correct = 0;
  size_t total = 0;
  double accuracy() const {
    return total == 0 ? 0.0 : static_cast<double>(correct) / total;
  }
};

struct ScaReport {
  double overall = 0.0;  // OA, caption-weighted
  double mean = 0.0;     // MA, unweighted over classes
  std::map<std::string, ClassAccuracy> per_class;
};

// A caption is correct iff it contains a token of its image's brand class.
// Throws Error on empty input or a class missing from `brands`.
ScaReport SentenceClassificationAccuracy(
    std::span<const LabeledCaption> captions, const BrandLexicon &brands);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_TEXT_METRICS_H_
