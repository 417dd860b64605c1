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

// Image rating targets, losses and rating statistics.
//
// Each image has three 0..4 ratings, voted on by several annotators. The
// votes are turned either into a majority value (trained with softmax
// cross-entropy) or into a soft target distribution (trained with
// element-wise sigmoid cross-entropy). Losses are evaluated as pure functions
// together with their analytic gradients.

#ifndef CLAUSE_EVAL_RATINGS_H_
#define CLAUSE_EVAL_RATINGS_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clause_eval/corpus.h"
#include "clause_eval/types.h"

namespace clause_eval {

// Probability over the five rating values.
struct RatingDistribution {
  RatingVector p{};

  bool operator==(const RatingDistribution &) const = default;
};

// Throws Error unless all entries are finite, >= 0, and sum to 1 within
// 1e-9.
void CheckDistribution(const RatingDistribution &d);

struct MajorityRating {
  int value = 0;
  bool tied = false;
  bool adjudicated = false;

  // A tie nobody resolved; value is the smallest tied rating.
  bool provisional() const { return tied && !adjudicated; }

  bool operator==(const MajorityRating &) const = default;
};

MajorityRating MajorityVote(const RatingVotes &votes);

RatingDistribution SoftTargets(const RatingVotes &votes);

// Numerically stable logistic function.
double Sigmoid(double x);

struct SigmoidCrossEntropy {
  RatingVector elementwise{};
  double total = 0.0;  // sum of the element-wise losses
  RatingVector gradient{};
};

// L_i = -g_i log s(x_i) - (1 - g_i) log(1 - s(x_i)), gradient s(x_i) - g_i.
// Throws Error for non-finite logits or an invalid target.
SigmoidCrossEntropy SigmoidCrossEntropyLoss(const RatingVector &logits,
                                            const RatingDistribution &target);

struct SoftmaxCrossEntropy {
  double loss = 0.0;
  RatingVector gradient{};
};

// -log softmax(logits)[majority.value]. Throws Error for a provisional
// majority or non-finite logits.
SoftmaxCrossEntropy SoftmaxCrossEntropyLoss(const RatingVector &logits,
                                            const MajorityRating &majority);

// Argmax, smallest index on ties.
int PredictRating(const RatingVector &scores);

struct RatingAccuracy {
  std::array<double, 3> accuracy{};
  std::array<size_t, 3> n{};
  std::array<size_t, 3> correct{};
};

// Accuracy per kind over the supplied predictions. Throws Error if a
// prediction has no majority for its (image, kind). Kinds without
// predictions report n = 0 and accuracy 0.
RatingAccuracy RatingAccuracies(
    const RatingPredictionCorpus &predictions,
    const std::map<std::pair<std::string, RatingKind>, MajorityRating>
        &majorities);

constexpr int kNumDistances = 5;

struct DeviationHistogram {
  std::array<double, kNumDistances> fraction{};
  std::array<size_t, kNumDistances> count{};
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
  size_t n = 0;
};

// One (value, majority) pair per observation, both in 0..4.
DeviationHistogram L2DeviationHistogram(
    std::span<const std::pair<int, int>> value_majority);

// Annotator variant: every vote against its group's majority.
DeviationHistogram AnnotatorDeviationHistogram(
    std::span<const RatingVotes> groups);

struct RegressionComparison {
  // Mean |prediction - mean(votes)| over images.
  double prediction_to_mean = 0.0;
  // Mean over images of the mean over annotators of
  // |vote - mean(other votes)|.
  double leave_one_out = 0.0;
  size_t n = 0;
};

struct RegressionSample {
  double prediction = 0.0;
  std::vector<int> votes;
};

// Throws Error on empty input or an image with fewer than two votes.
RegressionComparison CompareRegression(
    std::span<const RegressionSample> samples);

// Per-image loss terms of the captioning objective.
struct LossBreakdown {
  double caption_nll = 0.0;
  double cls_penalty = 0.0;
  std::optional<std::array<double, 3>> rating_losses;
  double total = 0.0;
  // Argmax word per time step.
  std::vector<std::string> decoded;
};

// caption_nll = -sum_t log rows[t][targets[t]]. cls_penalty = penalty if no
// argmax-decoded word is one of `brand_tokens`. `rating_losses`, when given,
// are added to the total. Throws Error when a row is not a distribution
// within 1e-6, sizes disagree or a target is outside the vocabulary.
LossBreakdown CaptionLoss(std::span<const std::vector<double>> rows,
                          std::span<const int> targets,
                          std::span<const std::string> vocabulary,
                          const std::set<std::string> &brand_tokens,
                          double penalty,
                          std::optional<std::array<double, 3>> rating_losses =
                              std::nullopt);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_RATINGS_H_
