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

#include "clause_eval/ratings.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace clause_eval {

namespace {

void CheckFinite(const RatingVector &v, const char *what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw Error(std::string(what) + " contains a non-finite value");
  }
}

std::array<int, kNumRatingValues> CountVotes(const RatingVotes &votes) {
  CheckVotes(votes);
  std::array<int, kNumRatingValues> counts{};
  for (int v : votes.votes) ++counts[v];
  return counts;
}

}  // namespace

void CheckDistribution(const RatingDistribution &d) {
  double sum = 0.0;
  for (double p : d.p) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error("rating distribution has a negative or non-finite entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error("rating distribution sums to " + std::to_string(sum));
  }
}

MajorityRating MajorityVote(const RatingVotes &votes) {
  std::array<int, kNumRatingValues> counts = CountVotes(votes);
  const int top = *std::max_element(counts.begin(), counts.end());
  MajorityRating majority;
  majority.value = -1;
  for (int v = 0; v < kNumRatingValues; ++v) {
    if (counts[v] != top) continue;
    if (majority.value < 0) {
      majority.value = v;
    } else {
      majority.tied = true;
    }
  }
  if (majority.tied && votes.adjudicated_value) {
    majority.value = *votes.adjudicated_value;
    majority.adjudicated = true;
  }
  return majority;
}

RatingDistribution SoftTargets(const RatingVotes &votes) {
  std::array<int, kNumRatingValues> counts = CountVotes(votes);
  RatingDistribution d;
  const double n = static_cast<double>(votes.votes.size());
  for (int v = 0; v < kNumRatingValues; ++v) d.p[v] = counts[v] / n;
  return d;
}

double Sigmoid(double x) {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

SigmoidCrossEntropy SigmoidCrossEntropyLoss(const RatingVector &logits,
                                            const RatingDistribution &target) {
  CheckFinite(logits, "logits");
  CheckDistribution(target);
  SigmoidCrossEntropy out;
  for (int i = 0; i < kNumRatingValues; ++i) {
    const double x = logits[i], g = target.p[i];
    // -g log s(x) - (1-g) log(1-s(x)) rewritten without log(0).
    out.elementwise[i] = std::max(x, 0.0) - x * g + std::log1p(std::exp(-std::abs(x)));
    out.total += out.elementwise[i];
    out.gradient[i] = Sigmoid(x) - g;
  }
  return out;
}

SoftmaxCrossEntropy SoftmaxCrossEntropyLoss(const RatingVector &logits,
                                            const MajorityRating &majority) {
  CheckFinite(logits, "logits");
  if (majority.provisional()) {
    throw Error("majority rating is an unresolved tie");
  }
  if (majority.value < 0 || majority.value >= kNumRatingValues) {
    throw Error("majority rating outside 0..4");
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double x : logits) sum += std::exp(x - top);
  const double log_sum = top + std::log(sum);

  SoftmaxCrossEntropy out;
  out.loss = log_sum - logits[majority.value];
  for (int i = 0; i < kNumRatingValues; ++i) {
    out.gradient[i] = std::exp(logits[i] - log_sum) - (i == majority.value ? 1.0 : 0.0);
  }
  return out;
}

int PredictRating(const RatingVector &scores) {
  return static_cast<int>(std::max_element(scores.begin(), scores.end()) -
                          scores.begin());
}

RatingAccuracy RatingAccuracies(
    const RatingPredictionCorpus &predictions,
    const std::map<std::pair<std::string, RatingKind>, MajorityRating>
        &majorities) {
  RatingAccuracy out;
  for (const auto &[key, prediction] : predictions.entries) {
    auto it = majorities.find(key);
    if (it == majorities.end()) {
      throw Error("no majority rating for image '" + key.first + "' " +
                  std::string(RatingKindName(key.second)));
    }
    const int k = static_cast<int>(key.second);
    ++out.n[k];
    if (PredictRating(prediction.logits) == it->second.value) ++out.correct[k];
  }
  for (int k = 0; k < 3; ++k) {
    out.accuracy[k] =
        out.n[k] == 0 ? 0.0 : static_cast<double>(out.correct[k]) / out.n[k];
  }
  return out;
}

DeviationHistogram L2DeviationHistogram(
    std::span<const std::pair<int, int>> value_majority) {
  if (value_majority.empty()) throw Error("no ratings for the deviation histogram");
  DeviationHistogram h;
  for (const auto &[value, majority] : value_majority) {
    if (value < 0 || value >= kNumRatingValues || majority < 0 ||
        majority >= kNumRatingValues) {
      throw Error("rating outside 0..4 in deviation histogram");
    }
    ++h.count[std::abs(value - majority)];
  }
  h.n = value_majority.size();
  const double n = static_cast<double>(h.n);
  double sum = 0.0;
  for (int d = 0; d < kNumDistances; ++d) {
    h.fraction[d] = h.count[d] / n;
    sum += static_cast<double>(d) * h.count[d];
  }
  h.mean = sum / n;
  double sq = 0.0;
  for (int d = 0; d < kNumDistances; ++d) {
    sq += h.count[d] * (d - h.mean) * (d - h.mean);
  }
  h.stddev = std::sqrt(sq / n);
  return h;
}

DeviationHistogram AnnotatorDeviationHistogram(
    std::span<const RatingVotes> groups) {
  std::vector<std::pair<int, int>> pairs;
  for (const RatingVotes &group : groups) {
    const int majority = MajorityVote(group).value;
    for (int vote : group.votes) pairs.emplace_back(vote, majority);
  }
  return L2DeviationHistogram(pairs);
}

RegressionComparison CompareRegression(
    std::span<const RegressionSample> samples) {
  if (samples.empty()) throw Error("no samples for regression comparison");
  RegressionComparison out;
  for (const RegressionSample &s : samples) {
    const size_t a = s.votes.size();
    if (a < 2) throw Error("regression comparison needs at least two annotators");
    if (!std::isfinite(s.prediction)) throw Error("non-finite regression prediction");
    double total = 0.0;
    for (int v : s.votes) total += v;
    out.prediction_to_mean += std::abs(s.prediction - total / a);
    double deviation = 0.0;
    for (int v : s.votes) {
      deviation += std::abs(v - (total - v) / static_cast<double>(a - 1));
    }
    out.leave_one_out += deviation / a;
  }
  out.n = samples.size();
  out.prediction_to_mean /= out.n;
  out.leave_one_out /= out.n;
  return out;
}

LossBreakdown CaptionLoss(std::span<const std::vector<double>> rows,
                          std::span<const int> targets,
                          std::span<const std::string> vocabulary,
                          const std::set<std::string> &brand_tokens,
                          double penalty,
                          std::optional<std::array<double, 3>> rating_losses) {
  if (rows.size() != targets.size()) {
    throw Error("caption loss: " + std::to_string(rows.size()) +
                " probability rows for " + std::to_string(targets.size()) +
                " target words");
  }
  if (!(penalty >= 0.0)) throw Error("caption loss: penalty must be >= 0");
  LossBreakdown out;
  bool brand_seen = false;
  for (size_t t = 0; t < rows.size(); ++t) {
    const std::vector<double> &row = rows[t];
    if (row.size() != vocabulary.size()) {
      throw Error("caption loss: row " + std::to_string(t) + " has " +
                  std::to_string(row.size()) + " entries, vocabulary has " +
                  std::to_string(vocabulary.size()));
    }
    double sum = 0.0;
    for (double p : row) {
      if (!std::isfinite(p) || p < 0.0) {
        throw Error("caption loss: row " + std::to_string(t) +
                    " has an invalid probability");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6) {
      throw Error("caption loss: row " + std::to_string(t) + " sums to " +
                  std::to_string(sum));
    }
    const int target = targets[t];
    if (target < 0 || static_cast<size_t>(target) >= vocabulary.size()) {
      throw Error("caption loss: target index " + std::to_string(target) +
                  " outside the vocabulary");
    }
    out.caption_nll -= std::log(row[target]);
    const size_t best = std::max_element(row.begin(), row.end()) - row.begin();
    out.decoded.push_back(vocabulary[best]);
    brand_seen = brand_seen || brand_tokens.contains(vocabulary[best]);
  }
  out.cls_penalty = brand_seen ? 0.0 : penalty;
  out.total = out.caption_nll + out.cls_penalty;
  if (rating_losses) {
    for (double l : *rating_losses) out.total += l;
  }
  out.rating_losses = rating_losses;
  return out;
}

}  // namespace clause_eval
