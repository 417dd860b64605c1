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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

namespace clause_eval {
namespace {

RatingVotes Votes(std::vector<int> v, std::optional<int> adjudicated = std::nullopt) {
  return {"img", RatingKind::kR1, std::move(v), adjudicated};
}

RatingVector RandomLogits(std::mt19937 &rng) {
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  RatingVector x;
  for (double &v : x) v = u(rng);
  return x;
}

RatingDistribution RandomVotesTarget(std::mt19937 &rng) {
  std::vector<int> votes;
  for (int i = 0; i < 5; ++i) votes.push_back(static_cast<int>(rng() % 5));
  return SoftTargets(Votes(votes));
}

double Norm(const RatingVector &v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

// Central differences with step h of a scalar function of the logits.
template <typename F>
RatingVector NumericGradient(F f, RatingVector x, double h = 1e-5) {
  RatingVector g;
  for (int i = 0; i < 5; ++i) {
    const double x0 = x[i];
    x[i] = x0 + h;
    const double up = f(x);
    x[i] = x0 - h;
    const double down = f(x);
    x[i] = x0;
    g[i] = (up - down) / (2 * h);
  }
  return g;
}

double RelativeError(const RatingVector &analytic, const RatingVector &numeric) {
  RatingVector d;
  for (int i = 0; i < 5; ++i) d[i] = analytic[i] - numeric[i];
  const double scale = std::max({Norm(analytic), Norm(numeric), 1e-12});
  return Norm(d) / scale;
}

TEST(MajorityVoteTest, Examples) {
  EXPECT_EQ(MajorityVote(Votes({4, 4, 4, 4, 3})), (MajorityRating{4, false, false}));
  EXPECT_EQ(MajorityVote(Votes({2, 2, 3, 3, 0}, 3)), (MajorityRating{3, true, true}));
  EXPECT_EQ(MajorityVote(Votes({1})), (MajorityRating{1, false, false}));
  MajorityRating tie = MajorityVote(Votes({3, 3, 1, 1, 0}));
  EXPECT_EQ(tie.value, 1);
  EXPECT_TRUE(tie.provisional());
}

TEST(MajorityVoteTest, AdjudicationOnlyResolvesTies) {
  EXPECT_EQ(MajorityVote(Votes({4, 4, 3}, 3)), (MajorityRating{4, false, false}));
  EXPECT_THROW(MajorityVote(Votes({})), Error);
}

TEST(SoftTargetsTest, Examples) {
  EXPECT_EQ(SoftTargets(Votes({4, 4, 4, 4, 3})).p, (RatingVector{0, 0, 0, 0.2, 0.8}));
  EXPECT_EQ(SoftTargets(Votes({2, 2, 2, 2, 2})).p, (RatingVector{0, 0, 1, 0, 0}));
  EXPECT_EQ(SoftTargets(Votes({0, 1, 2, 3, 4})).p, (RatingVector{0.2, 0.2, 0.2, 0.2, 0.2}));
}

TEST(SoftTargetsTest, RandomVotesGiveValidDistributionWithMajorityAsArgmax) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> v;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 7); i < n; ++i) {
      v.push_back(static_cast<int>(rng() % 5));
    }
    RatingDistribution d = SoftTargets(Votes(v));
    EXPECT_NO_THROW(CheckDistribution(d));
    const double top = *std::max_element(d.p.begin(), d.p.end());
    EXPECT_EQ(d.p[MajorityVote(Votes(v)).value], top);
  }
}

TEST(DistributionTest, RejectsInvalid) {
  EXPECT_THROW(CheckDistribution({{0.5, 0.5, 0.1, 0, 0}}), Error);
  EXPECT_THROW(CheckDistribution({{1.1, -0.1, 0, 0, 0}}), Error);
}

TEST(SigmoidCrossEntropyTest, ZeroLogitsCostFiveLogTwo) {
  SigmoidCrossEntropy l = SigmoidCrossEntropyLoss({0, 0, 0, 0, 0}, {{0, 0, 0, 0.2, 0.8}});
  EXPECT_NEAR(l.total, 5 * std::log(2.0), 1e-12);
  for (double e : l.elementwise) EXPECT_NEAR(e, std::log(2.0), 1e-12);
}

TEST(SigmoidCrossEntropyTest, GradientVanishesWhereSigmoidEqualsTarget) {
  RatingDistribution g{{0.1, 0.2, 0.3, 0.15, 0.25}};
  RatingVector logits;
  for (int i = 0; i < 5; ++i) logits[i] = std::log(g.p[i] / (1 - g.p[i]));
  SigmoidCrossEntropy l = SigmoidCrossEntropyLoss(logits, g);
  for (double d : l.gradient) EXPECT_NEAR(d, 0.0, 1e-15);
  // Convexity probe: every step away from the stationary point costs more.
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    RatingVector dir = RandomLogits(rng), moved = logits;
    for (int i = 0; i < 5; ++i) moved[i] += 1e-2 * dir[i];
    EXPECT_GT(SigmoidCrossEntropyLoss(moved, g).total, l.total);
  }
}

TEST(SigmoidCrossEntropyTest, StableForExtremeLogits) {
  SigmoidCrossEntropy l =
      SigmoidCrossEntropyLoss({1000, -1000, 800, -800, 0}, {{0, 1, 0, 0, 0}});
  EXPECT_TRUE(std::isfinite(l.total));
  EXPECT_NEAR(l.elementwise[0], 1000, 1e-9);
  EXPECT_NEAR(l.elementwise[1], 1000, 1e-9);
  EXPECT_THROW(SigmoidCrossEntropyLoss({NAN, 0, 0, 0, 0}, {{1, 0, 0, 0, 0}}), Error);
}

TEST(SigmoidCrossEntropyTest, GradientMatchesFiniteDifferences) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    RatingVector x = RandomLogits(rng);
    RatingDistribution g = RandomVotesTarget(rng);
    RatingVector numeric = NumericGradient(
        [&](const RatingVector &v) { return SigmoidCrossEntropyLoss(v, g).total; }, x);
    EXPECT_LT(RelativeError(SigmoidCrossEntropyLoss(x, g).gradient, numeric), 1e-6);
  }
}

TEST(SoftmaxCrossEntropyTest, Examples) {
  EXPECT_NEAR(SoftmaxCrossEntropyLoss({0, 0, 0, 0, 0}, {2, false, false}).loss,
              std::log(5.0), 1e-12);
  EXPECT_NEAR(SoftmaxCrossEntropyLoss({0, 0, 0, 1e6, 0}, {3, false, false}).loss, 0.0,
              1e-12);
  EXPECT_THROW(SoftmaxCrossEntropyLoss({0, 0, 0, 0, 0}, {1, true, false}), Error);
  EXPECT_NO_THROW(SoftmaxCrossEntropyLoss({0, 0, 0, 0, 0}, {1, true, true}));
}

TEST(SoftmaxCrossEntropyTest, GradientMatchesFiniteDifferences) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    RatingVector x = RandomLogits(rng);
    MajorityRating m{static_cast<int>(rng() % 5), false, false};
    RatingVector numeric = NumericGradient(
        [&](const RatingVector &v) { return SoftmaxCrossEntropyLoss(v, m).loss; }, x);
    EXPECT_LT(RelativeError(SoftmaxCrossEntropyLoss(x, m).gradient, numeric), 1e-6);
  }
}

TEST(PredictRatingTest, ArgmaxWithSmallestIndexOnTies) {
  EXPECT_EQ(PredictRating({0, 0, 0, 0.2, 0.8}), 4);
  EXPECT_EQ(PredictRating({0.2, 0.2, 0.2, 0.2, 0.2}), 0);
  EXPECT_EQ(PredictRating({0.1, 0.5, 0.2, 0.1, 0.1}), 1);
}

TEST(PredictRatingTest, InvariantUnderIncreasingTransforms) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    RatingVector x = RandomLogits(rng);
    if (trial % 3 == 0) x[rng() % 5] = x[rng() % 5];  // force some ties
    RatingVector e, c;
    for (int i = 0; i < 5; ++i) {
      e[i] = std::exp(x[i]);
      c[i] = x[i] * x[i] * x[i] + 7;
    }
    EXPECT_EQ(PredictRating(e), PredictRating(x));
    EXPECT_EQ(PredictRating(c), PredictRating(x));
  }
}

TEST(RatingAccuracyTest, ThreeOfFour) {
  RatingPredictionCorpus preds;
  std::map<std::pair<std::string, RatingKind>, MajorityRating> majorities;
  for (int i = 0; i < 4; ++i) {
    std::string id = "i" + std::to_string(i);
    RatingVector logits{};
    logits[i] = 5;  // predicts i
    preds.entries[{id, RatingKind::kR2}] = {id, RatingKind::kR2, logits};
    majorities[{id, RatingKind::kR2}] = {i == 3 ? 0 : i, false, false};
  }
  RatingAccuracy a = RatingAccuracies(preds, majorities);
  EXPECT_EQ(a.accuracy[1], 0.75);
  EXPECT_EQ(a.n[1], 4u);
  EXPECT_EQ(a.correct[1], 3u);
  EXPECT_EQ(a.n[0], 0u);

  majorities.erase({"i0", RatingKind::kR2});
  EXPECT_THROW(RatingAccuracies(preds, majorities), Error);
}

TEST(DeviationHistogramTest, Examples) {
  std::vector<std::pair<int, int>> equal = {{2, 2}, {0, 0}, {4, 4}};
  DeviationHistogram h = L2DeviationHistogram(equal);
  EXPECT_EQ(h.fraction, (std::array<double, 5>{1, 0, 0, 0, 0}));
  EXPECT_EQ(h.mean, 0.0);

  std::vector<RatingVotes> groups = {Votes({4, 4, 4, 4, 3})};
  DeviationHistogram a = AnnotatorDeviationHistogram(groups);
  EXPECT_EQ(a.fraction, (std::array<double, 5>{0.8, 0.2, 0, 0, 0}));
  EXPECT_EQ(a.mean, 0.2);
  EXPECT_THROW(L2DeviationHistogram(std::vector<std::pair<int, int>>{}), Error);
}

// 72 exact, 26 off by one, 2 off by two: mean 30/100, E[d^2] = 34/100,
// variance 0.34 - 0.09 = 0.25.
TEST(DeviationHistogramTest, FixtureWithKnownMoments) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 72; ++i) pairs.push_back({2, 2});
  for (int i = 0; i < 26; ++i) pairs.push_back({i % 2 ? 1 : 3, 2});
  for (int i = 0; i < 2; ++i) pairs.push_back({4, 2});
  DeviationHistogram h = L2DeviationHistogram(pairs);
  EXPECT_EQ(h.count, (std::array<size_t, 5>{72, 26, 2, 0, 0}));
  EXPECT_NEAR(h.mean, 0.30, 1e-12);
  EXPECT_NEAR(h.stddev, 0.50, 1e-12);
  EXPECT_EQ(h.n, 100u);
}

TEST(DeviationHistogramTest, MomentsAreRecomputableFromBins) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 60); i < n; ++i) {
      pairs.push_back({static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
    }
    DeviationHistogram h = L2DeviationHistogram(pairs);
    double sum = 0, mean = 0, second = 0;
    for (int d = 0; d < 5; ++d) {
      sum += h.fraction[d];
      mean += d * h.fraction[d];
      second += d * d * h.fraction[d];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
    EXPECT_NEAR(mean, h.mean, 1e-12);
    EXPECT_NEAR(std::sqrt(std::max(0.0, second - mean * mean)), h.stddev, 1e-12);
  }
}

TEST(RegressionTest, Examples) {
  std::vector<RegressionSample> outlier = {{0.8, {0, 0, 0, 0, 4}}};
  RegressionComparison r = CompareRegression(outlier);
  EXPECT_NEAR(r.leave_one_out, 1.6, 1e-12);
  EXPECT_NEAR(r.prediction_to_mean, 0.0, 1e-12);

  std::vector<RegressionSample> same = {{3.0, {2, 2, 2}}, {1.0, {1, 1}}};
  RegressionComparison s = CompareRegression(same);
  EXPECT_EQ(s.leave_one_out, 0.0);
  EXPECT_NEAR(s.prediction_to_mean, 0.5, 1e-12);
  EXPECT_EQ(s.n, 2u);

  std::vector<RegressionSample> single = {{1.0, {1}}};
  EXPECT_THROW(CompareRegression(single), Error);
}

TEST(CaptionLossTest, OneHotRowsCostNothing) {
  std::vector<std::string> vocab = {"a", "can", "of", "pepsi"};
  std::vector<std::vector<double>> rows = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  std::vector<int> targets = {0, 1, 2, 3};
  LossBreakdown b = CaptionLoss(rows, targets, vocab, {"pepsi"}, 1.0);
  EXPECT_EQ(b.caption_nll, 0.0);
  EXPECT_EQ(b.cls_penalty, 0.0);
  EXPECT_EQ(b.decoded, vocab);
}

TEST(CaptionLossTest, UniformRowsCostStepsTimesLogVocabulary) {
  std::vector<std::string> vocab = {"a", "b", "c", "d", "e"};
  std::vector<std::vector<double>> rows(3, std::vector<double>(5, 0.2));
  std::vector<int> targets = {4, 0, 2};
  LossBreakdown b = CaptionLoss(rows, targets, vocab, {"pepsi"}, 1.0);
  EXPECT_NEAR(b.caption_nll, 3 * std::log(5.0), 1e-12);
  // Argmax decoding picks "a" three times; no brand token.
  EXPECT_EQ(b.cls_penalty, 1.0);
}

TEST(CaptionLossTest, TotalIsSumOfParts) {
  std::mt19937 rng(8);
  std::vector<std::string> vocab = {"a", "man", "holds", "coke", "can"};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::vector<double>> rows;
    std::vector<int> targets;
    for (int t = 0; t < 4; ++t) {
      std::vector<double> row(5);
      double sum = 0;
      for (double &p : row) sum += (p = 0.01 + (rng() % 100) / 100.0);
      for (double &p : row) p /= sum;
      rows.push_back(row);
      targets.push_back(static_cast<int>(rng() % 5));
    }
    std::array<double, 3> rl = {0.1 * (rng() % 10), 0.2, 0.05 * (rng() % 7)};
    const double lambda = 0.5 * (rng() % 4);
    LossBreakdown b = CaptionLoss(rows, targets, vocab, {"coke"}, lambda, rl);
    EXPECT_NEAR(b.total, b.caption_nll + b.cls_penalty + rl[0] + rl[1] + rl[2], 1e-9);
    const bool has_brand =
        std::find(b.decoded.begin(), b.decoded.end(), "coke") != b.decoded.end();
    EXPECT_EQ(b.cls_penalty, has_brand ? 0.0 : lambda);
  }
}

TEST(CaptionLossTest, RejectsMalformedInput) {
  std::vector<std::string> vocab = {"a", "b"};
  std::vector<std::vector<double>> bad_sum = {{0.5, 0.6}};
  std::vector<std::vector<double>> ok = {{0.5, 0.5}};
  std::vector<int> t0 = {0}, t9 = {9}, two = {0, 1};
  EXPECT_THROW(CaptionLoss(bad_sum, t0, vocab, {}, 1.0), Error);
  EXPECT_THROW(CaptionLoss(ok, t9, vocab, {}, 1.0), Error);
  EXPECT_THROW(CaptionLoss(ok, two, vocab, {}, 1.0), Error);
  EXPECT_THROW(CaptionLoss(ok, t0, vocab, {}, -1.0), Error);
}

}  // namespace
}  // namespace clause_eval
