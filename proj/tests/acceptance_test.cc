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

// Release acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "clause_eval/cli.h"
#include "clause_eval/corpus.h"
#include "clause_eval/defaults.h"
#include "clause_eval/extractor.h"
#include "clause_eval/ratings.h"
#include "clause_eval/spo_metrics.h"
#include "clause_eval/text_metrics.h"
#include "support/oracle.h"
#include "support/synthetic.h"
#include "support/temp_dir.h"

namespace clause_eval {
namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void Expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

Check BleuWorkedExample() {
  Check c;
  Tokens cand = Tokenize("a male hand holds a can of cocacola above a tiled floor.");
  std::vector<Tokens> refs = {
      Tokenize("A female hand holds a can of cocacola above a tiled floor.")};
  const int reps = 1000;
  double score = 0;
  auto start = Clock::now();
  for (int i = 0; i < reps; ++i) score = Bleu4Sentence(cand, refs);
  const double per_call_ms = Seconds(start) * 1000 / reps;
  c.Expect(std::fabs(score - 0.827) <= 0.001, "score " + std::to_string(score));
  c.Expect(per_call_ms < 1.0, "took " + std::to_string(per_call_ms) + " ms");
  c.detail += (c.detail.empty() ? "" : "; ") + std::string("bleu4=") +
              std::to_string(score);
  return c;
}

Check SoftTargetConstruction() {
  Check c;
  RatingDistribution d = SoftTargets({"img", RatingKind::kR1, {4, 4, 4, 4, 3}, {}});
  c.Expect(d.p == RatingVector{0, 0, 0, 0.2, 0.8}, "wrong distribution");
  return c;
}

Check SpoExtraction() {
  Check c;
  std::optional<SpoTriple> t = ExtractSpoFromText(
      "A hand is holding a Coca Cola can in a car.", DefaultExtractionLexicon(),
      DefaultBrands());
  c.Expect(t == SpoTriple{"hand", "hold", "can"},
           "got " + (t ? ToString(*t) : std::string("nothing")));
  return c;
}

Check DerivedMatchingOracle() {
  Check c;
  for (int bits = 0; bits < 8; ++bits) {
    const bool s = bits & 1, p = bits & 2, o = bits & 4;
    c.Expect(std::ranges::equal(DeriveMatchings({s, p, o}), testing::OracleDerived({s, p, o})),
             "truth table row " + std::to_string(bits));
  }
  testing::SyntheticBundle bundle = testing::MakeSyntheticBundle(200);
  testing::TempDir dir;
  testing::WriteSyntheticBundle(bundle, dir.path());
  SpoEvaluation eval = EvaluateSpo(
      LoadPredictions(dir / "predictions.jsonl"), LoadTriples(dir / "triples.jsonl"),
      LoadSynonyms(dir / "synonyms.tsv"), {&DefaultExtractionLexicon(), &DefaultBrands()});
  std::array<double, 8> expected = testing::OracleAccuracies(bundle);
  const auto &a = eval.report.accuracy;
  for (int n = 0; n < 8; ++n) {
    c.Expect(a[n] == expected[n], "a" + std::to_string(n) + " differs from recount");
  }
  const double gap = a[0] - (1 - (a[1] + a[2] + a[4] - a[3] - a[5] - a[6] + a[7]));
  c.Expect(std::fabs(gap) <= 1e-12, "inclusion-exclusion gap " + std::to_string(gap));
  c.Expect(eval.report.n_images == 200, "n_images");
  return c;
}

template <typename Loss>
double WorstGradientError(std::mt19937 &rng, Loss loss) {
  std::uniform_real_distribution<double> u(-4, 4);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    RatingVector x;
    for (double &v : x) v = u(rng);
    const int label = static_cast<int>(rng() % 5);
    auto [value, grad] = loss(x, label);
    (void)value;
    RatingVector numeric;
    for (int i = 0; i < 5; ++i) {
      RatingVector up = x, down = x;
      up[i] += 1e-5;
      down[i] -= 1e-5;
      numeric[i] = (loss(up, label).first - loss(down, label).first) / 2e-5;
    }
    double diff = 0, a = 0, b = 0;
    for (int i = 0; i < 5; ++i) {
      diff += (grad[i] - numeric[i]) * (grad[i] - numeric[i]);
      a += grad[i] * grad[i];
      b += numeric[i] * numeric[i];
    }
    worst = std::max(worst, std::sqrt(diff) / std::max({std::sqrt(a), std::sqrt(b), 1e-12}));
  }
  return worst;
}

Check GradientAudit() {
  Check c;
  std::mt19937 rng(5);
  // Soft targets from random five-vote sets.
  const double sigmoid = WorstGradientError(rng, [](const RatingVector &x, int label) {
    std::vector<int> votes = {label, label, (label + 1) % 5, label, (label + 3) % 5};
    SigmoidCrossEntropy l =
        SigmoidCrossEntropyLoss(x, SoftTargets({"i", RatingKind::kR1, votes, {}}));
    return std::make_pair(l.total, l.gradient);
  });
  const double softmax = WorstGradientError(rng, [](const RatingVector &x, int label) {
    SoftmaxCrossEntropy l = SoftmaxCrossEntropyLoss(x, {label, false, false});
    return std::make_pair(l.loss, l.gradient);
  });
  c.Expect(sigmoid <= 1e-6, "sigmoid relative error " + std::to_string(sigmoid));
  c.Expect(softmax <= 1e-6, "softmax relative error " + std::to_string(softmax));

  // Targets defined as sigma(rho) so the stationarity holds bit for bit;
  // they sum to 1 up to rounding.
  const RatingVector logits = {std::log(0.4 / 0.6), std::log(0.3 / 0.7), std::log(0.15 / 0.85),
                               std::log(0.1 / 0.9), std::log(0.05 / 0.95)};
  RatingDistribution g;
  for (int i = 0; i < 5; ++i) g.p[i] = Sigmoid(logits[i]);
  RatingVector grad = SigmoidCrossEntropyLoss(logits, g).gradient;
  c.Expect(grad == RatingVector{}, "gradient not exactly zero at sigma(rho) = g");
  return c;
}

Check HistogramMachinery() {
  Check c;
  // Known deviations: 5 at distance 0, 3 at 1, 1 at 2, 1 at 4.
  std::vector<std::pair<int, int>> pairs = {{2, 2}, {2, 2}, {0, 0}, {4, 4}, {3, 3},
                                            {1, 2}, {3, 2}, {4, 3}, {0, 2}, {4, 0}};
  DeviationHistogram h = L2DeviationHistogram(pairs);
  const std::array<double, 5> bins = {0.5, 0.3, 0.1, 0.0, 0.1};
  const double mean = (3 * 1 + 1 * 2 + 1 * 4) / 10.0;
  const double second = (3 * 1 + 1 * 4 + 1 * 16) / 10.0;
  const double stddev = std::sqrt(second - mean * mean);
  for (int d = 0; d < 5; ++d) {
    c.Expect(std::fabs(h.fraction[d] - bins[d]) <= 1e-9, "bin " + std::to_string(d));
  }
  c.Expect(std::fabs(h.mean - mean) <= 1e-9, "mean");
  c.Expect(std::fabs(h.stddev - stddev) <= 1e-9, "stddev");

  std::vector<RatingVotes> groups = {{"i", RatingKind::kR1, {4, 4, 4, 4, 3}, {}}};
  DeviationHistogram a = AnnotatorDeviationHistogram(groups);
  c.Expect(a.fraction[0] == 0.8 && a.fraction[1] == 0.2, "80/20 bins");
  c.Expect(a.mean == 0.2, "80/20 mean " + std::to_string(a.mean));
  return c;
}

Check SynonymSemantics() {
  Check c;
  SynonymLexicon lex;
  lex.AddUnidirectional("man", "guy");
  lex.AddUnidirectional("boy", "guy");
  lex.AddBidirectional("ad", "advertisement");
  c.Expect(ClauseMatches("guy", "man", lex), "(guy, man)");
  c.Expect(ClauseMatches("guy", "boy", lex), "(guy, boy)");
  c.Expect(ClauseMatches("ad", "advertisement", lex), "(ad, advertisement)");
  c.Expect(ClauseMatches("advertisement", "ad", lex), "(advertisement, ad)");
  c.Expect(!ClauseMatches("man", "guy", lex), "(man, guy)");
  c.Expect(!ClauseMatches("man", "boy", lex), "(man, boy)");
  return c;
}

Check LeaveOneOut() {
  Check c;
  // a=(man,hold,can) b=(guy,hold,bottle) c=(man,drink,can), man->guy.
  //   a vs {b,c} -> (T,T,T); b vs {a,c} -> (T,T,F); c vs {a,b} -> (T,F,T)
  TripleCorpus toy;
  toy.by_image["i"] = {{"i", "a", {"man", "hold", "can"}},
                       {"i", "b", {"guy", "hold", "bottle"}},
                       {"i", "c", {"man", "drink", "can"}}};
  SynonymLexicon lex;
  lex.AddUnidirectional("man", "guy");
  ClauseAccuracyReport r = LeaveOneOutBaseline(toy, lex);
  //                                  a0 a1   a2 a3   a4   a5   a6   a7
  const std::array<double, 8> hand = {0, 2 / 3., 1, 2 / 3., 2 / 3., 1 / 3., 2 / 3., 1 / 3.};
  for (int n = 0; n < 8; ++n) {
    // Per annotator every a_n is 0 or 1, so the average is k/3 exactly.
    c.Expect(r.accuracy[n] == hand[n], "a" + std::to_string(n) + "=" +
                                           std::to_string(r.accuracy[n]));
  }
  TripleCorpus same;
  for (const char *ann : {"a", "b", "c", "d", "e"}) {
    same.by_image["i"].push_back({"i", ann, {"hand", "hold", "can"}});
  }
  ClauseAccuracyReport s = LeaveOneOutBaseline(same, lex);
  c.Expect(s.accuracy[7] == 1.0 && s.accuracy[0] == 0.0, "identical triples");
  return c;
}

Check BeamSelection() {
  Check c;
  std::vector<SpoTriple> refs = {{"hand", "hold", "can"}};
  ExtractionContext ctx{&DefaultExtractionLexicon(), &DefaultBrands()};
  SynonymLexicon lex;
  CandidateSet counts{"i",
                      {{"a hand opens a bottle", -0.1},   // 1 clause
                       {"a hand holds a can", -0.2},      // 3 clauses
                       {"a hand holds a bottle", -0.3}}};  // 2 clauses
  CandidateChoice pick = SelectCandidate(counts, refs, lex, ctx);
  c.Expect(pick.index == 1 && pick.match.count() == 3,
           "picked candidate " + std::to_string(pick.index));
  CandidateSet ties{"i", {{"a man holds a can", 0.9}, {"a hand opens a can", 0.5}}};
  c.Expect(SelectCandidate(ties, refs, lex, ctx).index == 0, "score tie-break");
  CandidateSet later{"i", {{"a man holds a can", 0.9}, {"a hand opens a can", 0.9},
                           {"a hand holds a cup", 0.95}}};
  // Scores must be non-increasing in a beam; equal scores fall back to order.
  later.candidates[2].score = 0.9;
  c.Expect(SelectCandidate(later, refs, lex, ctx).index == 0, "position tie-break");
  return c;
}

Check GoldenDeterminism(Clock::time_point suite_start) {
  Check c;
  testing::TempDir dir;
  testing::WriteSyntheticBundle(testing::MakeSyntheticBundle(200), dir.path());
  auto f = [&](const char *name) { return (dir / name).string(); };
  std::vector<std::string> args = {"eval-spo", "--predictions", f("predictions.jsonl"),
                                   "--triples", f("triples.jsonl"), "--synonyms",
                                   f("synonyms.tsv"), "-o", "-"};
  std::string first, second, err;
  c.Expect(testing::RunTool(args, &first, &err) == kExitOk, "first run failed: " + err);
  c.Expect(testing::RunTool(args, &second, &err) == kExitOk, "second run failed: " + err);
  c.Expect(!first.empty() && first == second, "reports differ");
  const std::filesystem::path golden =
      std::filesystem::path(CLAUSE_EVAL_SOURCE_DIR) / "tests/data/golden/report.json";
  c.Expect(first == testing::ReadFile(golden), "differs from checked-in golden report");
  const double elapsed = Seconds(suite_start);
  c.Expect(elapsed < 10.0, "suite took " + std::to_string(elapsed) + " s");
  return c;
}

}  // namespace
}  // namespace clause_eval

int main() {
  using namespace clause_eval;
  const auto start = Clock::now();
  struct Criterion {
    const char *name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"BLEU-4 worked example 0.827 +- 0.001 under 1 ms", BleuWorkedExample},
      {"soft targets of [4,4,4,4,3]", SoftTargetConstruction},
      {"SPO extraction (hand, hold, can)", SpoExtraction},
      {"derived matchings and 200-image recount", DerivedMatchingOracle},
      {"gradient audit against finite differences", GradientAudit},
      {"deviation histogram statistics", HistogramMachinery},
      {"synonym semantics, 6 assertions", SynonymSemantics},
      {"leave-one-out baseline", LeaveOneOut},
      {"beam candidate selection", BeamSelection},
      {"golden determinism of eval-spo", [&] { return GoldenDeterminism(start); }},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].run();
    } catch (const std::exception &e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    failed += !c.ok;
    std::printf("criterion %zu: %s: %s%s%s\n", i + 1, c.ok ? "PASS" : "FAIL",
                criteria[i].name, c.detail.empty() ? "" : " | ", c.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
