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

#include "clause_eval/text_metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace clause_eval {

NgramProfile::NgramProfile(const Tokens &tokens) : length_(tokens.size()) {
  for (int n = 1; n <= kBleuOrder; ++n) {
    for (size_t i = 0; i + n <= tokens.size(); ++i) {
      ++counts_[n - 1][std::vector<std::string>(tokens.begin() + i,
                                                tokens.begin() + i + n)];
    }
  }
}

int NgramProfile::Count(std::span<const std::string> ngram) const {
  if (ngram.empty() || ngram.size() > kBleuOrder) return 0;
  const auto &order = counts_[ngram.size() - 1];
  auto it = order.find(std::vector<std::string>(ngram.begin(), ngram.end()));
  return it == order.end() ? 0 : it->second;
}

const std::map<std::vector<std::string>, int> &NgramProfile::Order(int n) const {
  if (n < 1 || n > kBleuOrder) throw Error("n-gram order must be in 1..4");
  return counts_[n - 1];
}

int NgramProfile::Total(int n) const {
  if (n < 1 || n > kBleuOrder) throw Error("n-gram order must be in 1..4");
  return length_ >= static_cast<size_t>(n) ? static_cast<int>(length_ - n + 1) : 0;
}

namespace {

// Clipped matches for every order at once.
void ClippedCounts(const Tokens &candidate, std::span<const Tokens> references,
                   std::array<long, kBleuOrder> *matches,
                   std::array<long, kBleuOrder> *totals) {
  NgramProfile cand(candidate);
  std::vector<NgramProfile> refs;
  refs.reserve(references.size());
  for (const Tokens &r : references) refs.emplace_back(r);
  for (int n = 1; n <= kBleuOrder; ++n) {
    long clipped = 0;
    for (const auto &[gram, count] : cand.Order(n)) {
      int max_ref = 0;
      for (const NgramProfile &r : refs) max_ref = std::max(max_ref, r.Count(gram));
      clipped += std::min(count, max_ref);
    }
    (*matches)[n - 1] = clipped;
    (*totals)[n - 1] = cand.Total(n);
  }
}

}  // namespace

Rational ModifiedPrecision(const Tokens &candidate,
                           std::span<const Tokens> references, int n) {
  if (n < 1 || n > kBleuOrder) throw Error("n-gram order must be in 1..4");
  std::array<long, kBleuOrder> matches{}, totals{};
  ClippedCounts(candidate, references, &matches, &totals);
  return {matches[n - 1], totals[n - 1]};
}

size_t EffectiveReferenceLength(size_t candidate_length,
                                std::span<const Tokens> references) {
  size_t best = 0;
  long best_diff = -1;
  for (const Tokens &r : references) {
    long diff = std::labs(static_cast<long>(r.size()) -
                          static_cast<long>(candidate_length));
    if (best_diff < 0 || diff < best_diff || (diff == best_diff && r.size() < best)) {
      best = r.size();
      best_diff = diff;
    }
  }
  return best;
}

BleuStats &BleuStats::operator+=(const BleuStats &other) {
  for (int n = 0; n < kBleuOrder; ++n) {
    matches[n] += other.matches[n];
    totals[n] += other.totals[n];
  }
  candidate_length += other.candidate_length;
  reference_length += other.reference_length;
  return *this;
}

double BleuStats::Score() const {
  if (candidate_length == 0) return 0.0;
  double log_precision = 0.0;
  for (int n = 0; n < kBleuOrder; ++n) {
    if (matches[n] == 0 || totals[n] == 0) return 0.0;
    log_precision += std::log(static_cast<double>(matches[n]) / totals[n]);
  }
  double log_bp = 0.0;
  if (candidate_length < reference_length) {
    log_bp = 1.0 - static_cast<double>(reference_length) / candidate_length;
  }
  return std::exp(log_bp + log_precision / kBleuOrder);
}

BleuStats SegmentStats(const Tokens &candidate,
                       std::span<const Tokens> references) {
  if (candidate.empty()) throw Error("BLEU: empty candidate");
  if (references.empty()) throw Error("BLEU: no references");
  BleuStats stats;
  ClippedCounts(candidate, references, &stats.matches, &stats.totals);
  stats.candidate_length = static_cast<long>(candidate.size());
  stats.reference_length =
      static_cast<long>(EffectiveReferenceLength(candidate.size(), references));
  return stats;
}

double Bleu4Sentence(const Tokens &candidate, std::span<const Tokens> references) {
  return SegmentStats(candidate, references).Score();
}

double Bleu4Corpus(std::span<const BleuSegment> segments) {
  if (segments.empty()) throw Error("BLEU: empty corpus");
  BleuStats total;
  for (const BleuSegment &s : segments) total += SegmentStats(s.candidate, s.references);
  return total.Score();
}

ScaReport SentenceClassificationAccuracy(
    std::span<const LabeledCaption> captions, const BrandLexicon &brands) {
  if (captions.empty()) throw Error("SCA: no captions");
  ScaReport report;
  size_t correct = 0;
  for (const LabeledCaption &c : captions) {
    if (!brands.HasClass(c.brand_class)) {
      throw Error("SCA: image '" + c.image_id + "' has unknown brand class '" +
                  c.brand_class + "'");
    }
    const auto &tokens = brands.Tokens(c.brand_class);
    bool hit = std::any_of(c.tokens.begin(), c.tokens.end(),
                           [&](const std::string &t) { return tokens.contains(t); });
    ClassAccuracy &cls = report.per_class[c.brand_class];
    ++cls.total;
    cls.correct += hit;
    correct += hit;
  }
  report.overall = static_cast<double>(correct) / captions.size();
  double sum = 0.0;
  for (const auto &[name, cls] : report.per_class) sum += cls.accuracy();
  report.mean = sum / report.per_class.size();
  return report;
}

}  // namespace clause_eval
