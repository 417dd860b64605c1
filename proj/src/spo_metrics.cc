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

#include "clause_eval/spo_metrics.h"

#include <algorithm>
#include <map>
#include <tuple>

namespace clause_eval {

namespace {

bool SynonymClause(const std::optional<std::string> &generated,
                   const std::optional<std::string> &reference,
                   const SynonymLexicon &lexicon) {
  return generated && reference && ClauseMatches(*generated, *reference, lexicon);
}

bool ExactClause(const std::optional<std::string> &generated,
                 const std::optional<std::string> &reference) {
  return generated && reference && *generated == *reference;
}

MatchVector MatchOne(const SpoTriple &generated, const SpoTriple &reference,
                     const SynonymLexicon &lexicon) {
  MatchVector v;
  v.subject = SynonymClause(generated.subject, reference.subject, lexicon);
  v.predicate = ExactClause(generated.predicate, reference.predicate);
  v.object = SynonymClause(generated.object, reference.object, lexicon);
  return v;
}

// Adds derived matching counts of `matches` into `counts`.
void Accumulate(const std::vector<ImageMatch> &matches,
                std::array<size_t, kNumMatchings> *counts) {
  for (const ImageMatch &m : matches) {
    DerivedMatchings d = DeriveMatchings(m.match);
    for (int n = 0; n < kNumMatchings; ++n) (*counts)[n] += d[n];
  }
}

bool ImageMatchLess(const ImageMatch &a, const ImageMatch &b) {
  return std::tie(a.image_id, a.annotator_id) < std::tie(b.image_id, b.annotator_id);
}

}  // namespace

DerivedMatchings DeriveMatchings(const MatchVector &v) {
  const bool s = v.subject, p = v.predicate, o = v.object;
  return {!p && !o && !s, o, s, o && s, p, p && o, p && s, p && o && s};
}

std::string_view MatchModeName(MatchMode mode) {
  return mode == MatchMode::kJoint ? "joint" : "clause";
}

std::optional<MatchMode> ParseMatchMode(std::string_view name) {
  if (name == "clause") return MatchMode::kClauseWise;
  if (name == "joint") return MatchMode::kJoint;
  return std::nullopt;
}

bool ClauseMatches(std::string_view generated, std::string_view reference,
                   const SynonymLexicon &lexicon) {
  return lexicon.Reaches(reference, generated);
}

MatchVector MatchTriple(const SpoTriple &generated,
                        std::span<const SpoTriple> references,
                        const SynonymLexicon &lexicon, MatchMode mode) {
  if (references.empty()) throw Error("no reference triples to match against");
  MatchVector result;
  if (mode == MatchMode::kClauseWise) {
    for (const SpoTriple &ref : references) {
      MatchVector v = MatchOne(generated, ref, lexicon);
      result.subject |= v.subject;
      result.predicate |= v.predicate;
      result.object |= v.object;
    }
    return result;
  }
  // Joint: best single reference, the first one on ties.
  int best = -1;
  for (const SpoTriple &ref : references) {
    MatchVector v = MatchOne(generated, ref, lexicon);
    if (v.count() > best) {
      best = v.count();
      result = v;
    }
  }
  return result;
}

CandidateChoice SelectCandidate(const CandidateSet &set,
                                std::span<const SpoTriple> references,
                                const SynonymLexicon &lexicon,
                                const ExtractionContext &context,
                                MatchMode mode) {
  if (set.candidates.empty()) {
    throw Error("no candidates for image '" + set.image_id + "'");
  }
  if (!context.lexicon || !context.brands) {
    throw Error("candidate selection needs an extraction lexicon and brands");
  }
  std::optional<CandidateChoice> best;
  for (size_t i = 0; i < set.candidates.size(); ++i) {
    CandidateChoice choice;
    choice.index = i;
    choice.caption = set.candidates[i].caption;
    choice.triple =
        ExtractSpoFromText(choice.caption, *context.lexicon, *context.brands);
    if (choice.triple) {
      choice.match = MatchTriple(*choice.triple, references, lexicon, mode);
    }
    if (!best) {
      best = std::move(choice);
      continue;
    }
    const int count = choice.match.count(), best_count = best->match.count();
    const double score = set.candidates[i].score;
    const double best_score = set.candidates[best->index].score;
    // Later candidates only win strictly, so equal scores keep the earlier one.
    if (count > best_count || (count == best_count && score > best_score)) {
      best = std::move(choice);
    }
  }
  return *best;
}

ClauseAccuracyReport ClauseAccuracies(std::vector<ImageMatch> matches) {
  if (matches.empty()) throw Error("no images to compute accuracies over");
  std::sort(matches.begin(), matches.end(), ImageMatchLess);
  std::array<size_t, kNumMatchings> counts{};
  Accumulate(matches, &counts);
  ClauseAccuracyReport report;
  report.n_images = matches.size();
  for (int n = 0; n < kNumMatchings; ++n) {
    report.accuracy[n] = static_cast<double>(counts[n]) / report.n_images;
  }
  report.per_image = std::move(matches);
  return report;
}

ClauseAccuracyReport LeaveOneOutBaseline(const TripleCorpus &triples,
                                         const SynonymLexicon &lexicon,
                                         MatchMode mode) {
  std::map<std::string, std::vector<ImageMatch>> by_annotator;
  std::vector<ImageMatch> all;
  std::vector<std::string> skipped;
  size_t n_images = 0;
  for (const auto &[image_id, records] : triples.by_image) {
    if (records.size() < 2) {
      skipped.push_back(image_id);
      continue;
    }
    ++n_images;
    for (size_t held_out = 0; held_out < records.size(); ++held_out) {
      std::vector<SpoTriple> others;
      for (size_t j = 0; j < records.size(); ++j) {
        if (j != held_out) others.push_back(records[j].triple);
      }
      ImageMatch m{image_id, records[held_out].annotator_id,
                   MatchTriple(records[held_out].triple, others, lexicon, mode)};
      by_annotator[m.annotator_id].push_back(m);
      all.push_back(std::move(m));
    }
  }
  if (by_annotator.empty()) {
    throw Error("no image has two or more annotators");
  }

  ClauseAccuracyReport report;
  for (const auto &[annotator, matches] : by_annotator) {
    std::array<size_t, kNumMatchings> counts{};
    Accumulate(matches, &counts);
    for (int n = 0; n < kNumMatchings; ++n) {
      report.accuracy[n] += static_cast<double>(counts[n]) / matches.size();
    }
  }
  for (double &a : report.accuracy) a /= by_annotator.size();
  std::sort(all.begin(), all.end(), ImageMatchLess);
  report.n_images = n_images;
  report.per_image = std::move(all);
  report.skipped_images = std::move(skipped);
  return report;
}

SpoEvaluation EvaluateSpo(const PredictionCorpus &predictions,
                          const TripleCorpus &triples,
                          const SynonymLexicon &lexicon,
                          const ExtractionContext &context, MatchMode mode) {
  SpoEvaluation eval;
  std::vector<ImageMatch> matches;
  // by_image is ordered, so choices line up with the sorted report.
  for (const auto &[image_id, set] : predictions.by_image) {
    std::vector<SpoTriple> references = triples.TriplesOf(image_id);
    if (references.empty()) {
      throw Error("no SPO triples for predicted image '" + image_id + "'");
    }
    CandidateChoice choice = SelectCandidate(set, references, lexicon, context, mode);
    matches.push_back({image_id, "", choice.match});
    eval.choices.push_back(std::move(choice));
  }
  eval.report = ClauseAccuracies(std::move(matches));
  return eval;
}

}  // namespace clause_eval
