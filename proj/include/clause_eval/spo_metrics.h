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

// Clause-focused caption accuracies.
//
// A generated caption's triple is compared with the reference triples of its
// image, giving three clause matches (m_s, m_p, m_o). The eight derived
// matchings are
//
//   m0 = !m_p && !m_o && !m_s    m4 = m_p
//   m1 = m_o                     m5 = m_p && m_o
//   m2 = m_s                     m6 = m_p && m_s
//   m3 = m_o && m_s              m7 = m_p && m_o && m_s
//
// and accuracy a_n is the fraction of evaluated images where m_n holds. For
// a0 lower is better.

#ifndef CLAUSE_EVAL_SPO_METRICS_H_
#define CLAUSE_EVAL_SPO_METRICS_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clause_eval/corpus.h"
#include "clause_eval/extractor.h"
#include "clause_eval/synonyms.h"
#include "clause_eval/types.h"

namespace clause_eval {

constexpr int kNumMatchings = 8;

struct MatchVector {
  bool subject = false;
  bool predicate = false;
  bool object = false;

  int count() const { return subject + predicate + object; }
  bool operator==(const MatchVector &) const = default;
};

using DerivedMatchings = std::array<bool, kNumMatchings>;

DerivedMatchings DeriveMatchings(const MatchVector &v);

enum class MatchMode {
  // Each clause may be matched by a different reference triple.
  kClauseWise,
  // All clauses are taken from the single best-matching reference triple.
  kJoint,
};

std::string_view MatchModeName(MatchMode mode);
std::optional<MatchMode> ParseMatchMode(std::string_view name);

// Subject/object clause match: true iff `reference` reaches `generated`
// through the synonym lexicon.
bool ClauseMatches(std::string_view generated, std::string_view reference,
                   const SynonymLexicon &lexicon);

// Throws Error on an empty reference list. Predicates match by equality
// only; an absent clause on either side never matches.
MatchVector MatchTriple(const SpoTriple &generated,
                        std::span<const SpoTriple> references,
                        const SynonymLexicon &lexicon,
                        MatchMode mode = MatchMode::kClauseWise);

struct ExtractionContext {
  const ExtractionLexicon *lexicon = nullptr;
  const BrandLexicon *brands = nullptr;
};

struct CandidateChoice {
  size_t index = 0;
  std::string caption;
  std::optional<SpoTriple> triple;
  MatchVector match;
};

// Picks the beam candidate matching the most clauses; ties go to the higher
// score, then to the earlier position. Throws Error on an empty set.
CandidateChoice SelectCandidate(const CandidateSet &set,
                                std::span<const SpoTriple> references,
                                const SynonymLexicon &lexicon,
                                const ExtractionContext &context,
                                MatchMode mode = MatchMode::kClauseWise);

struct ImageMatch {
  std::string image_id;
  // Empty for caption evaluation; the held-out annotator for baselines.
  std::string annotator_id;
  MatchVector match;

  bool operator==(const ImageMatch &) const = default;
};

struct ClauseAccuracyReport {
  std::array<double, kNumMatchings> accuracy{};
  size_t n_images = 0;
  // Sorted by (image_id, annotator_id).
  std::vector<ImageMatch> per_image;
  // Images left out of a baseline because they have a single annotator.
  std::vector<std::string> skipped_images;
};

// Throws Error on empty input. Output does not depend on input order.
ClauseAccuracyReport ClauseAccuracies(std::vector<ImageMatch> matches);

// Scores every annotator's triple against the remaining annotators of the
// same image, builds one accuracy report per annotator id and averages the
// reports element-wise. Images with a single annotator are skipped and
// listed; it is an error if no image remains.
ClauseAccuracyReport LeaveOneOutBaseline(const TripleCorpus &triples,
                                         const SynonymLexicon &lexicon,
                                         MatchMode mode = MatchMode::kClauseWise);

// Evaluates predicted captions: for each image the candidate is selected,
// extracted and matched. Every predicted image must have triples.
struct SpoEvaluation {
  ClauseAccuracyReport report;
  std::vector<CandidateChoice> choices;  // parallel to report.per_image
};

SpoEvaluation EvaluateSpo(const PredictionCorpus &predictions,
                          const TripleCorpus &triples,
                          const SynonymLexicon &lexicon,
                          const ExtractionContext &context,
                          MatchMode mode = MatchMode::kClauseWise);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_SPO_METRICS_H_
