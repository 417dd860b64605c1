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

// Deterministic synthetic evaluation bundle. Captions are rendered from
// known triples with a template the default lexicon parses, so tests can
// recount metrics from the intended triples without going through the
// extractor.

#ifndef CLAUSE_EVAL_TESTS_SUPPORT_SYNTHETIC_H_
#define CLAUSE_EVAL_TESTS_SUPPORT_SYNTHETIC_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "clause_eval/types.h"

namespace clause_eval::testing {

struct SyntheticAnnotation {
  std::string annotator_id;
  SpoTriple triple;
  std::string caption;
  std::array<int, 3> votes{};  // r1, r2, r3
};

struct SyntheticCandidate {
  SpoTriple triple;  // what the caption was rendered from
  std::string caption;
  double score = 0.0;
};

struct SyntheticImage {
  std::string image_id;
  std::string brand;
  std::vector<SyntheticAnnotation> annotations;
  std::vector<SyntheticCandidate> candidates;  // scores non-increasing
  std::array<std::array<double, 5>, 3> logits{};
};

struct SyntheticBundle {
  std::vector<SyntheticImage> images;
  // Raw lexicon pairs, specific -> general for the one-way ones.
  std::vector<std::pair<std::string, std::string>> bidirectional;
  std::vector<std::pair<std::string, std::string>> unidirectional;
};

SyntheticBundle MakeSyntheticBundle(int num_images = 200, uint32_t seed = 2018);

// Renders a caption the default lexicon extracts back into `triple`.
std::string RenderCaption(const SpoTriple &triple, const std::string &brand,
                          const std::string &place);

// Writes captions.jsonl, triples.jsonl, predictions.jsonl, ratings.csv,
// rating_predictions.jsonl and synonyms.tsv into `dir`.
void WriteSyntheticBundle(const SyntheticBundle &bundle,
                          const std::filesystem::path &dir);

}  // namespace clause_eval::testing

#endif  // CLAUSE_EVAL_TESTS_SUPPORT_SYNTHETIC_H_
