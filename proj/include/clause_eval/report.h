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

// report.json assembly. Reports are JSON objects with sorted keys and every
// real number rounded to 6 significant digits, so identical inputs always
// serialize to identical bytes.
//
// Top-level sections:
//   tool          {"name", "version"}
//   config        one object per command that contributed
//   inputs        role -> {"file": basename, "sha256": hex digest}
//   validation    findings of the bundle check
//   spo           a0..a7, n_images, per_image (eval-spo)
//   gt_baseline   a0..a7, n_images, per_image, skipped_images
//   ratings       r1, r2, r3 (eval-ratings)
//   text_metrics  bleu4, sca (eval-text)

#ifndef CLAUSE_EVAL_REPORT_H_
#define CLAUSE_EVAL_REPORT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "clause_eval/corpus.h"
#include "clause_eval/ratings.h"
#include "clause_eval/spo_metrics.h"
#include "clause_eval/text_metrics.h"
#include "json.hpp"

namespace clause_eval {

using Json = nlohmann::json;

inline constexpr std::string_view kToolName = "clause-eval";
inline constexpr std::string_view kToolVersion = "0.1.0";

// Rounds to `digits` significant decimal digits. Non-finite values pass
// through.
double RoundSignificant(double value, int digits = 6);

// Rounded number, or null for non-finite values.
Json Number(double value);

// Lowercase hex SHA-256 of the file contents. Throws Error on I/O failure.
std::string Sha256File(const std::filesystem::path &path);
std::string Sha256(std::string_view data);

// {"tool": ...} skeleton.
Json NewReport();

// Records `path` under inputs.<role>.
void AddInput(Json *report, const std::string &role,
              const std::filesystem::path &path);

Json FindingsToJson(const std::vector<Finding> &findings);

// a0..a7, n_images and the per-image table; baseline reports also carry
// skipped_images.
Json ClauseReportToJson(const ClauseAccuracyReport &report, bool baseline);

// Adds extraction details (chosen caption, candidate index, triple) to
// the per-image rows of an eval-spo report.
Json SpoEvaluationToJson(const SpoEvaluation &eval, MatchMode mode);

Json TripleToJson(const std::optional<SpoTriple> &triple);
Json HistogramToJson(const DeviationHistogram &h);
Json ScaToJson(const ScaReport &sca);

// Recursive union of two reports. Objects merge key by key; any other pair
// of differing values under the same key is a conflict and throws Error.
Json MergeReports(const Json &a, const Json &b);

// Pretty-printed with two-space indentation and a trailing newline.
std::string Serialize(const Json &report);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_REPORT_H_
