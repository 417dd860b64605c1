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

#ifndef CLAUSE_EVAL_CLI_H_
#define CLAUSE_EVAL_CLI_H_

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "clause_eval/spo_metrics.h"

namespace clause_eval {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

struct RunConfig {
  std::string command;
  // Input role ("captions", "triples", ...) -> path.
  std::map<std::string, std::filesystem::path> inputs;
  int beam_size = kDefaultBeamSize;
  MatchMode mode = MatchMode::kClauseWise;
  double cls_penalty = 1.0;
  // "-" or empty writes to standard output.
  std::filesystem::path output;
};

// Throws Error unless beam_size >= 1, cls_penalty >= 0 and every input
// exists.
void CheckRunConfig(const RunConfig &config);

// Entry point of the clause-eval tool. `args[0]` is the program name.
// Returns kExitOk, kExitFindings when the input bundle has cross-reference
// findings, or kExitError for usage, I/O and schema errors.
int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_CLI_H_
