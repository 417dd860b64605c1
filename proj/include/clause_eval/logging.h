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

#ifndef CLAUSE_EVAL_LOGGING_H_
#define CLAUSE_EVAL_LOGGING_H_

#include <memory>

#include <spdlog/spdlog.h>

namespace clause_eval {

// Diagnostics logger writing to stderr. The level comes from CLAUSE_EVAL_LOG
// (error, warn, info, debug; default warn) and is re-read on every call.
spdlog::logger &Log();

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_LOGGING_H_
