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

#include "clause_eval/logging.h"

#include <cstdlib>
#include <string_view>

#include <spdlog/sinks/stdout_sinks.h>

namespace clause_eval {

namespace {

spdlog::level::level_enum LevelFromEnv() {
  const char *env = std::getenv("CLAUSE_EVAL_LOG");
  std::string_view level = env ? env : "warn";
  if (level == "error") return spdlog::level::err;
  if (level == "info") return spdlog::level::info;
  if (level == "debug") return spdlog::level::debug;
  return spdlog::level::warn;
}

}  // namespace

spdlog::logger &Log() {
  static std::shared_ptr<spdlog::logger> logger = [] {
    auto l = std::make_shared<spdlog::logger>(
        "clause-eval", std::make_shared<spdlog::sinks::stderr_sink_mt>());
    l->set_pattern("clause-eval: %l: %v");
    return l;
  }();
  logger->set_level(LevelFromEnv());
  return *logger;
}

}  // namespace clause_eval
