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

#include "clause_eval/synonyms.h"

#include <deque>

#include "clause_eval/types.h"

namespace clause_eval {

namespace {

std::string Normalize(std::string_view word) {
  std::string w = ToLower(Trim(word));
  if (!IsNormalizedLemma(w)) {
    throw Error("malformed synonym '" + std::string(word) + "'");
  }
  return w;
}

}  // namespace

void SynonymLexicon::AddBidirectional(std::string_view a, std::string_view b) {
  std::string x = Normalize(a), y = Normalize(b);
  if (x == y) throw Error("synonym pair of '" + x + "' with itself");
  AddEdge(x, y);
  AddEdge(y, x);
  if (y < x) std::swap(x, y);
  bidirectional_.emplace(std::move(x), std::move(y));
}

void SynonymLexicon::AddUnidirectional(std::string_view specific,
                                       std::string_view general) {
  std::string from = Normalize(specific), to = Normalize(general);
  if (from == to) throw Error("synonym pair of '" + from + "' with itself");
  AddEdge(from, to);
  unidirectional_.emplace(std::move(from), std::move(to));
}

void SynonymLexicon::AddEdge(const std::string &from, const std::string &to) {
  edges_[from].insert(to);
}

bool SynonymLexicon::Reaches(std::string_view reference,
                             std::string_view generated) const {
  if (reference == generated) return true;
  // Breadth-first search; tables are small.
  std::set<std::string_view> seen = {reference};
  std::deque<std::string_view> queue = {reference};
  while (!queue.empty()) {
    auto it = edges_.find(queue.front());
    queue.pop_front();
    if (it == edges_.end()) continue;
    for (const std::string &next : it->second) {
      if (next == generated) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

}  // namespace clause_eval
