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

#ifndef CLAUSE_EVAL_SYNONYMS_H_
#define CLAUSE_EVAL_SYNONYMS_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

namespace clause_eval {

// Replacement relations between subject/object lemmas.
//
// A bidirectional pair (ad, advertisement) means the words are
// interchangeable. A unidirectional pair (man, guy) means a reference "man"
// may be rendered as "guy" by a generated caption, but a reference "guy" does
// not license "man". The match relation is the reflexive-transitive closure
// of the directed replacement graph built from both kinds of pair.
class SynonymLexicon {
 public:
  // Both throw Error on a self-pair or a malformed lemma.
  void AddBidirectional(std::string_view a, std::string_view b);
  void AddUnidirectional(std::string_view specific, std::string_view general);

  // True iff `reference` can be replaced by `generated`, i.e. `generated` is
  // reachable from `reference` in the replacement graph.
  bool Reaches(std::string_view reference, std::string_view generated) const;

  const std::set<std::pair<std::string, std::string>> &bidirectional() const {
    return bidirectional_;
  }
  const std::set<std::pair<std::string, std::string>> &unidirectional() const {
    return unidirectional_;
  }

  bool empty() const { return bidirectional_.empty() && unidirectional_.empty(); }

  bool operator==(const SynonymLexicon &other) const {
    return bidirectional_ == other.bidirectional_ &&
           unidirectional_ == other.unidirectional_;
  }

 private:
  void AddEdge(const std::string &from, const std::string &to);

  // Bidirectional pairs are stored with first < second.
  std::set<std::pair<std::string, std::string>> bidirectional_;
  std::set<std::pair<std::string, std::string>> unidirectional_;
  std::map<std::string, std::set<std::string>, std::less<>> edges_;
};

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_SYNONYMS_H_
