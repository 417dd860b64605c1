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

#include "clause_eval/defaults.h"

#include <sstream>
#include <string>

#include "clause_eval/corpus.h"

namespace clause_eval {

const ExtractionLexicon &DefaultExtractionLexicon() {
  static const ExtractionLexicon lexicon = [] {
    std::istringstream in{std::string(DefaultLexiconText())};
    return LoadExtractionLexicon(in, "<default lexicon>");
  }();
  return lexicon;
}

const BrandLexicon &DefaultBrands() {
  static const BrandLexicon brands = [] {
    std::istringstream in{std::string(DefaultBrandsText())};
    return LoadBrands(in, "<default brands>");
  }();
  return brands;
}

const SynonymLexicon &DefaultSynonyms() {
  static const SynonymLexicon synonyms = [] {
    std::istringstream in{std::string(DefaultSynonymsText())};
    return LoadSynonyms(in, "<default synonyms>");
  }();
  return synonyms;
}

}  // namespace clause_eval
