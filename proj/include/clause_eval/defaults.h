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

#ifndef CLAUSE_EVAL_DEFAULTS_H_
#define CLAUSE_EVAL_DEFAULTS_H_

#include <string_view>

#include "clause_eval/extractor.h"
#include "clause_eval/synonyms.h"
#include "clause_eval/types.h"

namespace clause_eval {

// Contents of data/lexicon.tsv, data/brands.tsv and data/synonyms.tsv,
// compiled into the library.
std::string_view DefaultLexiconText();
std::string_view DefaultBrandsText();
std::string_view DefaultSynonymsText();

// Parsed once on first use.
const ExtractionLexicon &DefaultExtractionLexicon();
const BrandLexicon &DefaultBrands();
const SynonymLexicon &DefaultSynonyms();

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_DEFAULTS_H_
