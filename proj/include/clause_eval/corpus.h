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

#ifndef CLAUSE_EVAL_CORPUS_H_
#define CLAUSE_EVAL_CORPUS_H_

#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "clause_eval/synonyms.h"
#include "clause_eval/types.h"

namespace clause_eval {

// Input corpora. Every loader has a stream overload taking the name used in
// error messages, and a path overload that opens the file. Loaders throw
// ParseError (with line number) for malformed records and Error for I/O
// failures. Loaded corpora are immutable values.
//
// Maps are keyed by image_id; records inside one image are ordered by
// annotator_id so iteration order never depends on file order.

struct CaptionCorpus {
  std::map<std::string, std::vector<CaptionRecord>> by_image;

  size_t num_records() const;
  size_t num_images() const { return by_image.size(); }
  // Number of images having exactly n captions, for every n seen.
  std::map<size_t, size_t> CaptionsPerImage() const;

  bool operator==(const CaptionCorpus &) const = default;
};

struct TripleCorpus {
  std::map<std::string, std::vector<TripleRecord>> by_image;

  size_t num_records() const;
  size_t num_images() const { return by_image.size(); }
  std::vector<SpoTriple> TriplesOf(const std::string &image_id) const;

  bool operator==(const TripleCorpus &) const = default;
};

struct RatingsCorpus {
  std::map<std::pair<std::string, RatingKind>, RatingVotes> groups;

  const RatingVotes *Find(const std::string &image_id, RatingKind kind) const;

  bool operator==(const RatingsCorpus &) const = default;
};

struct PredictionCorpus {
  std::map<std::string, CandidateSet> by_image;

  bool operator==(const PredictionCorpus &) const = default;
};

struct RatingPredictionCorpus {
  std::map<std::pair<std::string, RatingKind>, RatingPrediction> entries;

  bool operator==(const RatingPredictionCorpus &) const = default;
};

// One line of a word-probability fixture used for caption loss auditing.
struct WordProbabilityRecord {
  std::string image_id;
  std::vector<std::vector<double>> rows;
  std::vector<int> targets;
  std::string brand_class;
};

CaptionCorpus LoadCaptions(std::istream &in, const std::string &name);
CaptionCorpus LoadCaptions(const std::filesystem::path &path);
void WriteCaptions(const CaptionCorpus &corpus, std::ostream &out);

TripleCorpus LoadTriples(std::istream &in, const std::string &name);
TripleCorpus LoadTriples(const std::filesystem::path &path);
void WriteTriples(const TripleCorpus &corpus, std::ostream &out);

SynonymLexicon LoadSynonyms(std::istream &in, const std::string &name);
SynonymLexicon LoadSynonyms(const std::filesystem::path &path);
void WriteSynonyms(const SynonymLexicon &lexicon, std::ostream &out);

RatingsCorpus LoadRatings(std::istream &in, const std::string &name);
RatingsCorpus LoadRatings(const std::filesystem::path &path);
// Attaches adjudicated values to an already loaded ratings corpus. An
// adjudication for a group without votes is an error.
void LoadAdjudications(std::istream &in, const std::string &name,
                       RatingsCorpus *ratings);
void LoadAdjudications(const std::filesystem::path &path,
                       RatingsCorpus *ratings);
// Writes ratings.csv. Annotator ids are not retained by RatingVotes, so
// synthetic ids "a0", "a1", ... are written in vote order.
void WriteRatings(const RatingsCorpus &corpus, std::ostream &out);
void WriteAdjudications(const RatingsCorpus &corpus, std::ostream &out);

PredictionCorpus LoadPredictions(std::istream &in, const std::string &name,
                                 int beam_size = kDefaultBeamSize);
PredictionCorpus LoadPredictions(const std::filesystem::path &path,
                                 int beam_size = kDefaultBeamSize);
void WritePredictions(const PredictionCorpus &corpus, std::ostream &out);

RatingPredictionCorpus LoadRatingPredictions(std::istream &in,
                                             const std::string &name);
RatingPredictionCorpus LoadRatingPredictions(const std::filesystem::path &path);
void WriteRatingPredictions(const RatingPredictionCorpus &corpus,
                            std::ostream &out);

BrandLexicon LoadBrands(std::istream &in, const std::string &name);
BrandLexicon LoadBrands(const std::filesystem::path &path);
void WriteBrands(const BrandLexicon &brands, std::ostream &out);

std::vector<WordProbabilityRecord> LoadWordProbabilities(
    std::istream &in, const std::string &name);
std::vector<WordProbabilityRecord> LoadWordProbabilities(
    const std::filesystem::path &path);

// One word per line; blank lines are errors.
std::vector<std::string> LoadVocabulary(const std::filesystem::path &path);

// Cross-reference check over whatever corpora a command needs. Null members
// are not consulted.
struct Bundle {
  const CaptionCorpus *captions = nullptr;
  const TripleCorpus *triples = nullptr;
  const RatingsCorpus *ratings = nullptr;
  const PredictionCorpus *predictions = nullptr;
  const RatingPredictionCorpus *rating_predictions = nullptr;
  const BrandLexicon *brands = nullptr;
};

struct Finding {
  std::string code;
  std::string image_id;
  std::string message;

  bool operator==(const Finding &) const = default;
  auto operator<=>(const Finding &) const = default;
};

// Returns findings sorted by (code, image_id, message). Empty means every
// evaluation that uses the supplied corpora can run.
//
//   missing_triples        image has captions but no triples
//   missing_captions       image has triples but no captions
//   prediction_no_triples  caption prediction for an image without triples
//   prediction_no_captions caption prediction for an image without captions
//   ratings_no_captions    rating votes for an image without captions
//   rating_prediction_no_votes
//                          rating prediction without a vote group
//   unknown_brand_class    caption names a brand class missing from brands
//   no_brand_class         image with predictions whose brand class cannot
//                          be determined from captions and brands
std::vector<Finding> ValidateBundle(const Bundle &bundle);

// Brand class of every image: an explicit "brand_class" on any caption
// wins, otherwise the class whose tokens are mentioned by the most captions
// (ties go to the lexicographically smallest class). Images with neither
// are absent from the result.
std::map<std::string, std::string> ImageBrandClasses(
    const CaptionCorpus &captions, const BrandLexicon &brands);

}  // namespace clause_eval

#endif  // CLAUSE_EVAL_CORPUS_H_
