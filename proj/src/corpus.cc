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

#include "clause_eval/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <tuple>

#include "clause_eval/extractor.h"
#include "json.hpp"

namespace clause_eval {

using json = nlohmann::json;

namespace {

std::ifstream OpenOrThrow(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

// Calls `fn(line_no, json)` for every non-blank line of a JSONL stream.
void ForEachJsonLine(std::istream &in, const std::string &name,
                     const std::function<void(int, const json &)> &fn) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json value;
    try {
      value = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(name, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!value.is_object()) {
      throw ParseError(name, line_no, "expected a JSON object");
    }
    try {
      fn(line_no, value);
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(name, line_no, e.what());
    }
  }
  if (in.bad()) throw Error("cannot read " + name);
}

// Calls `fn(line_no, fields)` for every non-blank, non-comment line of a
// delimited text stream.
void ForEachRow(std::istream &in, const std::string &name, char delimiter,
                bool skip_comments,
                const std::function<void(int, std::vector<std::string> &)> &fn) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    if (skip_comments && trimmed[0] == '#') continue;
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
      size_t pos = line.find(delimiter, start);
      fields.push_back(Trim(line.substr(start, pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    try {
      fn(line_no, fields);
    } catch (const ParseError &) {
      throw;
    } catch (const Error &e) {
      throw ParseError(name, line_no, e.what());
    }
  }
  if (in.bad()) throw Error("cannot read " + name);
}

std::string RequireString(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw Error(std::string("field '") + key + "' must be a string");
  }
  std::string value = Trim(it->get<std::string>());
  if (value.empty()) throw Error(std::string("field '") + key + "' is empty");
  return value;
}

std::optional<std::string> OptionalLemma(const json &obj, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(std::string("field '") + key + "' must be a string or null");
  }
  std::string lemma = ToLower(Trim(it->get<std::string>()));
  if (!IsNormalizedLemma(lemma)) {
    throw Error(std::string("field '") + key + "' is not a single lowercase word: '" +
                it->get<std::string>() + "'");
  }
  return lemma;
}

double RequireFinite(const json &value, const char *what) {
  if (!value.is_number()) throw Error(std::string(what) + " must be a number");
  double d = value.get<double>();
  if (!std::isfinite(d)) throw Error(std::string(what) + " is not finite");
  return d;
}

int ParseVote(const std::string &field) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error("vote value '" + field + "' is not an integer");
  }
  if (value < 0 || value >= kNumRatingValues) {
    throw Error("vote value " + field + " outside 0..4");
  }
  return value;
}

RatingKind RequireKind(const std::string &field) {
  if (field.empty()) throw Error("missing rating kind");
  auto kind = ParseRatingKind(ToLower(field));
  if (!kind) throw Error("unknown rating kind '" + field + "' (want r1, r2 or r3)");
  return *kind;
}

json NullableString(const std::optional<std::string> &s) {
  return s ? json(*s) : json(nullptr);
}

template <typename Record>
void SortByAnnotator(std::vector<Record> &records) {
  std::sort(records.begin(), records.end(), [](const Record &a, const Record &b) {
    return a.annotator_id < b.annotator_id;
  });
}

}  // namespace

size_t CaptionCorpus::num_records() const {
  size_t n = 0;
  for (const auto &[id, records] : by_image) n += records.size();
  return n;
}

std::map<size_t, size_t> CaptionCorpus::CaptionsPerImage() const {
  std::map<size_t, size_t> histogram;
  for (const auto &[id, records] : by_image) ++histogram[records.size()];
  return histogram;
}

size_t TripleCorpus::num_records() const {
  size_t n = 0;
  for (const auto &[id, records] : by_image) n += records.size();
  return n;
}

std::vector<SpoTriple> TripleCorpus::TriplesOf(const std::string &image_id) const {
  std::vector<SpoTriple> triples;
  auto it = by_image.find(image_id);
  if (it == by_image.end()) return triples;
  for (const TripleRecord &r : it->second) triples.push_back(r.triple);
  return triples;
}

const RatingVotes *RatingsCorpus::Find(const std::string &image_id,
                                       RatingKind kind) const {
  auto it = groups.find({image_id, kind});
  return it == groups.end() ? nullptr : &it->second;
}

// Captions.

CaptionCorpus LoadCaptions(std::istream &in, const std::string &name) {
  CaptionCorpus corpus;
  std::set<std::pair<std::string, std::string>> seen;
  ForEachJsonLine(in, name, [&](int line_no, const json &obj) {
    CaptionRecord record;
    record.image_id = RequireString(obj, "image_id");
    record.annotator_id = RequireString(obj, "annotator_id");
    record.text = RequireString(obj, "caption");
    if (auto it = obj.find("brand_class"); it != obj.end() && !it->is_null()) {
      record.brand_class = OptionalLemma(obj, "brand_class");
    }
    if (!seen.emplace(record.image_id, record.annotator_id).second) {
      throw ParseError(name, line_no,
                       "duplicate caption for (" + record.image_id + ", " +
                           record.annotator_id + ")");
    }
    corpus.by_image[record.image_id].push_back(std::move(record));
  });
  for (auto &[id, records] : corpus.by_image) SortByAnnotator(records);
  return corpus;
}

CaptionCorpus LoadCaptions(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadCaptions(in, path.string());
}

void WriteCaptions(const CaptionCorpus &corpus, std::ostream &out) {
  for (const auto &[id, records] : corpus.by_image) {
    for (const CaptionRecord &r : records) {
      json obj = {{"image_id", r.image_id},
                  {"annotator_id", r.annotator_id},
                  {"caption", r.text}};
      if (r.brand_class) obj["brand_class"] = *r.brand_class;
      out << obj.dump() << '\n';
    }
  }
}

// Triples.

TripleCorpus LoadTriples(std::istream &in, const std::string &name) {
  TripleCorpus corpus;
  std::set<std::pair<std::string, std::string>> seen;
  ForEachJsonLine(in, name, [&](int line_no, const json &obj) {
    TripleRecord record;
    record.image_id = RequireString(obj, "image_id");
    record.annotator_id = RequireString(obj, "annotator_id");
    record.triple.subject = OptionalLemma(obj, "subject");
    record.triple.predicate = OptionalLemma(obj, "predicate");
    record.triple.object = OptionalLemma(obj, "object");
    if (record.triple.empty()) {
      throw ParseError(name, line_no, "triple has no subject, predicate or object");
    }
    if (!seen.emplace(record.image_id, record.annotator_id).second) {
      throw ParseError(name, line_no,
                       "duplicate triple for (" + record.image_id + ", " +
                           record.annotator_id + ")");
    }
    corpus.by_image[record.image_id].push_back(std::move(record));
  });
  for (auto &[id, records] : corpus.by_image) SortByAnnotator(records);
  return corpus;
}

TripleCorpus LoadTriples(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadTriples(in, path.string());
}

void WriteTriples(const TripleCorpus &corpus, std::ostream &out) {
  for (const auto &[id, records] : corpus.by_image) {
    for (const TripleRecord &r : records) {
      json obj = {{"image_id", r.image_id},
                  {"annotator_id", r.annotator_id},
                  {"subject", NullableString(r.triple.subject)},
                  {"predicate", NullableString(r.triple.predicate)},
                  {"object", NullableString(r.triple.object)}};
      out << obj.dump() << '\n';
    }
  }
}

// Synonyms.

SynonymLexicon LoadSynonyms(std::istream &in, const std::string &name) {
  SynonymLexicon lexicon;
  ForEachRow(in, name, '\t', true, [&](int line_no, std::vector<std::string> &f) {
    if (f.size() != 3) {
      throw ParseError(name, line_no,
                       "expected 3 tab-separated fields, got " +
                           std::to_string(f.size()));
    }
    if (f[0] == "bi") {
      lexicon.AddBidirectional(f[1], f[2]);
    } else if (f[0] == "uni") {
      lexicon.AddUnidirectional(f[1], f[2]);
    } else {
      throw ParseError(name, line_no, "unknown synonym tag '" + f[0] + "'");
    }
  });
  return lexicon;
}

SynonymLexicon LoadSynonyms(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadSynonyms(in, path.string());
}

void WriteSynonyms(const SynonymLexicon &lexicon, std::ostream &out) {
  for (const auto &[a, b] : lexicon.bidirectional()) {
    out << "bi\t" << a << '\t' << b << '\n';
  }
  for (const auto &[a, b] : lexicon.unidirectional()) {
    out << "uni\t" << a << '\t' << b << '\n';
  }
}

// Ratings.

RatingsCorpus LoadRatings(std::istream &in, const std::string &name) {
  RatingsCorpus corpus;
  bool header = false;
  std::set<std::tuple<std::string, std::string, RatingKind>> seen;
  ForEachRow(in, name, ',', false, [&](int line_no, std::vector<std::string> &f) {
    if (!header) {
      if (f != std::vector<std::string>{"image_id", "annotator_id", "kind", "value"}) {
        throw ParseError(name, line_no,
                         "expected header image_id,annotator_id,kind,value");
      }
      header = true;
      return;
    }
    if (f.size() != 4) {
      throw ParseError(name, line_no,
                       "expected 4 fields, got " + std::to_string(f.size()));
    }
    if (f[0].empty()) throw ParseError(name, line_no, "missing image_id");
    RatingKind kind = RequireKind(f[2]);
    int vote = ParseVote(f[3]);
    if (!seen.emplace(f[0], f[1], kind).second) {
      throw ParseError(name, line_no,
                       "duplicate vote by '" + f[1] + "' for (" + f[0] + ", " +
                           std::string(RatingKindName(kind)) + ")");
    }
    RatingVotes &group = corpus.groups[{f[0], kind}];
    group.image_id = f[0];
    group.kind = kind;
    group.votes.push_back(vote);
  });
  if (!header) throw Error(name + ": missing header line");
  return corpus;
}

RatingsCorpus LoadRatings(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadRatings(in, path.string());
}

void LoadAdjudications(std::istream &in, const std::string &name,
                       RatingsCorpus *ratings) {
  bool header = false;
  ForEachRow(in, name, ',', false, [&](int line_no, std::vector<std::string> &f) {
    if (!header) {
      if (f != std::vector<std::string>{"image_id", "kind", "value"}) {
        throw ParseError(name, line_no, "expected header image_id,kind,value");
      }
      header = true;
      return;
    }
    if (f.size() != 3) {
      throw ParseError(name, line_no,
                       "expected 3 fields, got " + std::to_string(f.size()));
    }
    RatingKind kind = RequireKind(f[1]);
    int value = ParseVote(f[2]);
    auto it = ratings->groups.find({f[0], kind});
    if (it == ratings->groups.end()) {
      throw ParseError(name, line_no,
                       "no votes for image '" + f[0] + "' rating " +
                           std::string(RatingKindName(kind)));
    }
    if (it->second.adjudicated_value) {
      throw ParseError(name, line_no,
                       "duplicate adjudication for (" + f[0] + ", " +
                           std::string(RatingKindName(kind)) + ")");
    }
    it->second.adjudicated_value = value;
  });
  if (!header) throw Error(name + ": missing header line");
}

void LoadAdjudications(const std::filesystem::path &path,
                       RatingsCorpus *ratings) {
  auto in = OpenOrThrow(path);
  LoadAdjudications(in, path.string(), ratings);
}

void WriteRatings(const RatingsCorpus &corpus, std::ostream &out) {
  out << "image_id,annotator_id,kind,value\n";
  for (const auto &[key, group] : corpus.groups) {
    for (size_t i = 0; i < group.votes.size(); ++i) {
      out << group.image_id << ",a" << i << ',' << RatingKindName(group.kind)
          << ',' << group.votes[i] << '\n';
    }
  }
}

void WriteAdjudications(const RatingsCorpus &corpus, std::ostream &out) {
  out << "image_id,kind,value\n";
  for (const auto &[key, group] : corpus.groups) {
    if (!group.adjudicated_value) continue;
    out << group.image_id << ',' << RatingKindName(group.kind) << ','
        << *group.adjudicated_value << '\n';
  }
}

// Caption predictions.

PredictionCorpus LoadPredictions(std::istream &in, const std::string &name,
                                 int beam_size) {
  if (beam_size < 1) throw Error("beam size must be at least 1");
  PredictionCorpus corpus;
  ForEachJsonLine(in, name, [&](int line_no, const json &obj) {
    CandidateSet set;
    set.image_id = RequireString(obj, "image_id");
    auto it = obj.find("candidates");
    if (it == obj.end() || !it->is_array()) {
      throw Error("field 'candidates' must be an array");
    }
    for (const json &c : *it) {
      if (!c.is_object()) throw Error("candidate must be an object");
      Candidate candidate;
      candidate.caption = RequireString(c, "caption");
      auto score = c.find("score");
      if (score == c.end()) throw Error("candidate without 'score'");
      candidate.score = RequireFinite(*score, "candidate score");
      set.candidates.push_back(std::move(candidate));
    }
    CheckCandidateSet(set, beam_size);
    std::string id = set.image_id;
    if (!corpus.by_image.emplace(id, std::move(set)).second) {
      throw ParseError(name, line_no, "duplicate prediction for image '" + id + "'");
    }
  });
  return corpus;
}

PredictionCorpus LoadPredictions(const std::filesystem::path &path,
                                 int beam_size) {
  auto in = OpenOrThrow(path);
  return LoadPredictions(in, path.string(), beam_size);
}

void WritePredictions(const PredictionCorpus &corpus, std::ostream &out) {
  for (const auto &[id, set] : corpus.by_image) {
    json candidates = json::array();
    for (const Candidate &c : set.candidates) {
      candidates.push_back({{"caption", c.caption}, {"score", c.score}});
    }
    out << json{{"image_id", id}, {"candidates", candidates}}.dump() << '\n';
  }
}

// Rating predictions.

RatingPredictionCorpus LoadRatingPredictions(std::istream &in,
                                             const std::string &name) {
  RatingPredictionCorpus corpus;
  ForEachJsonLine(in, name, [&](int line_no, const json &obj) {
    RatingPrediction p;
    p.image_id = RequireString(obj, "image_id");
    p.kind = RequireKind(RequireString(obj, "kind"));
    auto it = obj.find("logits");
    if (it == obj.end() || !it->is_array() ||
        it->size() != static_cast<size_t>(kNumRatingValues)) {
      throw Error("field 'logits' must be an array of 5 numbers");
    }
    for (int i = 0; i < kNumRatingValues; ++i) {
      p.logits[i] = RequireFinite((*it)[i], "logit");
    }
    auto key = std::make_pair(p.image_id, p.kind);
    if (!corpus.entries.emplace(key, std::move(p)).second) {
      throw ParseError(name, line_no,
                       "duplicate rating prediction for (" + key.first + ", " +
                           std::string(RatingKindName(key.second)) + ")");
    }
  });
  return corpus;
}

RatingPredictionCorpus LoadRatingPredictions(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadRatingPredictions(in, path.string());
}

void WriteRatingPredictions(const RatingPredictionCorpus &corpus,
                            std::ostream &out) {
  for (const auto &[key, p] : corpus.entries) {
    json obj = {{"image_id", p.image_id},
                {"kind", RatingKindName(p.kind)},
                {"logits", p.logits}};
    out << obj.dump() << '\n';
  }
}

// Brands.

BrandLexicon LoadBrands(std::istream &in, const std::string &name) {
  BrandLexicon brands;
  ForEachRow(in, name, '\t', true, [&](int line_no, std::vector<std::string> &f) {
    if (f.size() != 2) {
      throw ParseError(name, line_no,
                       "expected class<TAB>token,token,... got " +
                           std::to_string(f.size()) + " fields");
    }
    std::vector<std::string> tokens;
    size_t start = 0;
    while (true) {
      size_t comma = f[1].find(',', start);
      std::string token = Trim(f[1].substr(start, comma - start));
      if (!token.empty()) tokens.push_back(token);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    brands.AddClass(f[0], tokens);
  });
  return brands;
}

BrandLexicon LoadBrands(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadBrands(in, path.string());
}

void WriteBrands(const BrandLexicon &brands, std::ostream &out) {
  for (const auto &[cls, tokens] : brands.classes()) {
    out << cls << '\t';
    bool first = true;
    for (const std::string &t : tokens) {
      if (!first) out << ',';
      out << t;
      first = false;
    }
    out << '\n';
  }
}

// Word probabilities.

std::vector<WordProbabilityRecord> LoadWordProbabilities(
    std::istream &in, const std::string &name) {
  std::vector<WordProbabilityRecord> records;
  ForEachJsonLine(in, name, [&](int, const json &obj) {
    WordProbabilityRecord r;
    r.image_id = RequireString(obj, "image_id");
    r.brand_class = ToLower(RequireString(obj, "brand_class"));
    auto rows = obj.find("rows");
    if (rows == obj.end() || !rows->is_array()) {
      throw Error("field 'rows' must be an array of arrays");
    }
    for (const json &row : *rows) {
      if (!row.is_array()) throw Error("field 'rows' must be an array of arrays");
      std::vector<double> values;
      for (const json &v : row) values.push_back(RequireFinite(v, "probability"));
      r.rows.push_back(std::move(values));
    }
    auto targets = obj.find("targets");
    if (targets == obj.end() || !targets->is_array()) {
      throw Error("field 'targets' must be an array of integers");
    }
    for (const json &t : *targets) {
      if (!t.is_number_integer()) throw Error("target index must be an integer");
      r.targets.push_back(t.get<int>());
    }
    records.push_back(std::move(r));
  });
  return records;
}

std::vector<WordProbabilityRecord> LoadWordProbabilities(
    const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  return LoadWordProbabilities(in, path.string());
}

std::vector<std::string> LoadVocabulary(const std::filesystem::path &path) {
  auto in = OpenOrThrow(path);
  std::vector<std::string> vocabulary;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string word = ToLower(Trim(line));
    if (!IsNormalizedLemma(word)) {
      throw ParseError(path.string(), line_no, "malformed vocabulary word");
    }
    vocabulary.push_back(std::move(word));
  }
  return vocabulary;
}

// Cross-references.

std::map<std::string, std::string> ImageBrandClasses(
    const CaptionCorpus &captions, const BrandLexicon &brands) {
  std::map<std::string, std::string> result;
  for (const auto &[image_id, records] : captions.by_image) {
    std::optional<std::string> explicit_class;
    std::map<std::string, int> mentions;
    for (const CaptionRecord &r : records) {
      if (r.brand_class && !explicit_class) explicit_class = r.brand_class;
      std::set<std::string> classes;
      for (const std::string &token : Tokenize(r.text)) {
        if (auto cls = brands.ClassOf(token)) classes.insert(*cls);
      }
      for (const std::string &cls : classes) ++mentions[cls];
    }
    if (explicit_class) {
      result[image_id] = *explicit_class;
      continue;
    }
    const std::string *best = nullptr;
    int best_count = 0;
    for (const auto &[cls, count] : mentions) {
      if (count > best_count) {
        best = &cls;
        best_count = count;
      }
    }
    if (best) result[image_id] = *best;
  }
  return result;
}

std::vector<Finding> ValidateBundle(const Bundle &bundle) {
  std::vector<Finding> findings;
  auto add = [&](std::string code, const std::string &image_id, std::string message) {
    findings.push_back({std::move(code), image_id, std::move(message)});
  };

  if (bundle.captions && bundle.triples) {
    for (const auto &[id, records] : bundle.captions->by_image) {
      if (!bundle.triples->by_image.contains(id)) {
        add("missing_triples", id, "image has captions but no SPO triples");
      }
    }
    for (const auto &[id, records] : bundle.triples->by_image) {
      if (!bundle.captions->by_image.contains(id)) {
        add("missing_captions", id, "image has SPO triples but no captions");
      }
    }
  }
  if (bundle.predictions) {
    for (const auto &[id, set] : bundle.predictions->by_image) {
      if (bundle.triples && !bundle.triples->by_image.contains(id)) {
        add("prediction_no_triples", id, "prediction for an image without SPO triples");
      }
      if (bundle.captions && !bundle.captions->by_image.contains(id)) {
        add("prediction_no_captions", id, "prediction for an image without captions");
      }
    }
  }
  if (bundle.ratings && bundle.captions) {
    std::set<std::string> reported;
    for (const auto &[key, group] : bundle.ratings->groups) {
      if (!bundle.captions->by_image.contains(key.first) &&
          reported.insert(key.first).second) {
        add("ratings_no_captions", key.first, "rating votes for an image without captions");
      }
    }
  }
  if (bundle.rating_predictions) {
    for (const auto &[key, p] : bundle.rating_predictions->entries) {
      if (!bundle.ratings || !bundle.ratings->Find(key.first, key.second)) {
        add("rating_prediction_no_votes", key.first,
            "rating prediction for " + std::string(RatingKindName(key.second)) +
                " without annotator votes");
      }
    }
  }
  if (bundle.brands && bundle.captions) {
    for (const auto &[id, records] : bundle.captions->by_image) {
      for (const CaptionRecord &r : records) {
        if (r.brand_class && !bundle.brands->HasClass(*r.brand_class)) {
          add("unknown_brand_class", id,
              "caption by '" + r.annotator_id + "' names unknown brand class '" +
                  *r.brand_class + "'");
        }
      }
    }
    if (bundle.predictions) {
      auto classes = ImageBrandClasses(*bundle.captions, *bundle.brands);
      for (const auto &[id, set] : bundle.predictions->by_image) {
        if (bundle.captions->by_image.contains(id) && !classes.contains(id)) {
          add("no_brand_class", id, "brand class of the image cannot be determined");
        }
      }
    }
  }
  std::sort(findings.begin(), findings.end());
  return findings;
}

}  // namespace clause_eval
