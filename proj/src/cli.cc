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

#include "clause_eval/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "clause_eval/corpus.h"
#include "clause_eval/defaults.h"
#include "clause_eval/extractor.h"
#include "clause_eval/logging.h"
#include "clause_eval/ratings.h"
#include "clause_eval/report.h"
#include "clause_eval/text_metrics.h"

namespace clause_eval {

namespace {

// Input bundle check failed; findings were already printed.
struct FindingsExit {};

bool IsStdout(const std::filesystem::path &p) { return p.empty() || p == "-"; }

void WriteText(const std::filesystem::path &path, const std::string &text,
               std::ostream &out) {
  if (IsStdout(path)) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path.string());
  file << text;
  if (!file) throw Error("cannot write " + path.string());
  Log().info("wrote {}", path.string());
}

bool Has(const RunConfig &c, const std::string &role) {
  return c.inputs.contains(role);
}

const std::filesystem::path &Input(const RunConfig &c, const std::string &role) {
  return c.inputs.at(role);
}

void ReportFindings(const std::vector<Finding> &findings, std::ostream &err) {
  if (findings.empty()) return;
  for (const Finding &f : findings) {
    err << "clause-eval: finding: " << f.code << " " << f.image_id << ": "
        << f.message << '\n';
  }
  throw FindingsExit{};
}

Json CaptionCounts(const CaptionCorpus &c) {
  Json per_image = Json::object();
  for (const auto &[n, images] : c.CaptionsPerImage()) {
    per_image[std::to_string(n)] = images;
  }
  return {{"records", c.num_records()},
          {"images", c.num_images()},
          {"captions_per_image", per_image}};
}

Json TripleCounts(const TripleCorpus &c) {
  return {{"records", c.num_records()}, {"images", c.num_images()}};
}

Json RatingCounts(const RatingsCorpus &c) {
  size_t votes = 0;
  for (const auto &[key, group] : c.groups) votes += group.votes.size();
  return {{"groups", c.groups.size()}, {"votes", votes}};
}

// Extraction context from --lexicon/--brands or the shipped defaults.
struct ExtractionSetup {
  ExtractionLexicon lexicon;
  BrandLexicon brands;
  Json config;
};

ExtractionSetup LoadExtractionSetup(const RunConfig &c, Json *report) {
  ExtractionSetup s;
  if (Has(c, "lexicon")) {
    s.lexicon = LoadExtractionLexicon(Input(c, "lexicon"));
    AddInput(report, "lexicon", Input(c, "lexicon"));
    s.config["lexicon"] = Input(c, "lexicon").filename().string();
  } else {
    s.lexicon = DefaultExtractionLexicon();
    s.config["lexicon"] = "default:" + Sha256(DefaultLexiconText());
  }
  if (Has(c, "brands")) {
    s.brands = LoadBrands(Input(c, "brands"));
    AddInput(report, "brands", Input(c, "brands"));
    s.config["brands"] = Input(c, "brands").filename().string();
  } else {
    s.brands = DefaultBrands();
    s.config["brands"] = "default:" + Sha256(DefaultBrandsText());
  }
  return s;
}

int CmdValidate(const RunConfig &c, std::ostream &out) {
  Json report = NewReport();
  CaptionCorpus captions = LoadCaptions(Input(c, "captions"));
  TripleCorpus triples = LoadTriples(Input(c, "triples"));
  RatingsCorpus ratings = LoadRatings(Input(c, "ratings"));
  AddInput(&report, "captions", Input(c, "captions"));
  AddInput(&report, "triples", Input(c, "triples"));
  AddInput(&report, "ratings", Input(c, "ratings"));
  report["counts"]["captions"] = CaptionCounts(captions);
  report["counts"]["triples"] = TripleCounts(triples);
  report["counts"]["ratings"] = RatingCounts(ratings);

  Bundle bundle{&captions, &triples, &ratings};
  PredictionCorpus predictions;
  RatingPredictionCorpus rating_predictions;
  BrandLexicon brands;
  if (Has(c, "adjudications")) {
    LoadAdjudications(Input(c, "adjudications"), &ratings);
    AddInput(&report, "adjudications", Input(c, "adjudications"));
  }
  if (Has(c, "predictions")) {
    predictions = LoadPredictions(Input(c, "predictions"), c.beam_size);
    AddInput(&report, "predictions", Input(c, "predictions"));
    bundle.predictions = &predictions;
  }
  if (Has(c, "rating_predictions")) {
    rating_predictions = LoadRatingPredictions(Input(c, "rating_predictions"));
    AddInput(&report, "rating_predictions", Input(c, "rating_predictions"));
    bundle.rating_predictions = &rating_predictions;
  }
  if (Has(c, "brands")) {
    brands = LoadBrands(Input(c, "brands"));
    AddInput(&report, "brands", Input(c, "brands"));
    bundle.brands = &brands;
  }
  std::vector<Finding> findings = ValidateBundle(bundle);
  report["config"]["validate"] = {{"beam_k", c.beam_size}};
  report["validation"] = {{"findings", FindingsToJson(findings)},
                          {"n_findings", findings.size()}};

  if (IsStdout(c.output)) {
    for (const Finding &f : findings) {
      out << f.code << '\t' << f.image_id << '\t' << f.message << '\n';
    }
  } else {
    WriteText(c.output, Serialize(report), out);
  }
  Log().info("{} finding(s)", findings.size());
  return findings.empty() ? kExitOk : kExitFindings;
}

int CmdExtractSpo(const RunConfig &c, std::ostream &out) {
  Json unused;
  ExtractionSetup setup = LoadExtractionSetup(c, &unused);
  CaptionCorpus captions = LoadCaptions(Input(c, "captions"));
  TripleCorpus triples;
  size_t skipped = 0;
  for (const auto &[image_id, records] : captions.by_image) {
    for (const CaptionRecord &r : records) {
      std::optional<SpoTriple> triple =
          ExtractSpoFromText(r.text, setup.lexicon, setup.brands);
      if (!triple) {
        Log().warn("no clause found in caption of ({}, {}): \"{}\"", image_id,
                   r.annotator_id, r.text);
        ++skipped;
        continue;
      }
      triples.by_image[image_id].push_back({image_id, r.annotator_id, *triple});
    }
  }
  std::ostringstream text;
  WriteTriples(triples, text);
  WriteText(c.output, text.str(), out);
  Log().info("extracted {} triple(s), skipped {}", triples.num_records(), skipped);
  return kExitOk;
}

int CmdEvalSpo(const RunConfig &c, std::ostream &out, std::ostream &err) {
  Json report = NewReport();
  PredictionCorpus predictions = LoadPredictions(Input(c, "predictions"), c.beam_size);
  TripleCorpus triples = LoadTriples(Input(c, "triples"));
  SynonymLexicon synonyms = LoadSynonyms(Input(c, "synonyms"));
  AddInput(&report, "predictions", Input(c, "predictions"));
  AddInput(&report, "triples", Input(c, "triples"));
  AddInput(&report, "synonyms", Input(c, "synonyms"));
  ExtractionSetup setup = LoadExtractionSetup(c, &report);

  Bundle bundle;
  bundle.triples = &triples;
  bundle.predictions = &predictions;
  ReportFindings(ValidateBundle(bundle), err);

  SpoEvaluation eval = EvaluateSpo(predictions, triples, synonyms,
                                   {&setup.lexicon, &setup.brands}, c.mode);
  Json config = setup.config;
  config["mode"] = MatchModeName(c.mode);
  config["beam_k"] = c.beam_size;
  report["config"]["eval-spo"] = config;
  report["counts"]["triples"] = TripleCounts(triples);
  report["spo"] = SpoEvaluationToJson(eval, c.mode);
  WriteText(c.output, Serialize(report), out);
  return kExitOk;
}

std::string HistogramCsv(const std::map<RatingKind, DeviationHistogram> &histograms) {
  std::ostringstream csv;
  csv << "kind,distance,fraction\n";
  for (const auto &[kind, h] : histograms) {
    for (int d = 0; d < kNumDistances; ++d) {
      csv << RatingKindName(kind) << ',' << d << ','
          << Number(h.fraction[d]).dump() << '\n';
    }
  }
  return csv.str();
}

std::filesystem::path SiblingPath(const RunConfig &c, const std::string &name) {
  if (IsStdout(c.output)) return name;
  return c.output.parent_path() / name;
}

Json CaptionLosses(const RunConfig &c, const RatingsCorpus &ratings,
                   const RatingPredictionCorpus *rating_predictions,
                   Json *report) {
  std::vector<WordProbabilityRecord> records =
      LoadWordProbabilities(Input(c, "word_probs"));
  std::vector<std::string> vocabulary = LoadVocabulary(Input(c, "vocab"));
  AddInput(report, "word_probs", Input(c, "word_probs"));
  AddInput(report, "vocab", Input(c, "vocab"));
  BrandLexicon brands;
  if (Has(c, "brands")) {
    brands = LoadBrands(Input(c, "brands"));
    AddInput(report, "brands", Input(c, "brands"));
  } else {
    brands = DefaultBrands();
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const WordProbabilityRecord &a, const WordProbabilityRecord &b) {
                     return a.image_id < b.image_id;
                   });

  Json rows = Json::array();
  double nll = 0.0, cls = 0.0, total = 0.0;
  for (const WordProbabilityRecord &r : records) {
    // Rating terms join the total only when all three are available.
    std::optional<std::array<double, 3>> rating_losses;
    if (rating_predictions) {
      std::array<double, 3> losses{};
      bool complete = true;
      for (RatingKind kind : kAllRatingKinds) {
        auto p = rating_predictions->entries.find({r.image_id, kind});
        const RatingVotes *votes = ratings.Find(r.image_id, kind);
        if (p == rating_predictions->entries.end() || !votes) {
          complete = false;
          break;
        }
        losses[static_cast<int>(kind)] =
            SigmoidCrossEntropyLoss(p->second.logits, SoftTargets(*votes)).total;
      }
      if (complete) rating_losses = losses;
    }
    LossBreakdown b;
    try {
      b = CaptionLoss(r.rows, r.targets, vocabulary, brands.Tokens(r.brand_class),
                      c.cls_penalty, rating_losses);
    } catch (const Error &e) {
      throw Error(Input(c, "word_probs").string() + ": image '" + r.image_id +
                  "': " + e.what());
    }
    nll += b.caption_nll;
    cls += b.cls_penalty;
    total += b.total;
    Json rl = nullptr;
    if (b.rating_losses) {
      rl = Json::array();
      for (double l : *b.rating_losses) rl.push_back(Number(l));
    }
    rows.push_back({{"image_id", r.image_id},
                    {"caption_nll", Number(b.caption_nll)},
                    {"cls_penalty", Number(b.cls_penalty)},
                    {"rating_losses", rl},
                    {"total", Number(b.total)},
                    {"decoded", b.decoded}});
  }
  const double n = records.empty() ? 1.0 : static_cast<double>(records.size());
  return {{"n", records.size()},
          {"lambda", Number(c.cls_penalty)},
          {"mean_caption_nll", Number(nll / n)},
          {"mean_cls_penalty", Number(cls / n)},
          {"mean_total", Number(total / n)},
          {"per_image", rows}};
}

int CmdEvalRatings(const RunConfig &c, std::ostream &out, std::ostream &err) {
  Json report = NewReport();
  RatingsCorpus ratings = LoadRatings(Input(c, "ratings"));
  AddInput(&report, "ratings", Input(c, "ratings"));
  if (Has(c, "adjudications")) {
    LoadAdjudications(Input(c, "adjudications"), &ratings);
    AddInput(&report, "adjudications", Input(c, "adjudications"));
  }
  std::optional<RatingPredictionCorpus> predictions;
  if (Has(c, "rating_predictions")) {
    predictions = LoadRatingPredictions(Input(c, "rating_predictions"));
    AddInput(&report, "rating_predictions", Input(c, "rating_predictions"));
    Bundle bundle;
    bundle.ratings = &ratings;
    bundle.rating_predictions = &*predictions;
    ReportFindings(ValidateBundle(bundle), err);
  }
  if (ratings.groups.empty()) throw Error(Input(c, "ratings").string() + ": no votes");

  std::map<std::pair<std::string, RatingKind>, MajorityRating> majorities;
  for (const auto &[key, group] : ratings.groups) majorities[key] = MajorityVote(group);
  RatingAccuracy accuracy;
  if (predictions) accuracy = RatingAccuracies(*predictions, majorities);

  std::map<RatingKind, DeviationHistogram> annotator_hist, predicted_hist;
  Json section = Json::object();
  for (RatingKind kind : kAllRatingKinds) {
    const int k = static_cast<int>(kind);
    std::vector<RatingVotes> groups;
    std::vector<RegressionSample> samples;
    size_t tied = 0, adjudicated = 0, provisional = 0;
    for (const auto &[key, group] : ratings.groups) {
      if (key.second != kind) continue;
      groups.push_back(group);
      const MajorityRating &m = majorities.at(key);
      tied += m.tied;
      adjudicated += m.adjudicated;
      provisional += m.provisional();
    }
    if (groups.empty()) continue;
    Json r = {{"n_groups", groups.size()},
              {"n_tied", tied},
              {"n_adjudicated", adjudicated},
              {"n_provisional", provisional}};
    annotator_hist[kind] = AnnotatorDeviationHistogram(groups);
    r["annotator_deviation"] = HistogramToJson(annotator_hist[kind]);

    if (predictions) {
      std::vector<std::pair<int, int>> pairs;
      double sigmoid_loss = 0.0, softmax_loss = 0.0;
      size_t softmax_n = 0;
      for (const auto &[key, p] : predictions->entries) {
        if (key.second != kind) continue;
        const RatingVotes &votes = ratings.groups.at(key);
        const MajorityRating &m = majorities.at(key);
        const int predicted = PredictRating(p.logits);
        pairs.emplace_back(predicted, m.value);
        sigmoid_loss += SigmoidCrossEntropyLoss(p.logits, SoftTargets(votes)).total;
        if (!m.provisional()) {
          softmax_loss += SoftmaxCrossEntropyLoss(p.logits, m).loss;
          ++softmax_n;
        }
        if (votes.votes.size() >= 2) {
          samples.push_back({static_cast<double>(predicted), votes.votes});
        }
      }
      r["accuracy"] = Number(accuracy.accuracy[k]);
      r["n_predictions"] = accuracy.n[k];
      r["n_correct"] = accuracy.correct[k];
      if (!pairs.empty()) {
        predicted_hist[kind] = L2DeviationHistogram(pairs);
        r["predicted_deviation"] = HistogramToJson(predicted_hist[kind]);
        r["mean_sigmoid_ce"] = Number(sigmoid_loss / pairs.size());
        r["mean_softmax_ce"] = softmax_n ? Number(softmax_loss / softmax_n) : Json(nullptr);
      }
    } else {
      for (const RatingVotes &g : groups) {
        if (g.votes.size() >= 2) {
          double mean = 0.0;
          for (int v : g.votes) mean += v;
          samples.push_back({mean / g.votes.size(), g.votes});
        }
      }
    }
    if (!samples.empty()) {
      RegressionComparison cmp = CompareRegression(samples);
      r["regression"] = {{"leave_one_out", Number(cmp.leave_one_out)}, {"n", cmp.n}};
      if (predictions) r["regression"]["prediction_to_mean"] = Number(cmp.prediction_to_mean);
    }
    section[std::string(RatingKindName(kind))] = r;
  }
  report["ratings"] = section;
  report["config"]["eval-ratings"] = {{"lambda", Number(c.cls_penalty)}};

  if (Has(c, "word_probs")) {
    report["losses"] = CaptionLosses(c, ratings, predictions ? &*predictions : nullptr,
                                     &report);
  }

  WriteText(c.output, Serialize(report), out);
  if (!IsStdout(c.output) || Has(c, "histogram")) {
    std::filesystem::path hist =
        Has(c, "histogram") ? Input(c, "histogram") : SiblingPath(c, "histogram.csv");
    WriteText(hist, HistogramCsv(annotator_hist), out);
    if (!predicted_hist.empty()) {
      WriteText(hist.parent_path() / (hist.stem().string() + "_predicted.csv"),
                HistogramCsv(predicted_hist), out);
    }
  }
  return kExitOk;
}

int CmdEvalText(const RunConfig &c, std::ostream &out, std::ostream &err) {
  Json report = NewReport();
  PredictionCorpus predictions = LoadPredictions(Input(c, "predictions"), c.beam_size);
  CaptionCorpus captions = LoadCaptions(Input(c, "captions"));
  BrandLexicon brands = LoadBrands(Input(c, "brands"));
  AddInput(&report, "predictions", Input(c, "predictions"));
  AddInput(&report, "captions", Input(c, "captions"));
  AddInput(&report, "brands", Input(c, "brands"));

  Bundle bundle;
  bundle.captions = &captions;
  bundle.predictions = &predictions;
  bundle.brands = &brands;
  ReportFindings(ValidateBundle(bundle), err);

  std::map<std::string, std::string> classes = ImageBrandClasses(captions, brands);
  std::vector<BleuSegment> segments;
  std::vector<LabeledCaption> labeled;
  for (const auto &[image_id, set] : predictions.by_image) {
    BleuSegment segment;
    segment.candidate = Tokenize(set.candidates.front().caption);
    if (segment.candidate.empty()) {
      throw Error(Input(c, "predictions").string() + ": image '" + image_id +
                  "': top candidate has no tokens");
    }
    for (const CaptionRecord &r : captions.by_image.at(image_id)) {
      segment.references.push_back(Tokenize(r.text));
    }
    labeled.push_back({image_id, classes.at(image_id), segment.candidate});
    segments.push_back(std::move(segment));
  }

  // Human baseline: every caption against the other captions of its image.
  std::vector<BleuSegment> human;
  for (const auto &[image_id, records] : captions.by_image) {
    if (records.size() < 2) continue;
    for (size_t i = 0; i < records.size(); ++i) {
      BleuSegment s;
      s.candidate = Tokenize(records[i].text);
      if (s.candidate.empty()) continue;
      for (size_t j = 0; j < records.size(); ++j) {
        if (j != i) s.references.push_back(Tokenize(records[j].text));
      }
      human.push_back(std::move(s));
    }
  }

  Json metrics = {{"bleu4", Number(Bleu4Corpus(segments))},
                  {"n_segments", segments.size()},
                  {"sca", ScaToJson(SentenceClassificationAccuracy(labeled, brands))}};
  metrics["bleu4_ground_truth"] = human.empty() ? Json(nullptr) : Number(Bleu4Corpus(human));
  report["text_metrics"] = metrics;
  report["config"]["eval-text"] = {{"beam_k", c.beam_size}, {"candidate", "top"}};
  report["counts"]["captions"] = CaptionCounts(captions);
  WriteText(c.output, Serialize(report), out);
  return kExitOk;
}

int CmdGtBaseline(const RunConfig &c, std::ostream &out) {
  Json report = NewReport();
  TripleCorpus triples = LoadTriples(Input(c, "triples"));
  SynonymLexicon synonyms = LoadSynonyms(Input(c, "synonyms"));
  AddInput(&report, "triples", Input(c, "triples"));
  AddInput(&report, "synonyms", Input(c, "synonyms"));
  ClauseAccuracyReport baseline = LeaveOneOutBaseline(triples, synonyms, c.mode);
  for (const std::string &id : baseline.skipped_images) {
    Log().info("image '{}' has a single annotator; skipped", id);
  }
  Json section = ClauseReportToJson(baseline, true);
  section["mode"] = MatchModeName(c.mode);
  report["gt_baseline"] = section;
  report["config"]["gt-baseline"] = {{"mode", MatchModeName(c.mode)}};
  report["counts"]["triples"] = TripleCounts(triples);
  WriteText(c.output, Serialize(report), out);
  return kExitOk;
}

int CmdReport(const RunConfig &c, const std::vector<std::string> &merge,
              std::ostream &out) {
  if (merge.empty()) throw Error("report: nothing to merge");
  Json combined;
  for (const std::string &path : merge) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json part;
    try {
      part = Json::parse(in);
    } catch (const Json::parse_error &e) {
      throw Error(path + ": invalid JSON: " + e.what());
    }
    try {
      combined = combined.is_null() ? part : MergeReports(combined, part);
    } catch (const Error &e) {
      throw Error(path + ": " + e.what());
    }
  }
  WriteText(c.output, Serialize(combined), out);
  return kExitOk;
}

}  // namespace

void CheckRunConfig(const RunConfig &config) {
  if (config.beam_size < 1) throw Error("--beam-k must be at least 1");
  if (!(config.cls_penalty >= 0.0)) throw Error("--lambda must be >= 0");
  for (const auto &[role, path] : config.inputs) {
    if (role == "histogram") continue;
    if (!std::filesystem::exists(path)) {
      throw Error("missing file: " + path.string() + " (--" + role + ")");
    }
  }
}

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Clause-focused caption evaluation", "clause-eval"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  RunConfig config;
  std::map<std::string, std::string> paths;
  std::string mode = "clause";
  std::string output;
  std::vector<std::string> merge;

  auto file = [&](CLI::App *cmd, const std::string &flag, const std::string &role,
                  bool required, const std::string &help) {
    auto *opt = cmd->add_option(flag, paths[role], help);
    if (required) opt->required();
  };
  auto out_opt = [&](CLI::App *cmd, bool required) {
    auto *opt = cmd->add_option("-o,--output", output, "output file, '-' for stdout");
    if (required) opt->required();
  };
  auto beam = [&](CLI::App *cmd) {
    cmd->add_option("--beam-k", config.beam_size, "beam size k");
  };
  auto mode_opt = [&](CLI::App *cmd) {
    cmd->add_option("--mode", mode, "clause matching mode")
        ->check(CLI::IsMember({"clause", "joint"}));
  };

  CLI::App *validate = app.add_subcommand("validate", "check cross-references of an input bundle");
  file(validate, "--captions", "captions", true, "captions.jsonl");
  file(validate, "--triples", "triples", true, "triples.jsonl");
  file(validate, "--ratings", "ratings", true, "ratings.csv");
  file(validate, "--predictions", "predictions", false, "predictions.jsonl");
  file(validate, "--adjudications", "adjudications", false, "adjudications.csv");
  file(validate, "--rating-predictions", "rating_predictions", false,
       "rating_predictions.jsonl");
  file(validate, "--brands", "brands", false, "brands.tsv");
  beam(validate);
  out_opt(validate, false);

  CLI::App *extract = app.add_subcommand("extract-spo", "extract SPO triples from captions");
  file(extract, "--captions", "captions", true, "captions.jsonl");
  file(extract, "--lexicon", "lexicon", false, "lexicon.tsv (default: built in)");
  file(extract, "--brands", "brands", false, "brands.tsv (default: built in)");
  out_opt(extract, true);

  CLI::App *eval_spo = app.add_subcommand("eval-spo", "SPO accuracies a0..a7 of predicted captions");
  file(eval_spo, "--predictions", "predictions", true, "predictions.jsonl");
  file(eval_spo, "--triples", "triples", true, "triples.jsonl");
  file(eval_spo, "--synonyms", "synonyms", true, "synonyms.tsv");
  file(eval_spo, "--lexicon", "lexicon", false, "lexicon.tsv (default: built in)");
  file(eval_spo, "--brands", "brands", false, "brands.tsv (default: built in)");
  mode_opt(eval_spo);
  beam(eval_spo);
  out_opt(eval_spo, true);

  CLI::App *eval_ratings = app.add_subcommand("eval-ratings", "rating accuracies and deviation histograms");
  file(eval_ratings, "--ratings", "ratings", true, "ratings.csv");
  file(eval_ratings, "--adjudications", "adjudications", false, "adjudications.csv");
  file(eval_ratings, "--rating-predictions", "rating_predictions", false,
       "rating_predictions.jsonl");
  file(eval_ratings, "--word-probs", "word_probs", false, "word probability JSONL for caption losses");
  file(eval_ratings, "--vocab", "vocab", false, "vocabulary, one word per line");
  file(eval_ratings, "--brands", "brands", false, "brands.tsv (default: built in)");
  file(eval_ratings, "--histogram", "histogram", false, "histogram CSV path");
  eval_ratings->add_option("--lambda", config.cls_penalty, "brand-absence penalty");
  out_opt(eval_ratings, true);

  CLI::App *eval_text = app.add_subcommand("eval-text", "BLEU-4 and sentence classification accuracy");
  file(eval_text, "--predictions", "predictions", true, "predictions.jsonl");
  file(eval_text, "--captions", "captions", true, "captions.jsonl");
  file(eval_text, "--brands", "brands", true, "brands.tsv");
  beam(eval_text);
  out_opt(eval_text, true);

  CLI::App *gt = app.add_subcommand("gt-baseline", "leave-one-out human SPO accuracies");
  file(gt, "--triples", "triples", true, "triples.jsonl");
  file(gt, "--synonyms", "synonyms", true, "synonyms.tsv");
  mode_opt(gt);
  out_opt(gt, true);

  CLI::App *merge_cmd = app.add_subcommand("report", "merge reports");
  merge_cmd->add_option("--merge", merge, "reports to merge")->required()->expected(1, -1);
  out_opt(merge_cmd, true);

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "clause-eval: " << e.what() << '\n';
    return kExitError;
  }

  CLI::App *cmd = app.get_subcommands().front();
  config.command = cmd->get_name();
  config.mode = *ParseMatchMode(mode);
  config.output = output;
  for (const auto &[role, path] : paths) {
    if (!path.empty()) config.inputs[role] = path;
  }
  try {
    CheckRunConfig(config);
    if (config.command == "validate") return CmdValidate(config, out);
    if (config.command == "extract-spo") return CmdExtractSpo(config, out);
    if (config.command == "eval-spo") return CmdEvalSpo(config, out, err);
    if (config.command == "eval-ratings") return CmdEvalRatings(config, out, err);
    if (config.command == "eval-text") return CmdEvalText(config, out, err);
    if (config.command == "gt-baseline") return CmdGtBaseline(config, out);
    if (config.command == "report") return CmdReport(config, merge, out);
  } catch (const FindingsExit &) {
    return kExitFindings;
  } catch (const Error &e) {
    err << "clause-eval: error: " << e.what() << '\n';
    return kExitError;
  }
  err << "clause-eval: unknown command " << config.command << '\n';
  return kExitError;
}

}  // namespace clause_eval
