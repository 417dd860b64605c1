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

#include "clause_eval/report.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>

namespace clause_eval {

namespace {

struct DigestContextDeleter {
  void operator()(EVP_MD_CTX *ctx) const { EVP_MD_CTX_free(ctx); }
};

class Sha256Digest {
 public:
  Sha256Digest() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("cannot initialize SHA-256");
    }
  }

  void Update(const char *data, size_t size) {
    if (EVP_DigestUpdate(ctx_.get(), data, size) != 1) {
      throw Error("SHA-256 update failed");
    }
  }

  std::string HexDigest() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), digest, &size) != 1) {
      throw Error("SHA-256 finalization failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    for (unsigned int i = 0; i < size; ++i) {
      hex.push_back(kHex[digest[i] >> 4]);
      hex.push_back(kHex[digest[i] & 0xf]);
    }
    return hex;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, DigestContextDeleter> ctx_;
};

Json MatchToJson(const ImageMatch &m) {
  DerivedMatchings d = DeriveMatchings(m.match);
  Json row = {{"image_id", m.image_id},
              {"m_s", m.match.subject},
              {"m_p", m.match.predicate},
              {"m_o", m.match.object}};
  Json derived = Json::array();
  for (bool b : d) derived.push_back(b ? 1 : 0);
  row["m"] = derived;
  if (!m.annotator_id.empty()) row["annotator_id"] = m.annotator_id;
  return row;
}

}  // namespace

double RoundSignificant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

Json Number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return RoundSignificant(value);
}

std::string Sha256(std::string_view data) {
  Sha256Digest digest;
  digest.Update(data.data(), data.size());
  return digest.HexDigest();
}

std::string Sha256File(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  Sha256Digest digest;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    digest.Update(buf, static_cast<size_t>(in.gcount()));
  }
  if (in.bad()) throw Error("cannot read " + path.string());
  return digest.HexDigest();
}

Json NewReport() {
  return Json{{"tool", {{"name", kToolName}, {"version", kToolVersion}}}};
}

void AddInput(Json *report, const std::string &role,
              const std::filesystem::path &path) {
  (*report)["inputs"][role] = {{"file", path.filename().string()},
                               {"sha256", Sha256File(path)}};
}

Json FindingsToJson(const std::vector<Finding> &findings) {
  Json out = Json::array();
  for (const Finding &f : findings) {
    out.push_back({{"code", f.code}, {"image_id", f.image_id}, {"message", f.message}});
  }
  return out;
}

Json ClauseReportToJson(const ClauseAccuracyReport &report, bool baseline) {
  Json out;
  for (int n = 0; n < kNumMatchings; ++n) {
    out["a" + std::to_string(n)] = Number(report.accuracy[n]);
  }
  out["n_images"] = report.n_images;
  Json rows = Json::array();
  for (const ImageMatch &m : report.per_image) rows.push_back(MatchToJson(m));
  out["per_image"] = std::move(rows);
  if (baseline) {
    out["n_evaluations"] = report.per_image.size();
    out["skipped_images"] = report.skipped_images;
  }
  return out;
}

Json TripleToJson(const std::optional<SpoTriple> &triple) {
  if (!triple) return nullptr;
  auto clause = [](const std::optional<std::string> &s) {
    return s ? Json(*s) : Json(nullptr);
  };
  return {{"subject", clause(triple->subject)},
          {"predicate", clause(triple->predicate)},
          {"object", clause(triple->object)}};
}

Json SpoEvaluationToJson(const SpoEvaluation &eval, MatchMode mode) {
  Json out = ClauseReportToJson(eval.report, false);
  out["mode"] = MatchModeName(mode);
  for (size_t i = 0; i < eval.choices.size(); ++i) {
    Json &row = out["per_image"][i];
    row["caption"] = eval.choices[i].caption;
    row["candidate"] = eval.choices[i].index;
    row["triple"] = TripleToJson(eval.choices[i].triple);
  }
  return out;
}

Json HistogramToJson(const DeviationHistogram &h) {
  Json bins = Json::array();
  Json counts = Json::array();
  for (int d = 0; d < kNumDistances; ++d) {
    bins.push_back(Number(h.fraction[d]));
    counts.push_back(h.count[d]);
  }
  return {{"bins", bins},
          {"counts", counts},
          {"mean", Number(h.mean)},
          {"stddev", Number(h.stddev)},
          {"n", h.n}};
}

Json ScaToJson(const ScaReport &sca) {
  Json per_class = Json::object();
  for (const auto &[name, cls] : sca.per_class) {
    per_class[name] = {{"correct", cls.correct},
                       {"total", cls.total},
                       {"accuracy", Number(cls.accuracy())}};
  }
  return {{"oa", Number(sca.overall)}, {"ma", Number(sca.mean)}, {"per_class", per_class}};
}

namespace {

Json MergeAt(const Json &a, const Json &b, const std::string &path) {
  if (a.is_object() && b.is_object()) {
    Json out = a;
    for (auto it = b.begin(); it != b.end(); ++it) {
      const std::string key_path = path.empty() ? it.key() : path + "." + it.key();
      out[it.key()] = out.contains(it.key())
                          ? MergeAt(out[it.key()], it.value(), key_path)
                          : it.value();
    }
    return out;
  }
  if (a != b) throw Error("conflicting values for '" + path + "'");
  return a;
}

}  // namespace

Json MergeReports(const Json &a, const Json &b) { return MergeAt(a, b, ""); }

std::string Serialize(const Json &report) { return report.dump(2) + "\n"; }

}  // namespace clause_eval
