/* Copyright 2026 the aer authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "aer/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aer/common.hpp"
#include "aer/csv.hpp"
#include "aer/dataset.hpp"
#include "aer/features.hpp"
#include "aer/fusion.hpp"
#include "aer/metrics.hpp"
#include "aer/model_select.hpp"
#include "aer/preprocess.hpp"
#include "aer/relieff.hpp"
#include "aer/svr.hpp"

namespace aer {

namespace fs = std::filesystem;

const char* target_name(Target t) { return t == Target::arousal ? "arousal" : "valence"; }

std::optional<Target> parse_target(std::string_view s) {
  if (s == "arousal") return Target::arousal;
  if (s == "valence") return Target::valence;
  return std::nullopt;
}

namespace {

std::vector<Target> targets_for(std::optional<Target> only) {
  if (only) return {*only};
  return {Target::arousal, Target::valence};
}

double label_of(const Utterance& u, Target t) {
  const auto& v = t == Target::arousal ? u.arousal : u.valence;
  if (!v) throw ContractError("utterance '" + u.id + "' lacks a " + target_name(t) + " label");
  return *v;
}

void ensure_parent(const fs::path& p) {
  const fs::path dir = p.parent_path();
  if (!dir.empty()) fs::create_directories(dir);
}

// id -> prediction, plus file order for error messages. Header must be
// exactly `utterance_id,prediction`.
std::map<std::string, double> read_predictions(const fs::path& path) {
  const CsvFile csv = read_csv(path);
  if (csv.header != std::vector<std::string>{"utterance_id", "prediction"}) {
    throw ContractError("prediction file " + path.string() +
                        ": header must be 'utterance_id,prediction'");
  }
  std::map<std::string, double> out;
  for (const auto& row : csv.rows) {
    const double v = parse_double(row[1], path.string());
    if (!out.emplace(row[0], v).second) {
      throw ContractError("prediction file " + path.string() + ": duplicate utterance id '" +
                          row[0] + "'");
    }
  }
  if (out.empty()) throw ContractError("prediction file " + path.string() + " has no rows");
  return out;
}

// Prediction CSVs under dir, sorted by filename; the fused output itself is
// never an input.
std::vector<fs::path> prediction_files(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    throw ContractError("prediction directory not found: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.extension() != ".csv") continue;
    files.push_back(p);
  }
  std::sort(files.begin(), files.end());
  return files;
}

struct JoinedSplit {
  std::vector<std::string> ids;  // manifest order
  Matrix x;
  std::vector<double> arousal;
  std::vector<double> valence;
};

JoinedSplit join_split(const std::vector<Utterance>& utts, const Table& feats, Split split) {
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < feats.ids.size(); ++i) row_of.emplace(feats.ids[i], i);

  JoinedSplit out;
  std::vector<std::size_t> rows;
  for (const Utterance& u : utts) {
    if (u.split != split) continue;
    const auto it = row_of.find(u.id);
    if (it == row_of.end()) {
      std::fprintf(stderr, "train: no feature row for %s utterance '%s', skipping\n",
                   split_name(split), u.id.c_str());
      continue;
    }
    out.ids.push_back(u.id);
    rows.push_back(it->second);
    out.arousal.push_back(label_of(u, Target::arousal));
    out.valence.push_back(label_of(u, Target::valence));
  }
  out.x = Matrix(rows.size(), feats.m.cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto src = feats.m.row(rows[r]);
    std::copy(src.begin(), src.end(), out.x.row(r).begin());
  }
  return out;
}

}  // namespace

int cmd_extract(const fs::path& manifest, const fs::path& out_csv, const PipelineConfig& cfg) {
  const std::vector<Utterance> utts = load_manifest(manifest);
  const fs::path base = manifest.parent_path();

  std::vector<Signal> signals;
  std::vector<std::string> ids;
  std::size_t skipped = 0;
  for (const Utterance& u : utts) {
    fs::path wav = u.wav_path;
    if (wav.is_relative()) wav = base / wav;
    try {
      signals.push_back(read_wav(wav));
      ids.push_back(u.id);
    } catch (const std::exception& e) {
      std::fprintf(stderr, "extract: skipping '%s': %s\n", u.id.c_str(), e.what());
      ++skipped;
    }
  }
  if (ids.empty()) throw ContractError("extract: no readable wav files in " + manifest.string());

  const Table t = extract_table(signals, ids, cfg.extract);
  ensure_parent(out_csv);
  save_features(out_csv, t);
  std::fprintf(stderr, "extract: wrote %zu rows x %zu features to %s\n", t.m.rows, t.m.cols,
               out_csv.string().c_str());
  return skipped > 0 ? 2 : 0;
}

int cmd_train(const fs::path& manifest, const fs::path& features_csv, const fs::path& out_dir,
              const PipelineConfig& cfg, std::optional<Target> only_target) {
  const std::vector<Utterance> utts = load_manifest(manifest);
  const Table feats = load_features(features_csv);

  JoinedSplit train = join_split(utts, feats, Split::train);
  JoinedSplit val = join_split(utts, feats, Split::validation);
  if (train.ids.size() < 2) {
    throw ContractError("train: need at least 2 train utterances with features, have " +
                        std::to_string(train.ids.size()));
  }
  if (val.ids.size() < 2) {
    throw ContractError("train: need at least 2 validation utterances with features, have " +
                        std::to_string(val.ids.size()));
  }

  fs::create_directories(out_dir);
  const ScalerParams scaler = fit_scaler(train.x, cfg.p_low, cfg.p_high);
  save_scaler(out_dir / "scaler.csv", scaler);
  transform(train.x, scaler);
  transform(val.x, scaler);

  for (Target t : targets_for(only_target)) {
    const char* name = target_name(t);
    const std::vector<double>& y_train = t == Target::arousal ? train.arousal : train.valence;
    const std::vector<double>& y_val = t == Target::arousal ? val.arousal : val.valence;

    RReliefFParams rp = cfg.relieff;
    rp.seed = cfg.seed;
    const FeatureRanking ranking = rrelieff(train.x, y_train, rp);
    save_ranking(out_dir / ("ranking_" + std::string(name) + ".csv"), ranking, feature_names());

    const SelectionResult sel =
        model_select(train.x, y_train, val.x, y_val, ranking, cfg.grids);
    save_selection_log(out_dir / ("selection_" + std::string(name) + ".csv"), sel.log);
    save_model(out_dir / ("model_" + std::string(name) + ".svr"), sel.model);

    std::fprintf(stderr,
                 "train[%s]: k=%zu C=%s epsilon=%s gamma=%s val_ccc=%s (%zu configs)\n", name,
                 sel.k, format_double(sel.hyper.C).c_str(),
                 format_double(sel.hyper.epsilon).c_str(),
                 format_double(sel.hyper.gamma).c_str(), format_double(sel.val_ccc).c_str(),
                 sel.log.size());
  }
  return 0;
}

int cmd_predict(const fs::path& models_dir, const fs::path& features_csv, const fs::path& out_dir,
                std::optional<Target> only_target) {
  const Table feats = load_features(features_csv);
  const ScalerParams scaler = load_scaler(models_dir / "scaler.csv");
  Matrix x = feats.m;
  transform(x, scaler);

  for (Target t : targets_for(only_target)) {
    const char* name = target_name(t);
    const fs::path model_path = models_dir / ("model_" + std::string(name) + ".svr");
    if (!fs::exists(model_path)) {
      throw ContractError("predict: missing model file " + model_path.string());
    }
    const SvrModel model = load_model(model_path);

    Matrix sub(x.rows, model.feature_indices.size());
    for (std::size_t r = 0; r < x.rows; ++r) {
      for (std::size_t c = 0; c < model.feature_indices.size(); ++c) {
        if (model.feature_indices[c] >= x.cols) {
          throw ContractError("predict: model feature index out of range for feature table");
        }
        sub.at(r, c) = x.at(r, model.feature_indices[c]);
      }
    }
    const std::vector<double> preds = svr_predict(model, sub);

    std::vector<std::string> lines = {"utterance_id,prediction"};
    for (std::size_t r = 0; r < feats.ids.size(); ++r) {
      lines.push_back(feats.ids[r] + ',' + format_double(preds[r]));
    }
    const fs::path out = out_dir / name / "svr.csv";
    ensure_parent(out);
    write_lines(out, lines);
    std::fprintf(stderr, "predict[%s]: wrote %zu predictions to %s\n", name, preds.size(),
                 out.string().c_str());
  }
  return 0;
}

int cmd_fuse(const fs::path& preds_dir, Target target, const std::vector<std::string>& exclude,
             const PipelineConfig& cfg) {
  const char* name = target_name(target);
  const fs::path dir = preds_dir / name;

  std::vector<std::string> model_names;
  std::vector<std::map<std::string, double>> by_model;
  for (const fs::path& file : prediction_files(dir)) {
    if (file.stem() == "smlr") continue;
    model_names.push_back(file.stem().string());
    by_model.push_back(read_predictions(file));
  }
  if (model_names.empty()) {
    throw ContractError("fuse: no prediction files under " + dir.string());
  }

  // Canonical utterance order: sorted ids. Input row order never matters.
  std::vector<std::string> ids;
  for (const auto& [id, v] : by_model.front()) ids.push_back(id);
  for (std::size_t m = 1; m < by_model.size(); ++m) {
    if (by_model[m].size() != ids.size()) {
      throw ContractError("fuse: model '" + model_names[m] + "' covers " +
                          std::to_string(by_model[m].size()) + " utterances, expected " +
                          std::to_string(ids.size()));
    }
  }

  PredictionSet set;
  set.model_names = model_names;
  set.utterance_ids = ids;
  set.P = Matrix(model_names.size(), ids.size());
  for (std::size_t m = 0; m < by_model.size(); ++m) {
    for (std::size_t j = 0; j < ids.size(); ++j) {
      const auto it = by_model[m].find(ids[j]);
      if (it == by_model[m].end()) {
        throw ContractError("fuse: model '" + model_names[m] + "' is missing utterance '" +
                            ids[j] + "'");
      }
      set.P.at(m, j) = it->second;
    }
  }

  std::vector<std::string> all_exclude =
      target == Target::arousal ? cfg.exclude_arousal : cfg.exclude_valence;
  all_exclude.insert(all_exclude.end(), exclude.begin(), exclude.end());

  const FusionResult fr = smlr_fuse(set, all_exclude);
  if (fr.two_model_warning) {
    std::fprintf(stderr, "fuse[%s]: only 2 models, falling back to uniform weights\n", name);
  }

  std::vector<std::string> fused_lines = {"utterance_id,prediction"};
  for (std::size_t j = 0; j < ids.size(); ++j) {
    fused_lines.push_back(ids[j] + ',' + format_double(fr.fused[j]));
  }
  write_lines(dir / "smlr.csv", fused_lines);

  std::vector<std::string> weight_lines = {"model,weight,accuracy_estimate"};
  for (std::size_t m = 0; m < fr.model_names.size(); ++m) {
    weight_lines.push_back(fr.model_names[m] + ',' + format_double(fr.weights[m]) + ',' +
                           format_double(fr.accuracies[m]));
  }
  write_lines(preds_dir / ("smlr_weights_" + std::string(name) + ".csv"), weight_lines);

  std::fprintf(stderr, "fuse[%s]: fused %zu models over %zu utterances\n", name,
               fr.model_names.size(), ids.size());
  return 0;
}

int cmd_eval(const fs::path& preds_dir, const fs::path& manifest, Split split,
             const fs::path& out_report) {
  const std::vector<Utterance> utts = load_manifest(manifest);

  struct Row {
    std::string model;
    std::string target;
    double ccc_v, mse_v, pearson_v;
    std::size_t n;
  };
  std::vector<Row> rows;

  for (Target t : {Target::arousal, Target::valence}) {
    const char* name = target_name(t);

    std::map<std::string, double> labels;
    for (const Utterance& u : utts) {
      if (u.split != split) continue;
      const auto& v = t == Target::arousal ? u.arousal : u.valence;
      if (v) labels.emplace(u.id, *v);
    }
    if (labels.empty()) {
      throw ContractError(std::string("eval: no labeled '") + name + "' utterances in split '" +
                          split_name(split) + "'");
    }

    const fs::path dir = preds_dir / name;
    if (!fs::is_directory(dir)) continue;
    for (const fs::path& file : prediction_files(dir)) {
      const std::map<std::string, double> preds = read_predictions(file);
      std::vector<double> y, y_hat;
      for (const auto& [id, truth] : labels) {
        const auto it = preds.find(id);
        if (it == preds.end()) continue;
        y.push_back(truth);
        y_hat.push_back(it->second);
      }
      if (y.size() < 2) {
        std::fprintf(stderr, "eval: '%s' covers %zu labeled %s utterances in split '%s', "
                             "skipping\n",
                     file.stem().string().c_str(), y.size(), name, split_name(split));
        continue;
      }
      rows.push_back({file.stem().string(), name, ccc(y, y_hat), mse(y, y_hat),
                      pearson(y, y_hat).value, y.size()});
    }
  }
  if (rows.empty()) {
    throw ContractError("eval: no prediction files found under " + preds_dir.string());
  }

  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.target != b.target) return a.target < b.target;
    return a.model < b.model;
  });

  std::vector<std::string> lines = {"model,target,ccc,mse,pearson,n"};
  for (const Row& r : rows) {
    lines.push_back(r.model + ',' + r.target + ',' + format_double(r.ccc_v) + ',' +
                    format_double(r.mse_v) + ',' + format_double(r.pearson_v) + ',' +
                    std::to_string(r.n));
    std::printf("%-10s %-8s ccc=%-10s mse=%-12s pearson=%-10s n=%zu\n", r.model.c_str(),
                r.target.c_str(), format_double(r.ccc_v).c_str(),
                format_double(r.mse_v).c_str(), format_double(r.pearson_v).c_str(), r.n);
  }
  ensure_parent(out_report);
  write_lines(out_report, lines);
  return 0;
}

int cmd_synth(const fs::path& out_dir, const SynthSpec& spec) {
  generate_synthetic_dataset(out_dir, spec);
  std::fprintf(stderr, "synth: wrote %zu utterances under %s\n",
               spec.n_train + spec.n_validation + spec.n_test, out_dir.string().c_str());
  return 0;
}

}  // namespace aer
