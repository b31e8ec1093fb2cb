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

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aer/commands.hpp"
#include "aer/common.hpp"
#include "aer/config.hpp"
#include "aer/dataset.hpp"
#include "aer/synthetic.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
};

aer::PipelineConfig make_config(const CommonOpts& c) {
  aer::PipelineConfig cfg =
      c.config_path.empty() ? aer::PipelineConfig{} : aer::load_config(c.config_path);
  if (c.seed_set) cfg.seed = c.seed;
  return cfg;
}

std::optional<aer::Target> make_target(const std::string& s) {
  if (s.empty()) return std::nullopt;
  const auto t = aer::parse_target(s);
  if (!t) throw aer::ContractError("unknown target '" + s + "'");
  return t;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--config", c.config_path, "Pipeline config file (flat key = value)");
  cmd->add_option("--seed", c.seed, "Random seed override")->each([&c](const std::string&) {
    c.seed_set = true;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Utterance-level audio emotion estimation: feature extraction, "
               "relief-ranked SVR training, and covariance-weighted fusion"};
  app.require_subcommand(1);

  // extract
  auto* extract = app.add_subcommand("extract", "Compute feature vectors from a wav manifest");
  CommonOpts extract_common;
  std::string extract_manifest, extract_out;
  extract->add_option("--manifest", extract_manifest, "Manifest CSV")->required();
  extract->add_option("--out", extract_out, "Output feature CSV")->required();
  add_common(extract, extract_common);

  // train
  auto* train = app.add_subcommand(
      "train", "Fit scaler, rank features, and grid-search SVR models per target");
  CommonOpts train_common;
  std::string train_manifest, train_features, train_out, train_target;
  train->add_option("--manifest", train_manifest, "Manifest CSV")->required();
  train->add_option("--features", train_features, "Feature CSV from extract")->required();
  train->add_option("--out", train_out, "Model output directory")->required();
  train->add_option("--target", train_target, "Train a single target")
      ->check(CLI::IsMember({"arousal", "valence"}));
  add_common(train, train_common);

  // predict
  auto* predict = app.add_subcommand("predict", "Apply trained models to a feature CSV");
  std::string predict_models, predict_features, predict_out, predict_target;
  predict->add_option("--models", predict_models, "Directory written by train")->required();
  predict->add_option("--features", predict_features, "Feature CSV")->required();
  predict->add_option("--out", predict_out, "Prediction output directory")->required();
  predict->add_option("--target", predict_target, "Predict a single target")
      ->check(CLI::IsMember({"arousal", "valence"}));

  // fuse
  auto* fuse = app.add_subcommand(
      "fuse", "Fuse per-model prediction CSVs with covariance-estimated weights");
  CommonOpts fuse_common;
  std::string fuse_preds, fuse_target;
  std::vector<std::string> fuse_exclude;
  fuse->add_option("--predictions", fuse_preds, "Directory with <target>/<model>.csv files")
      ->required();
  fuse->add_option("--target", fuse_target, "Target to fuse")
      ->required()
      ->check(CLI::IsMember({"arousal", "valence"}));
  fuse->add_option("--exclude", fuse_exclude, "Model name to leave out (repeatable)");
  add_common(fuse, fuse_common);

  // eval
  auto* eval = app.add_subcommand("eval", "Score prediction CSVs against manifest labels");
  std::string eval_preds, eval_manifest, eval_out;
  std::string eval_split = "validation";
  eval->add_option("--predictions", eval_preds, "Directory with <target>/<model>.csv files")
      ->required();
  eval->add_option("--manifest", eval_manifest, "Manifest CSV with labels")->required();
  eval->add_option("--split", eval_split, "Split to score (default validation)")
      ->check(CLI::IsMember({"train", "validation", "test"}));
  eval->add_option("--out", eval_out, "Report CSV path")->required();

  // synth
  auto* synth = app.add_subcommand("synth", "Generate the bundled synthetic dataset");
  std::string synth_out;
  aer::SynthSpec synth_spec;
  synth->add_option("--out", synth_out, "Output directory")->required();
  synth->add_option("--seed", synth_spec.seed, "Generator seed");
  synth->add_option("--train-count", synth_spec.n_train, "Training utterances");
  synth->add_option("--val-count", synth_spec.n_validation, "Validation utterances");
  synth->add_option("--test-count", synth_spec.n_test, "Test utterances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (*extract) {
      return aer::cmd_extract(extract_manifest, extract_out, make_config(extract_common));
    }
    if (*train) {
      return aer::cmd_train(train_manifest, train_features, train_out,
                            make_config(train_common), make_target(train_target));
    }
    if (*predict) {
      return aer::cmd_predict(predict_models, predict_features, predict_out,
                              make_target(predict_target));
    }
    if (*fuse) {
      return aer::cmd_fuse(fuse_preds, *aer::parse_target(fuse_target), fuse_exclude,
                           make_config(fuse_common));
    }
    if (*eval) {
      return aer::cmd_eval(eval_preds, eval_manifest, *aer::parse_split(eval_split), eval_out);
    }
    if (*synth) {
      return aer::cmd_synth(synth_out, synth_spec);
    }
  } catch (const aer::ContractError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
