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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "aer/config.hpp"
#include "aer/synthetic.hpp"

namespace aer {

enum class Target { arousal, valence };

const char* target_name(Target t);
std::optional<Target> parse_target(std::string_view s);

// Each command returns a process exit code: 0 on success, 2 on partial data
// (some inputs skipped), and throws ContractError (mapped to 3 by the CLI)
// on contract violations.

// Feature CSV from a manifest; unreadable wav files are skipped with a log
// line and turn the exit code to 2.
int cmd_extract(const std::filesystem::path& manifest, const std::filesystem::path& out_csv,
                const PipelineConfig& cfg);

// Fits the scaler on the train split, ranks features, grid-searches feature
// count and SVR hyperparameters by validation CCC, and writes per-target
// artifacts into out_dir: scaler.csv, ranking_<target>.csv,
// selection_<target>.csv, model_<target>.svr.
int cmd_train(const std::filesystem::path& manifest, const std::filesystem::path& features_csv,
              const std::filesystem::path& out_dir, const PipelineConfig& cfg,
              std::optional<Target> only_target);

// Applies the stored scaler and models to a feature CSV; writes
// out_dir/<target>/svr.csv with one prediction per feature row.
int cmd_predict(const std::filesystem::path& models_dir,
                const std::filesystem::path& features_csv,
                const std::filesystem::path& out_dir, std::optional<Target> only_target);

// Fuses every prediction CSV under preds_dir/<target>/ except the fused
// output itself; writes preds_dir/<target>/smlr.csv and a weights report
// preds_dir/smlr_weights_<target>.csv. Exclusions come from the config's
// per-target list plus the repeatable --exclude flag.
int cmd_fuse(const std::filesystem::path& preds_dir, Target target,
             const std::vector<std::string>& exclude, const PipelineConfig& cfg);

// CCC/MSE/Pearson per (model, target) on the chosen split, written as
// `model,target,ccc,mse,pearson,n` rows sorted by target then model.
int cmd_eval(const std::filesystem::path& preds_dir, const std::filesystem::path& manifest,
             Split split, const std::filesystem::path& out_report);

// Bundled deterministic mini-dataset (see synthetic.hpp).
int cmd_synth(const std::filesystem::path& out_dir, const SynthSpec& spec);

}  // namespace aer
