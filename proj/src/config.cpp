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

#include "aer/config.hpp"

#include <charconv>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "aer/common.hpp"
#include "aer/csv.hpp"

namespace aer {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = value.find(',');
    out.push_back(trim(value.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

double to_double(std::string_view key, std::string_view value) {
  try {
    return parse_double(value);
  } catch (const ContractError&) {
    throw ContractError("config key '" + std::string(key) + "': bad number '" +
                        std::string(value) + "'");
  }
}

std::uint64_t to_uint(std::string_view key, std::string_view value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ContractError("config key '" + std::string(key) + "': bad integer '" +
                        std::string(value) + "'");
  }
  return v;
}

std::vector<double> to_double_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  for (std::string_view item : split_list(value)) out.push_back(to_double(key, item));
  if (out.empty()) throw ContractError("config key '" + std::string(key) + "': empty list");
  return out;
}

std::vector<std::size_t> to_uint_list(std::string_view key, std::string_view value) {
  std::vector<std::size_t> out;
  for (std::string_view item : split_list(value)) {
    out.push_back(static_cast<std::size_t>(to_uint(key, item)));
  }
  if (out.empty()) throw ContractError("config key '" + std::string(key) + "': empty list");
  return out;
}

std::vector<std::string> to_name_list(std::string_view value) {
  std::vector<std::string> out;
  for (std::string_view item : split_list(value)) {
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

}  // namespace

void apply_config_entry(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "sample_rate") {
    cfg.extract.sample_rate = to_double(key, value);
  } else if (key == "window_len") {
    cfg.extract.window_len = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "hop") {
    cfg.extract.hop = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "n_fft") {
    cfg.extract.n_fft = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "n_mels") {
    cfg.extract.n_mels = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "lpc_order") {
    cfg.extract.lpc_order = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "preemphasis") {
    cfg.extract.preemphasis = to_double(key, value);
  } else if (key == "band_split_hz") {
    cfg.extract.band_split_hz = to_double(key, value);
  } else if (key == "pitch_min_hz") {
    cfg.extract.pitch_min_hz = to_double(key, value);
  } else if (key == "pitch_max_hz") {
    cfg.extract.pitch_max_hz = to_double(key, value);
  } else if (key == "voicing_threshold") {
    cfg.extract.voicing_threshold = to_double(key, value);
  } else if (key == "p_low") {
    cfg.p_low = to_double(key, value);
  } else if (key == "p_high") {
    cfg.p_high = to_double(key, value);
  } else if (key == "relieff_k") {
    cfg.relieff.k = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "relieff_sigma") {
    cfg.relieff.sigma = to_double(key, value);
  } else if (key == "relieff_m") {
    cfg.relieff.m = static_cast<std::size_t>(to_uint(key, value));
  } else if (key == "svr_k_grid") {
    cfg.grids.k = to_uint_list(key, value);
  } else if (key == "svr_c_grid") {
    cfg.grids.C = to_double_list(key, value);
  } else if (key == "svr_epsilon_grid") {
    cfg.grids.epsilon = to_double_list(key, value);
  } else if (key == "svr_gamma_grid") {
    std::vector<double> gammas;
    bool has_auto = false;
    for (std::string_view item : split_list(value)) {
      if (item == "auto") {
        has_auto = true;
      } else {
        gammas.push_back(to_double(key, item));
      }
    }
    if (gammas.empty() && !has_auto) {
      throw ContractError("config key 'svr_gamma_grid': empty list");
    }
    cfg.grids.gamma = std::move(gammas);
    cfg.grids.gamma_auto = has_auto;
  } else if (key == "exclude_arousal") {
    cfg.exclude_arousal = to_name_list(value);
  } else if (key == "exclude_valence") {
    cfg.exclude_valence = to_name_list(value);
  } else if (key == "seed") {
    cfg.seed = to_uint(key, value);
  } else {
    throw ContractError("unknown config key '" + std::string(key) + "'");
  }
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open config file: " + path.string());
  PipelineConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ContractError("config line " + std::to_string(line_no) +
                          ": expected 'key = value', got '" + std::string(s) + "'");
    }
    apply_config_entry(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
  return cfg;
}

}  // namespace aer
