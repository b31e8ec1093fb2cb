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

#include "aer/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <set>

#include "aer/common.hpp"
#include "aer/csv.hpp"

namespace aer {

const char* split_name(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::validation: return "validation";
    case Split::test: return "test";
  }
  return "?";
}

std::optional<Split> parse_split(std::string_view s) {
  if (s == "train") return Split::train;
  if (s == "validation") return Split::validation;
  if (s == "test") return Split::test;
  return std::nullopt;
}

std::vector<Utterance> load_manifest(const std::filesystem::path& path) {
  CsvFile csv = read_csv(path);
  const std::vector<std::string> expected = {"utterance_id", "wav_path", "split", "arousal",
                                             "valence"};
  if (csv.header != expected) {
    throw ContractError("manifest header must be utterance_id,wav_path,split,arousal,valence: " +
                        path.string());
  }

  std::vector<Utterance> out;
  std::set<std::string> seen;
  for (const auto& row : csv.rows) {
    Utterance u;
    u.id = row[0];
    u.wav_path = row[1];
    if (u.id.empty()) throw ContractError("empty utterance id in " + path.string());
    if (!seen.insert(u.id).second) {
      throw ContractError("duplicate utterance id '" + u.id + "' in " + path.string());
    }
    auto split = parse_split(row[2]);
    if (!split) throw ContractError("unknown split '" + row[2] + "' for id '" + u.id + "'");
    u.split = *split;

    const bool labels_required = u.split != Split::test;
    if (row[3].empty() || row[4].empty()) {
      if (labels_required) {
        throw ContractError("missing label for non-test utterance '" + u.id + "'");
      }
      if (row[3].empty() != row[4].empty()) {
        throw ContractError("utterance '" + u.id + "' must carry both labels or neither");
      }
    } else {
      double arousal = parse_double(row[3], "arousal of '" + u.id + "'");
      double valence = parse_double(row[4], "valence of '" + u.id + "'");
      if (arousal < 0.0 || arousal > 1.0) {
        throw ContractError("label out of range: arousal " + row[3] + " for '" + u.id + "'");
      }
      if (valence < -1.0 || valence > 1.0) {
        throw ContractError("label out of range: valence " + row[4] + " for '" + u.id + "'");
      }
      u.arousal = arousal;
      u.valence = valence;
    }
    out.push_back(std::move(u));
  }
  return out;
}

namespace {

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

}  // namespace

Signal read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open wav: " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());

  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw ContractError("not a RIFF/WAVE file: " + path.string());
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  const unsigned char* data = nullptr;
  std::uint32_t data_len = 0;

  // Chunks start word-aligned; odd-sized chunks carry one pad byte.
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* hdr = bytes.data() + pos;
    std::uint32_t chunk_len = read_u32(hdr + 4);
    if (pos + 8 + chunk_len > bytes.size()) {
      throw ContractError("truncated wav chunk: " + path.string());
    }
    if (std::memcmp(hdr, "fmt ", 4) == 0) {
      if (chunk_len < 16) throw ContractError("short fmt chunk: " + path.string());
      format = read_u16(hdr + 8);
      channels = read_u16(hdr + 10);
      rate = read_u32(hdr + 12);
      bits = read_u16(hdr + 22);
      have_fmt = true;
    } else if (std::memcmp(hdr, "data", 4) == 0) {
      data = hdr + 8;
      data_len = chunk_len;
    }
    pos += 8 + chunk_len + (chunk_len & 1);
  }

  if (!have_fmt) throw ContractError("missing fmt chunk: " + path.string());
  if (format != 1 || bits != 16) {
    throw ContractError("unsupported encoding (PCM s16 required): " + path.string());
  }
  if (channels != 1 && channels != 2) {
    throw ContractError("unsupported channel count " + std::to_string(channels) + ": " +
                        path.string());
  }
  if (rate == 0) throw ContractError("zero sample rate: " + path.string());
  if (data == nullptr || data_len == 0) {
    throw ContractError("zero-length data chunk: " + path.string());
  }

  const std::size_t bytes_per_frame = 2u * channels;
  const std::size_t n = data_len / bytes_per_frame;
  if (n == 0) throw ContractError("zero-length data chunk: " + path.string());

  std::vector<double> mono(n);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned char* f = data + i * bytes_per_frame;
    double acc = 0;
    for (unsigned c = 0; c < channels; ++c) {
      std::int16_t s = static_cast<std::int16_t>(read_u16(f + 2 * c));
      acc += static_cast<double>(s);
    }
    mono[i] = acc / channels / 32768.0;
  }

  Signal sig;
  sig.sample_rate = 16000.0;
  if (rate == 16000) {
    sig.samples = std::move(mono);
  } else {
    sig.samples = resample_linear(mono, static_cast<double>(rate), 16000.0);
  }
  return sig;
}

void write_wav(const std::filesystem::path& path, std::span<const double> samples,
               std::uint32_t sample_rate) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write wav: " + path.string());

  auto put_u32 = [&](std::uint32_t v) {
    char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                 static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
    out.write(b, 4);
  };
  auto put_u16 = [&](std::uint16_t v) {
    char b[2] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff)};
    out.write(b, 2);
  };

  const std::uint32_t data_len = static_cast<std::uint32_t>(samples.size() * 2);
  out.write("RIFF", 4);
  put_u32(36 + data_len);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  put_u32(16);
  put_u16(1);  // PCM
  put_u16(1);  // mono
  put_u32(sample_rate);
  put_u32(sample_rate * 2);
  put_u16(2);
  put_u16(16);
  out.write("data", 4);
  put_u32(data_len);
  for (double s : samples) {
    double clamped = std::clamp(s, -1.0, 1.0);
    auto v = static_cast<std::int16_t>(std::lrint(clamped * 32767.0));
    put_u16(static_cast<std::uint16_t>(v));
  }
  if (!out) throw ContractError("write failed: " + path.string());
}

std::vector<double> resample_linear(std::span<const double> x, double src_rate, double dst_rate) {
  if (x.empty()) return {};
  if (src_rate == dst_rate || x.size() == 1) return {x.begin(), x.end()};

  // Endpoints are preserved: position i covers t = i/dst in source time.
  const std::size_t out_len =
      static_cast<std::size_t>(std::floor((x.size() - 1) * dst_rate / src_rate)) + 1;
  std::vector<double> out(out_len);
  const double step = src_rate / dst_rate;
  for (std::size_t i = 0; i < out_len; ++i) {
    double t = i * step;
    auto lo = static_cast<std::size_t>(t);
    if (lo >= x.size() - 1) {
      out[i] = x.back();
      continue;
    }
    double frac = t - static_cast<double>(lo);
    out[i] = x[lo] * (1.0 - frac) + x[lo + 1] * frac;
  }
  return out;
}

std::vector<std::vector<double>> frame_signal(std::span<const double> x, std::size_t window_len,
                                              std::size_t hop) {
  if (window_len == 0 || hop == 0 || hop > window_len) {
    throw ContractError("frame config requires 0 < hop <= window_len");
  }
  std::vector<std::vector<double>> frames;
  if (x.size() < window_len) {
    std::vector<double> frame(window_len, 0.0);
    std::copy(x.begin(), x.end(), frame.begin());
    frames.push_back(std::move(frame));
    return frames;
  }
  const std::size_t count = (x.size() - window_len) / hop + 1;
  frames.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const double* start = x.data() + t * hop;
    frames.emplace_back(start, start + window_len);
  }
  return frames;
}

}  // namespace aer
