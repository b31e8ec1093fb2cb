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

#include "aer/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "aer/common.hpp"

namespace aer {

std::string format_double(double v) {
  // std::to_chars with no precision gives the shortest round-trip form.
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::string_view context) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ContractError("not a finite number: '" + std::string(s) + "'" +
                        (context.empty() ? "" : " in " + std::string(context)));
  }
  return v;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

CsvFile read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open file: " + path.string());

  CsvFile csv;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      if (line.size() >= 3 && line[0] == '\xef' && line[1] == '\xbb' && line[2] == '\xbf') {
        line.erase(0, 3);
      }
      csv.header = split_csv_line(line);
      first = false;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != csv.header.size()) {
      throw ContractError("row with " + std::to_string(fields.size()) + " columns, expected " +
                          std::to_string(csv.header.size()) + " in " + path.string());
    }
    csv.rows.push_back(std::move(fields));
  }
  if (first) throw ContractError("empty file: " + path.string());
  return csv;
}

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ContractError("cannot write file: " + path.string());
  for (const auto& l : lines) {
    out << l << '\n';
  }
  if (!out) throw ContractError("write failed: " + path.string());
}

}  // namespace aer
