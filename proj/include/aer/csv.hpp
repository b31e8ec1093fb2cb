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
#include <string>
#include <string_view>
#include <vector>

namespace aer {

// Shortest decimal string that parses back to exactly v. Locale-independent,
// so repeated runs produce byte-identical files.
std::string format_double(double v);

// Strict parse of a full string as a double; throws ContractError on anything
// short of a complete, finite parse.
double parse_double(std::string_view s, std::string_view context = {});

struct CsvFile {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Reads a simple comma-separated file: no quoting, one record per line.
// Strips a UTF-8 BOM and trailing carriage returns. Every row must have the
// same column count as the header.
CsvFile read_csv(const std::filesystem::path& path);

std::vector<std::string> split_csv_line(std::string_view line);

// Writes lines joined with '\n' (and a trailing newline) atomically enough
// for this project: write to the final path in one stream.
void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

}  // namespace aer
