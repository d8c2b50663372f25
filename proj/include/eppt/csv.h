// Copyright 2026 The Authors.
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

// Minimal CSV helpers shared by the file readers and writers. Fields never
// contain commas; list-valued fields use ';' as separator.

#ifndef EPPT_CSV_H_
#define EPPT_CSV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace eppt::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index for `name`; throws if missing.
  int Column(std::string_view name) const;
};

std::vector<std::string> SplitFields(std::string_view line, char sep = ',');

// Reads a header row plus data rows. Blank lines and lines starting with '#'
// are skipped. `expected_header` is checked exactly when nonempty.
Table ReadTable(const std::filesystem::path& path,
                const std::vector<std::string>& expected_header = {});

std::string JoinFields(const std::vector<std::string>& fields, char sep = ',');

double ParseDouble(std::string_view text, std::string_view what);
long long ParseInt(std::string_view text, std::string_view what);

// Shortest decimal string that round-trips.
std::string FormatDouble(double value);
// Fixed significant digits, for reports.
std::string FormatReport(double value);

}  // namespace eppt::csv

#endif  // EPPT_CSV_H_
