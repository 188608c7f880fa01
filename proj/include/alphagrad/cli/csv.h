// Copyright 2026 The alphagrad Authors
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

#ifndef ALPHAGRAD_CLI_CSV_H_
#define ALPHAGRAD_CLI_CSV_H_

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace alphagrad::cli {

// Rectangular table of reals with a header row. NaN may appear only in
// columns listed as optional.
struct ResultTable {
  std::string schema;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::set<std::string> optional_columns;

  int ColumnIndex(const std::string& name) const;  // -1 when absent
  void AddRow(std::vector<double> row);
  // throws std::logic_error on NaN in a required column
  void Validate() const;
};

// 17 significant digits so every double round-trips
std::string FormatReal(double value);

// CRLF line endings, comma separated, no quoting (names are identifiers)
void WriteCsv(const ResultTable& table, std::ostream& out);
std::string ToCsv(const ResultTable& table);
ResultTable ParseCsv(const std::string& text);

}  // namespace alphagrad::cli

#endif  // ALPHAGRAD_CLI_CSV_H_
