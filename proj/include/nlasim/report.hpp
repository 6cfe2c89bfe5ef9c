// Copyright 2026 The nlasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NLASIM_REPORT_HPP
#define NLASIM_REPORT_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nlasim {

/// Empty cells (std::monostate) are written as an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Throws std::invalid_argument when the row width differs from columns.
  void add_row(std::vector<Cell> row);
};

struct Report {
  std::string experiment;
  Table table;
  /// Scalar results, in insertion order.
  std::vector<std::pair<std::string, Cell>> summary;
};

/// 12 significant digits (printf %.12g); "inf", "-inf" and "nan" otherwise.
std::string format_real(double v);
std::string format_cell(const Cell& cell);

/// Summary lines as `# key = value`, then a header row and the data rows.
std::string to_csv(const Report& report);
/// {"experiment": ..., "summary": {...}, "columns": [...], "rows": [{...}, ...]}
std::string to_json(const Report& report);
/// Human-readable summary block.
std::string to_text_summary(const Report& report);

}  // namespace nlasim

#endif  // NLASIM_REPORT_HPP
