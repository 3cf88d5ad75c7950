/**
 * Copyright 2026 The transduction-lab Authors
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

// Result tables and their two on-disk formats.
//
// csv:  '#'-prefixed "key: value" metadata lines, a header line, then rows.
// json: {"metadata": [[key, value], ...], "columns": [...], "rows": [[...], ...]}
//
// Numbers use 17 significant digits, so reading a written table back is
// bit-exact. Missing values are empty cells (csv) or null (json); infinities
// are the literal token "inf" (a string in json).

#include <string>
#include <utility>
#include <vector>

namespace transduction {

struct ResultTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    /// Throws ConfigError for an unknown column.
    std::size_t column(const std::string& name) const;
    std::vector<double> column_values(const std::string& name) const;
    /// First metadata value with this key, or an empty string.
    std::string meta(const std::string& key) const;
};

enum class TableFormat { Csv, Json };

TableFormat parse_format(const std::string& text);
const char* to_string(TableFormat f) noexcept;

/// "%.17g", "inf"/"-inf" for infinities and an empty string for NaN.
std::string format_value(double v);

std::string to_csv(const ResultTable& t);
std::string to_json(const ResultTable& t);
std::string serialize(const ResultTable& t, TableFormat f);

ResultTable parse_csv(const std::string& text);
ResultTable parse_json(const std::string& text);

/// Writes to `path` ("-" is stdout). Throws IoError.
void write_table(const ResultTable& t, const std::string& path, TableFormat f);
/// Format chosen from the extension (.json, otherwise csv). Throws IoError.
ResultTable read_table(const std::string& path);

}  // namespace transduction
