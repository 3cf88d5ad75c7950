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

#include "transduction/table.hpp"

#include "transduction/errors.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace transduction {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_cell(const std::string& cell) {
    if (cell.empty()) {
        return kNaN;
    }
    if (cell == "inf") {
        return kInf;
    }
    if (cell == "-inf") {
        return -kInf;
    }
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) {
        throw IoError("malformed table value '" + cell + "'");
    }
    return v;
}

void json_string(std::string& out, const std::string& s) {
    out += nlohmann::json(s).dump();
}

}  // namespace

std::size_t ResultTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw ConfigError("table has no column '" + name + "'");
}

std::vector<double> ResultTable::column_values(const std::string& name) const {
    const std::size_t c = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        out.push_back(row[c]);
    }
    return out;
}

std::string ResultTable::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata) {
        if (k == key) {
            return v;
        }
    }
    return {};
}

TableFormat parse_format(const std::string& text) {
    if (text == "csv") {
        return TableFormat::Csv;
    }
    if (text == "json") {
        return TableFormat::Json;
    }
    throw ConfigError("unknown output format '" + text + "' (expected csv or json)");
}

const char* to_string(TableFormat f) noexcept { return f == TableFormat::Json ? "json" : "csv"; }

std::string format_value(double v) {
    if (std::isnan(v)) {
        return {};
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const ResultTable& t) {
    std::string out;
    for (const auto& [key, value] : t.metadata) {
        out += "# " + key + ": " + value + "\n";
    }
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i ? "," : "") + t.columns[i];
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ",";
            }
            out += format_value(row[i]);
        }
        out += "\n";
    }
    return out;
}

namespace {

// "-0" would read back as the integer 0.
std::string json_value(double v) {
    if (std::isnan(v)) {
        return "null";
    }
    if (std::isinf(v)) {
        return "\"" + format_value(v) + "\"";
    }
    if (v == 0.0 && std::signbit(v)) {
        return "-0.0";
    }
    return format_value(v);
}

}  // namespace

std::string to_json(const ResultTable& t) {
    std::string out = "{\n  \"metadata\": [";
    for (std::size_t i = 0; i < t.metadata.size(); ++i) {
        out += i ? ",\n    [" : "\n    [";
        json_string(out, t.metadata[i].first);
        out += ", ";
        json_string(out, t.metadata[i].second);
        out += "]";
    }
    out += t.metadata.empty() ? "],\n" : "\n  ],\n";
    out += "  \"columns\": [";
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) {
            out += ", ";
        }
        json_string(out, t.columns[i]);
    }
    out += "],\n  \"rows\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n    [" : "\n    [";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
            if (i) {
                out += ", ";
            }
            const double v = t.rows[r][i];
            out += json_value(v);
        }
        out += "]";
    }
    out += t.rows.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

std::string serialize(const ResultTable& t, TableFormat f) {
    return f == TableFormat::Json ? to_json(t) : to_csv(t);
}

ResultTable parse_csv(const std::string& text) {
    ResultTable t;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
        if (!header && !line.empty() && line[0] == '#') {
            const std::string body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
            const auto colon = body.find(": ");
            if (colon == std::string::npos) {
                t.metadata.emplace_back(body, "");
            } else {
                t.metadata.emplace_back(body.substr(0, colon), body.substr(colon + 2));
            }
            continue;
        }
        if (!header) {
            t.columns = split(line, ',');
            header = true;
            continue;
        }
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != t.columns.size()) {
            throw IoError("table row has " + std::to_string(cells.size()) + " cells, expected " +
                          std::to_string(t.columns.size()));
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            row.push_back(parse_cell(c));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

ResultTable parse_json(const std::string& text) {
    ResultTable t;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto& kv : doc.at("metadata")) {
            t.metadata.emplace_back(kv.at(0).get<std::string>(), kv.at(1).get<std::string>());
        }
        t.columns = doc.at("columns").get<std::vector<std::string>>();
        for (const auto& r : doc.at("rows")) {
            std::vector<double> row;
            for (const auto& v : r) {
                if (v.is_null()) {
                    row.push_back(kNaN);
                } else if (v.is_string()) {
                    row.push_back(parse_cell(v.get<std::string>()));
                } else {
                    row.push_back(v.get<double>());
                }
            }
            if (row.size() != t.columns.size()) {
                throw IoError("table row length does not match the columns");
            }
            t.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed json table: ") + e.what());
    }
    return t;
}

void write_table(const ResultTable& t, const std::string& path, TableFormat f) {
    const std::string text = serialize(t, f);
    if (path == "-" || path.empty()) {
        std::cout.write(text.data(), static_cast<std::streamsize>(text.size()));
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

ResultTable read_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? parse_json(buf.str()) : parse_csv(buf.str());
}

}  // namespace transduction
