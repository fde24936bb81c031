// Copyright 2026 The Quantromon Toolkit Authors
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

#include "table.h"

#include <cmath>

#include "json.hpp"
#include "quantromon/errors.h"
#include "quantromon/shot_io.h"

namespace quantromon::cli {

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row width does not match its header");
    }
    rows.push_back(std::move(row));
}

Format parse_format(const std::string &text) {
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    throw ValidationError("unknown output format '" + text + "' (expected csv or json)");
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

std::string csv_cell(const Cell &c) {
    return std::visit(
        [](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_double(v);
            } else if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return csv_field(v);
            }
        },
        c);
}

}  // namespace

std::string to_csv(const Table &t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); i++) {
        out += (i ? "," : "") + csv_field(t.columns[i]);
    }
    out += "\n";
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); i++) {
            out += (i ? "," : "") + csv_cell(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const Table &t) {
    using Json = nlohmann::ordered_json;
    Json doc;
    doc["command"] = t.command;
    doc["columns"] = t.columns;
    doc["rows"] = Json::array();
    for (const auto &row : t.rows) {
        Json rec = Json::object();
        for (std::size_t i = 0; i < row.size(); i++) {
            std::visit(
                [&](const auto &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        if (std::isfinite(v)) {
                            rec[t.columns[i]] = v;
                        } else {
                            rec[t.columns[i]] = format_double(v);
                        }
                    } else {
                        rec[t.columns[i]] = v;
                    }
                },
                row[i]);
        }
        doc["rows"].push_back(std::move(rec));
    }
    return doc.dump(2) + "\n";
}

std::string render(const Table &t, Format format) {
    return format == Format::Csv ? to_csv(t) : to_json(t);
}

}  // namespace quantromon::cli
