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
#ifndef QUANTROMON_TOOLS_TABLE_H
#define QUANTROMON_TOOLS_TABLE_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace quantromon::cli {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// Column-ordered records, rendered as CSV or JSON.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

enum class Format { Csv, Json };

Format parse_format(const std::string &text);

/// CSV: header row, ',' separator, '.' decimal, LF endings, doubles with 17
/// significant digits, non-finite values as inf / -inf / nan.
std::string to_csv(const Table &t);

/// {"command": ..., "columns": [...], "rows": [{column: value}, ...]} with
/// non-finite values written as the strings "inf", "-inf", "nan".
std::string to_json(const Table &t);

std::string render(const Table &t, Format format);

}  // namespace quantromon::cli

#endif
