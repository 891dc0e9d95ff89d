/*
 * Copyright 2026 The brcaustics Authors
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

#include "brc/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "brc/errors.hpp"

namespace brc {

namespace {

void append_number(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

std::string to_csv(const PointTable& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            append_number(out, row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_obj(const PointTable& table) {
    if (table.columns.size() < 3)
        throw ValidationError("obj export needs at least three coordinate columns");
    std::string out = "# point cloud, " + std::to_string(table.rows.size()) + " vertices\n";
    for (const auto& row : table.rows) {
        out += "v ";
        append_number(out, row[0]);
        out += ' ';
        append_number(out, row[1]);
        out += ' ';
        append_number(out, row[2]);
        out += '\n';
    }
    return out;
}

void write_text(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << content;
}

}  // namespace brc
