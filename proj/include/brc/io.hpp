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

#ifndef BRC_IO_HPP
#define BRC_IO_HPP

#include <array>
#include <string>
#include <vector>

namespace brc {

struct PointTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string to_csv(const PointTable& table);

/// OBJ point cloud ("v x y z" lines) from the first three columns.
std::string to_obj(const PointTable& table);

/// Writes to a file, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& content);

}  // namespace brc

#endif
