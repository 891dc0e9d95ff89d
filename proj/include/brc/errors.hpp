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

#ifndef BRC_ERRORS_HPP
#define BRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brc {

/// Bad or inconsistent user input (scene files, expressions, argument
/// shapes). The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression syntax errors carry a 1-based line/column.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, int line, int column)
        : ValidationError(what + " (line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

/// A computation that could not be completed to the requested accuracy
/// (method disagreement, degenerate frame, diverging refinement). The CLI
/// maps these to exit code 1.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace brc

#endif
