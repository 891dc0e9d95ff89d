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

#ifndef BRC_EXPRESSION_HPP
#define BRC_EXPRESSION_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brc/jet.hpp"

namespace brc {

enum class UnaryFn { Neg, Sin, Cos, Sinh, Cosh, Exp, Log, Sqrt };
enum class BinOp { Add, Sub, Mul, Div };

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

/// An embedding-component expression over a fixed parameter list
/// (u1..u_{n-1}, t). Immutable after parsing; evaluation is pure.
class Expression {
public:
    Expression();
    Expression(const Expression& rhs);
    Expression(Expression&&) noexcept;
    Expression& operator=(const Expression& rhs);
    Expression& operator=(Expression&&) noexcept;
    ~Expression();

    /// Parses with the usual precedence (pow > unary minus > *,/ > +,-),
    /// all binary operators left-associative. `params` is the set of legal
    /// variable names. Throws ParseError (with line/column) on bad syntax,
    /// unknown identifiers, or non-integer exponents.
    static Expression parse(std::string_view text, std::span<const std::string> params);

    /// Canonical printing; parse(str()) reproduces the same tree.
    std::string str() const;

    bool operator==(const Expression& rhs) const;

    /// Plain evaluation at the given parameter values.
    double eval(std::span<const double> values) const;

    /// Truncated-Taylor evaluation: jet of this expression at `values`,
    /// differentiated in the parameter subset `directions` up to `order`.
    /// `order` may go up to Jet::kMaxOrder; callers enforcing the public
    /// DSL contract cap it at 4.
    Jet eval_jet(std::span<const double> values, int order,
                 std::span<const int> directions) const;

    const std::vector<std::string>& params() const { return params_; }

private:
    ExprPtr root_;
    std::vector<std::string> params_;

    Expression(ExprPtr root, std::vector<std::string> params);
};

}  // namespace brc

#endif
