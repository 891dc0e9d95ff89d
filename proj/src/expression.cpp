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

#include "brc/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <variant>

#include "brc/errors.hpp"

namespace brc {

struct ExprNode {
    struct Const {
        double v;
    };
    struct Var {
        int index;
    };
    struct Unary {
        UnaryFn fn;
        ExprPtr arg;
    };
    struct Binary {
        BinOp op;
        ExprPtr lhs, rhs;
    };
    struct Pow {
        ExprPtr base;
        long long exponent;
    };

    std::variant<Const, Var, Unary, Binary, Pow> node;
};

namespace {

ExprPtr clone(const ExprPtr& e) {
    if (!e) return nullptr;
    return std::visit(
        [](const auto& n) -> ExprPtr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, ExprNode::Const> || std::is_same_v<T, ExprNode::Var>) {
                return std::make_unique<ExprNode>(ExprNode{n});
            } else if constexpr (std::is_same_v<T, ExprNode::Unary>) {
                return std::make_unique<ExprNode>(ExprNode{ExprNode::Unary{n.fn, clone(n.arg)}});
            } else if constexpr (std::is_same_v<T, ExprNode::Binary>) {
                return std::make_unique<ExprNode>(
                    ExprNode{ExprNode::Binary{n.op, clone(n.lhs), clone(n.rhs)}});
            } else {
                return std::make_unique<ExprNode>(
                    ExprNode{ExprNode::Pow{clone(n.base), n.exponent}});
            }
        },
        e->node);
}

bool equal_trees(const ExprNode* a, const ExprNode* b) {
    if (a->node.index() != b->node.index()) return false;
    if (auto* c = std::get_if<ExprNode::Const>(&a->node))
        return c->v == std::get<ExprNode::Const>(b->node).v;
    if (auto* v = std::get_if<ExprNode::Var>(&a->node))
        return v->index == std::get<ExprNode::Var>(b->node).index;
    if (auto* u = std::get_if<ExprNode::Unary>(&a->node)) {
        const auto& ub = std::get<ExprNode::Unary>(b->node);
        return u->fn == ub.fn && equal_trees(u->arg.get(), ub.arg.get());
    }
    if (auto* bi = std::get_if<ExprNode::Binary>(&a->node)) {
        const auto& bb = std::get<ExprNode::Binary>(b->node);
        return bi->op == bb.op && equal_trees(bi->lhs.get(), bb.lhs.get()) &&
               equal_trees(bi->rhs.get(), bb.rhs.get());
    }
    const auto& pa = std::get<ExprNode::Pow>(a->node);
    const auto& pb = std::get<ExprNode::Pow>(b->node);
    return pa.exponent == pb.exponent && equal_trees(pa.base.get(), pb.base.get());
}

// ---------------------------------------------------------------------------
// Lexer / recursive-descent parser
// ---------------------------------------------------------------------------

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    double number = 0.0;
    bool number_is_integer = false;
    long long int_value = 0;
    std::string ident;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    [[noreturn]] void fail(const std::string& msg, int line, int col) const {
        throw ParseError(msg, line, col);
    }

    void bump() {
        if (i_ < s_.size() && s_[i_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++i_;
    }

    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) bump();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= s_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        const char c = s_[i_];
        switch (c) {
            case '+': tok_.kind = Tok::Plus; bump(); return;
            case '-': tok_.kind = Tok::Minus; bump(); return;
            case '*': tok_.kind = Tok::Star; bump(); return;
            case '/': tok_.kind = Tok::Slash; bump(); return;
            case '^': tok_.kind = Tok::Caret; bump(); return;
            case '(': tok_.kind = Tok::LParen; bump(); return;
            case ')': tok_.kind = Tok::RParen; bump(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = i_;
            bool is_integer = true;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) bump();
            if (i_ < s_.size() && s_[i_] == '.') {
                is_integer = false;
                bump();
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) bump();
            }
            if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
                is_integer = false;
                bump();
                if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) bump();
                if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                    fail("malformed number literal", tok_.line, tok_.col);
                while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) bump();
            }
            const std::string lit(s_.substr(start, i_ - start));
            tok_.kind = Tok::Number;
            tok_.number = std::strtod(lit.c_str(), nullptr);
            tok_.number_is_integer = is_integer;
            if (is_integer) tok_.int_value = std::strtoll(lit.c_str(), nullptr, 10);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                bump();
            tok_.kind = Tok::Ident;
            tok_.ident = std::string(s_.substr(start, i_ - start));
            return;
        }
        fail(std::string("unexpected character '") + c + "'", tok_.line, tok_.col);
    }
};

class Parser {
public:
    Parser(std::string_view text, std::span<const std::string> params)
        : lex_(text), params_(params) {}

    ExprPtr run() {
        ExprPtr e = parse_sum();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End) throw ParseError("unexpected trailing input", t.line, t.col);
        return e;
    }

private:
    Lexer lex_;
    std::span<const std::string> params_;

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            const BinOp op = lex_.take().kind == Tok::Plus ? BinOp::Add : BinOp::Sub;
            ExprPtr rhs = parse_term();
            lhs = std::make_unique<ExprNode>(
                ExprNode{ExprNode::Binary{op, std::move(lhs), std::move(rhs)}});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            const BinOp op = lex_.take().kind == Tok::Star ? BinOp::Mul : BinOp::Div;
            ExprPtr rhs = parse_factor();
            lhs = std::make_unique<ExprNode>(
                ExprNode{ExprNode::Binary{op, std::move(lhs), std::move(rhs)}});
        }
        return lhs;
    }

    ExprPtr parse_factor() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            ExprPtr arg = parse_factor();
            return std::make_unique<ExprNode>(
                ExprNode{ExprNode::Unary{UnaryFn::Neg, std::move(arg)}});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        while (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            long long sign = 1;
            if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                sign = -1;
            }
            const Token t = lex_.take();
            if (t.kind != Tok::Number || !t.number_is_integer)
                throw ParseError("exponent must be an integer literal", t.line, t.col);
            base = std::make_unique<ExprNode>(
                ExprNode{ExprNode::Pow{std::move(base), sign * t.int_value}});
        }
        return base;
    }

    ExprPtr parse_atom() {
        Token t = lex_.take();
        if (t.kind == Tok::Number)
            return std::make_unique<ExprNode>(ExprNode{ExprNode::Const{t.number}});
        if (t.kind == Tok::LParen) {
            ExprPtr e = parse_sum();
            const Token r = lex_.take();
            if (r.kind != Tok::RParen) throw ParseError("expected ')'", r.line, r.col);
            return e;
        }
        if (t.kind == Tok::Ident) {
            if (lex_.peek().kind == Tok::LParen) {
                const UnaryFn fn = function_named(t);
                lex_.take();
                ExprPtr arg = parse_sum();
                const Token r = lex_.take();
                if (r.kind != Tok::RParen) throw ParseError("expected ')'", r.line, r.col);
                return std::make_unique<ExprNode>(ExprNode{ExprNode::Unary{fn, std::move(arg)}});
            }
            for (std::size_t i = 0; i < params_.size(); ++i)
                if (params_[i] == t.ident)
                    return std::make_unique<ExprNode>(
                        ExprNode{ExprNode::Var{static_cast<int>(i)}});
            throw ParseError("unknown identifier '" + t.ident + "'", t.line, t.col);
        }
        throw ParseError("expected a value", t.line, t.col);
    }

    static UnaryFn function_named(const Token& t) {
        const std::string& s = t.ident;
        if (s == "sin") return UnaryFn::Sin;
        if (s == "cos") return UnaryFn::Cos;
        if (s == "sinh") return UnaryFn::Sinh;
        if (s == "cosh") return UnaryFn::Cosh;
        if (s == "exp") return UnaryFn::Exp;
        if (s == "log") return UnaryFn::Log;
        if (s == "sqrt") return UnaryFn::Sqrt;
        throw ParseError("unknown function '" + s + "'", t.line, t.col);
    }
};

// ---------------------------------------------------------------------------
// Printing. Precedence: +,- (1) < *,/ (2) < unary minus (3) < ^ (4).
// A right operand at equal precedence gets parentheses so that the
// left-associative parser rebuilds the identical tree.
// ---------------------------------------------------------------------------

int precedence(const ExprNode* e) {
    if (std::holds_alternative<ExprNode::Const>(e->node) ||
        std::holds_alternative<ExprNode::Var>(e->node))
        return 5;
    if (auto* u = std::get_if<ExprNode::Unary>(&e->node))
        return u->fn == UnaryFn::Neg ? 3 : 5;
    if (std::holds_alternative<ExprNode::Pow>(e->node)) return 4;
    const auto& b = std::get<ExprNode::Binary>(e->node);
    return (b.op == BinOp::Add || b.op == BinOp::Sub) ? 1 : 2;
}

void print_node(const ExprNode* e, std::span<const std::string> params, std::string& out);

void print_child(const ExprNode* child, std::span<const std::string> params, bool parens,
                 std::string& out) {
    if (parens) out += '(';
    print_node(child, params, out);
    if (parens) out += ')';
}

void print_node(const ExprNode* e, std::span<const std::string> params, std::string& out) {
    if (auto* c = std::get_if<ExprNode::Const>(&e->node)) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", c->v);
        out += buf;
        return;
    }
    if (auto* v = std::get_if<ExprNode::Var>(&e->node)) {
        out += params[v->index];
        return;
    }
    if (auto* u = std::get_if<ExprNode::Unary>(&e->node)) {
        if (u->fn == UnaryFn::Neg) {
            out += '-';
            print_child(u->arg.get(), params, precedence(u->arg.get()) <= 3, out);
            return;
        }
        switch (u->fn) {
            case UnaryFn::Sin: out += "sin"; break;
            case UnaryFn::Cos: out += "cos"; break;
            case UnaryFn::Sinh: out += "sinh"; break;
            case UnaryFn::Cosh: out += "cosh"; break;
            case UnaryFn::Exp: out += "exp"; break;
            case UnaryFn::Log: out += "log"; break;
            case UnaryFn::Sqrt: out += "sqrt"; break;
            case UnaryFn::Neg: break;
        }
        out += '(';
        print_node(u->arg.get(), params, out);
        out += ')';
        return;
    }
    if (auto* p = std::get_if<ExprNode::Pow>(&e->node)) {
        print_child(p->base.get(), params, precedence(p->base.get()) < 4, out);
        out += '^';
        if (p->exponent < 0) out += '-';
        out += std::to_string(p->exponent < 0 ? -p->exponent : p->exponent);
        return;
    }
    const auto& b = std::get<ExprNode::Binary>(e->node);
    const int prec = precedence(e);
    print_child(b.lhs.get(), params, precedence(b.lhs.get()) < prec, out);
    switch (b.op) {
        case BinOp::Add: out += " + "; break;
        case BinOp::Sub: out += " - "; break;
        case BinOp::Mul: out += "*"; break;
        case BinOp::Div: out += "/"; break;
    }
    print_child(b.rhs.get(), params, precedence(b.rhs.get()) <= prec, out);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double eval_node(const ExprNode* e, std::span<const double> values) {
    if (auto* c = std::get_if<ExprNode::Const>(&e->node)) return c->v;
    if (auto* v = std::get_if<ExprNode::Var>(&e->node)) return values[v->index];
    if (auto* u = std::get_if<ExprNode::Unary>(&e->node)) {
        const double a = eval_node(u->arg.get(), values);
        switch (u->fn) {
            case UnaryFn::Neg: return -a;
            case UnaryFn::Sin: return std::sin(a);
            case UnaryFn::Cos: return std::cos(a);
            case UnaryFn::Sinh: return std::sinh(a);
            case UnaryFn::Cosh: return std::cosh(a);
            case UnaryFn::Exp: return std::exp(a);
            case UnaryFn::Log:
                if (!(a > 0.0)) throw NumericalError("log of non-positive value");
                return std::log(a);
            case UnaryFn::Sqrt:
                if (!(a > 0.0)) throw NumericalError("sqrt of non-positive value");
                return std::sqrt(a);
        }
    }
    if (auto* p = std::get_if<ExprNode::Pow>(&e->node)) {
        const double b = eval_node(p->base.get(), values);
        if (p->exponent < 0 && b == 0.0) throw NumericalError("division by zero");
        return std::pow(b, static_cast<double>(p->exponent));
    }
    const auto& b = std::get<ExprNode::Binary>(e->node);
    const double l = eval_node(b.lhs.get(), values);
    const double r = eval_node(b.rhs.get(), values);
    switch (b.op) {
        case BinOp::Add: return l + r;
        case BinOp::Sub: return l - r;
        case BinOp::Mul: return l * r;
        case BinOp::Div:
            if (r == 0.0) throw NumericalError("division by zero");
            return l / r;
    }
    return 0.0;
}

Jet eval_jet_node(const ExprNode* e, std::span<const double> values, int order,
                  std::span<const int> dirs) {
    const int nv = static_cast<int>(dirs.size());
    if (auto* c = std::get_if<ExprNode::Const>(&e->node))
        return Jet::constant(nv, order, c->v);
    if (auto* v = std::get_if<ExprNode::Var>(&e->node)) {
        for (int d = 0; d < nv; ++d)
            if (dirs[d] == v->index) return Jet::variable(nv, order, d, values[v->index]);
        return Jet::constant(nv, order, values[v->index]);
    }
    if (auto* u = std::get_if<ExprNode::Unary>(&e->node)) {
        const Jet a = eval_jet_node(u->arg.get(), values, order, dirs);
        switch (u->fn) {
            case UnaryFn::Neg: return -a;
            case UnaryFn::Sin: return sin(a);
            case UnaryFn::Cos: return cos(a);
            case UnaryFn::Sinh: return sinh(a);
            case UnaryFn::Cosh: return cosh(a);
            case UnaryFn::Exp: return exp(a);
            case UnaryFn::Log: return log(a);
            case UnaryFn::Sqrt: return sqrt(a);
        }
    }
    if (auto* p = std::get_if<ExprNode::Pow>(&e->node))
        return pow_int(eval_jet_node(p->base.get(), values, order, dirs), p->exponent);
    const auto& b = std::get<ExprNode::Binary>(e->node);
    const Jet l = eval_jet_node(b.lhs.get(), values, order, dirs);
    const Jet r = eval_jet_node(b.rhs.get(), values, order, dirs);
    switch (b.op) {
        case BinOp::Add: return l + r;
        case BinOp::Sub: return l - r;
        case BinOp::Mul: return l * r;
        case BinOp::Div: return l / r;
    }
    return Jet(nv, order);
}

}  // namespace

Expression::Expression() = default;
Expression::Expression(Expression&&) noexcept = default;
Expression& Expression::operator=(Expression&&) noexcept = default;
Expression::~Expression() = default;

Expression::Expression(const Expression& rhs)
    : root_(clone(rhs.root_)), params_(rhs.params_) {}

Expression& Expression::operator=(const Expression& rhs) {
    if (this != &rhs) {
        root_ = clone(rhs.root_);
        params_ = rhs.params_;
    }
    return *this;
}

Expression::Expression(ExprPtr root, std::vector<std::string> params)
    : root_(std::move(root)), params_(std::move(params)) {}

Expression Expression::parse(std::string_view text, std::span<const std::string> params) {
    if (text.empty()) throw ParseError("empty expression", 1, 1);
    Parser p(text, params);
    return Expression(p.run(), std::vector<std::string>(params.begin(), params.end()));
}

std::string Expression::str() const {
    std::string out;
    print_node(root_.get(), params_, out);
    return out;
}

bool Expression::operator==(const Expression& rhs) const {
    return equal_trees(root_.get(), rhs.root_.get());
}

double Expression::eval(std::span<const double> values) const {
    return eval_node(root_.get(), values);
}

Jet Expression::eval_jet(std::span<const double> values, int order,
                         std::span<const int> directions) const {
    if (order < 0 || order > Jet::kMaxOrder)
        throw ValidationError("eval_jet: order out of range");
    return eval_jet_node(root_.get(), values, order, directions);
}

}  // namespace brc
