#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/function_rings.hpp"
#include "qinv/matrix.hpp"
#include "qinv/poly_ring.hpp"

namespace qinv {

/// Expression AST. Powers carry their (validated) literal exponent directly.
struct ExprNode {
    enum Kind { IntLit, Var, Neg, Add, Sub, Mul, Div, Pow } kind;
    Int value;
    std::string name;
    std::unique_ptr<ExprNode> lhs, rhs;
    std::uint32_t exponent = 0;
    std::size_t pos = 0;
};

using ExprPtr = std::unique_ptr<ExprNode>;

namespace detail {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : lx_{text} {}

    ExprPtr parse() {
        lx_.skip_ws();
        if (lx_.pos >= lx_.text.size()) throw parse_error("empty expression", 0);
        ExprPtr e = expr();
        lx_.skip_ws();
        if (lx_.pos < lx_.text.size()) throw parse_error("unexpected trailing input", lx_.pos);
        return e;
    }

private:
    Lexer lx_;

    ExprPtr node(ExprNode::Kind k, std::size_t at) {
        auto n = std::make_unique<ExprNode>();
        n->kind = k;
        n->pos = at;
        return n;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (true) {
            std::size_t at = lx_.pos;
            if (lx_.eat('+')) {
                auto n = node(ExprNode::Add, at);
                n->lhs = std::move(left);
                n->rhs = term();
                left = std::move(n);
            } else if (lx_.eat('-')) {
                auto n = node(ExprNode::Sub, at);
                n->lhs = std::move(left);
                n->rhs = term();
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    ExprPtr term() {
        ExprPtr left = unary();
        while (true) {
            std::size_t at = lx_.pos;
            if (lx_.eat('*')) {
                auto n = node(ExprNode::Mul, at);
                n->lhs = std::move(left);
                n->rhs = unary();
                left = std::move(n);
            } else if (lx_.eat('/')) {
                auto n = node(ExprNode::Div, at);
                n->lhs = std::move(left);
                n->rhs = unary();
                left = std::move(n);
            } else {
                return left;
            }
        }
    }

    ExprPtr unary() {
        std::size_t at = lx_.pos;
        if (lx_.eat('-')) {
            auto n = node(ExprNode::Neg, at);
            n->lhs = unary();
            return n;
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        while (true) {
            std::size_t at = lx_.pos;
            if (!lx_.eat('^')) return base;
            auto n = node(ExprNode::Pow, at);
            n->lhs = std::move(base);
            n->exponent = exponent_literal();
            base = std::move(n);
        }
    }

    std::uint32_t exponent_literal() {
        lx_.skip_ws();
        std::size_t at = lx_.pos;
        bool parenthesized = lx_.eat('(');
        lx_.skip_ws();
        if (lx_.pos >= lx_.text.size() || !std::isdigit(static_cast<unsigned char>(lx_.text[lx_.pos])))
            throw parse_error("exponent must be a nonnegative integer literal", at);
        std::uint64_t e = 0;
        while (lx_.pos < lx_.text.size() && std::isdigit(static_cast<unsigned char>(lx_.text[lx_.pos]))) {
            e = e * 10 + (lx_.text[lx_.pos] - '0');
            if (e > 65535) throw parse_error("exponent too large", at);
            ++lx_.pos;
        }
        if (parenthesized && !lx_.eat(')')) throw parse_error("expected ')'", lx_.pos);
        return static_cast<std::uint32_t>(e);
    }

    ExprPtr atom() {
        lx_.skip_ws();
        std::size_t at = lx_.pos;
        if (lx_.pos >= lx_.text.size()) throw parse_error("unexpected end of input", at);
        char c = lx_.text[lx_.pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (lx_.pos < lx_.text.size() && std::isdigit(static_cast<unsigned char>(lx_.text[lx_.pos])))
                digits += lx_.text[lx_.pos++];
            auto n = node(ExprNode::IntLit, at);
            n->value = Int(digits, 10);  // base 10 even with leading zeros
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (lx_.pos < lx_.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx_.text[lx_.pos])) || lx_.text[lx_.pos] == '_'))
                id += lx_.text[lx_.pos++];
            auto n = node(ExprNode::Var, at);
            n->name = std::move(id);
            return n;
        }
        if (c == '(') {
            ++lx_.pos;
            ExprPtr e = expr();
            if (!lx_.eat(')')) throw parse_error("expected ')'", lx_.pos);
            return e;
        }
        throw parse_error(std::string("unexpected character '") + c + "'", at);
    }
};

template <typename R>
concept ring_with_vars = requires(const R& r) { r.var_elem(std::size_t{0}); };

}  // namespace detail

/// Parses text to an AST without any ring semantics.
inline ExprPtr parse_expression(std::string_view text) { return detail::Parser(text).parse(); }

template <commutative_ring R>
typename R::elem eval_expr(const R& ring, const ExprNode& e) {
    switch (e.kind) {
        case ExprNode::IntLit:
            return ring.from_int(e.value);
        case ExprNode::Var: {
            if constexpr (detail::ring_with_vars<R>) {
                auto names = ring.var_names();
                for (std::size_t i = 0; i < names.size(); ++i)
                    if (names[i] == e.name) return ring.var_elem(i);
            }
            throw parse_error("unknown variable '" + e.name + "' in " + ring.name(), e.pos);
        }
        case ExprNode::Neg:
            return ring.neg(eval_expr(ring, *e.lhs));
        case ExprNode::Add:
            return ring.add(eval_expr(ring, *e.lhs), eval_expr(ring, *e.rhs));
        case ExprNode::Sub:
            return ring.sub(eval_expr(ring, *e.lhs), eval_expr(ring, *e.rhs));
        case ExprNode::Mul:
            return ring.mul(eval_expr(ring, *e.lhs), eval_expr(ring, *e.rhs));
        case ExprNode::Div: {
            auto num = eval_expr(ring, *e.lhs);
            auto den = eval_expr(ring, *e.rhs);
            auto inv = ring.try_invert(den);
            if (inv) return ring.mul(num, *inv);
            if (ring.is_zero(den)) throw parse_error("division by zero", e.pos);
            throw parse_error("division by a non-unit in " + ring.name(), e.pos);
        }
        case ExprNode::Pow: {
            auto base = eval_expr(ring, *e.lhs);
            auto acc = ring.one();
            std::uint32_t k = e.exponent;
            while (k > 0) {
                if (k & 1) acc = ring.mul(acc, base);
                base = ring.mul(base, base);
                k >>= 1;
            }
            return acc;
        }
    }
    throw error("unreachable expression kind");
}

/// Rational-function fields admit quotients by any nonzero element.
template <>
inline RatFunc eval_expr<RatFuncField>(const RatFuncField& ring, const ExprNode& e) {
    switch (e.kind) {
        case ExprNode::IntLit:
            return ring.from_int(e.value);
        case ExprNode::Var: {
            auto names = ring.var_names();
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == e.name) return ring.var_elem(i);
            throw parse_error("unknown variable '" + e.name + "' in " + ring.name(), e.pos);
        }
        case ExprNode::Neg:
            return ring.neg(eval_expr(ring, *e.lhs));
        case ExprNode::Add:
            return ring.add(eval_expr(ring, *e.lhs), eval_expr(ring, *e.rhs));
        case ExprNode::Sub:
            return ring.sub(eval_expr(ring, *e.lhs), eval_expr(ring, *e.rhs));
        case ExprNode::Mul:
            return ring.mul(eval_expr(ring, *e.lhs), eval_expr(ring, *e.rhs));
        case ExprNode::Div: {
            auto num = eval_expr(ring, *e.lhs);
            auto den = eval_expr(ring, *e.rhs);
            if (ring.is_zero(den)) throw parse_error("division by zero", e.pos);
            return ring.div(num, den);
        }
        case ExprNode::Pow: {
            auto base = eval_expr(ring, *e.lhs);
            auto acc = ring.one();
            std::uint32_t k = e.exponent;
            while (k > 0) {
                if (k & 1) acc = ring.mul(acc, base);
                base = ring.mul(base, base);
                k >>= 1;
            }
            return acc;
        }
    }
    throw error("unreachable expression kind");
}

/// Parses and evaluates one scalar, canonicalized in the target ring.
template <commutative_ring R>
typename R::elem parse_scalar(const R& ring, std::string_view text) {
    ExprPtr ast = parse_expression(text);
    if constexpr (std::is_same_v<R, ProperRatRing>) {
        // Evaluate in the ambient rational-function field, then check that
        // the final value satisfies every properness constraint.
        RatFuncField field = ring.field_view();
        RatFunc v = eval_expr(field, *ast);
        ring.validate(v);
        return v;
    } else {
        return eval_expr(ring, *ast);
    }
}

/// Elementwise parse; rows must be rectangular.
template <commutative_ring R>
Matrix<R> parse_matrix(const R& ring, const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows[0].empty()) throw dimension_error("matrix must have at least one row and column");
    const std::size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) throw dimension_error("ragged rows in matrix literal");
    Matrix<R> m(ring, static_cast<int>(rows.size()), static_cast<int>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            try {
                m.at(static_cast<int>(i), static_cast<int>(j)) = parse_scalar(ring, rows[i][j]);
            } catch (const parse_error& ex) {
                throw parse_error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + ex.what(),
                                  ex.pos);
            } catch (const value_outside_ring& ex) {
                throw value_outside_ring("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " +
                                         ex.what());
            }
        }
    }
    return m;
}

template <commutative_ring R>
std::string print_canonical(const R& ring, const typename R::elem& x) {
    return ring.to_string(x);
}

template <commutative_ring R>
std::string print_canonical(const Matrix<R>& m) {
    return m.to_string();
}

}  // namespace qinv
