#pragma once

// Parser for polynomial expressions in x over Q: + - * ^ and parentheses,
// integer and p/q rational constants, juxtaposition ("3x^2").
// Keeps the syntactic product structure so factored input survives as the
// supplied factor list instead of being expanded and re-factored.

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "taugraph/poly.hpp"

namespace taugraph {

namespace detail {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Kind { Num, Var, Add, Sub, Mul, Neg, Pow };
    Kind kind;
    BigRat value;      // Num
    ExprPtr lhs, rhs;  // binary ops; Neg/Pow use lhs
    unsigned exponent = 0;
};

inline ExprPtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        skip_ws();
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (eat('+')) {
                ExprPtr rhs = parse_term();
                lhs = make_node({ExprNode::Kind::Add, {}, lhs, rhs, 0});
            } else if (eat('-')) {
                ExprPtr rhs = parse_term();
                lhs = make_node({ExprNode::Kind::Sub, {}, lhs, rhs, 0});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (eat('*')) {
                ExprPtr rhs = parse_unary();
                lhs = make_node({ExprNode::Kind::Mul, {}, lhs, rhs, 0});
            } else {
                // juxtaposition: "3x", "2(x+1)", "x(x-1)"
                char c = peek();
                if (c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                    ExprPtr rhs = parse_unary();
                    lhs = make_node({ExprNode::Kind::Mul, {}, lhs, rhs, 0});
                } else {
                    return lhs;
                }
            }
        }
    }

    ExprPtr parse_unary() {
        if (eat('-')) {
            ExprPtr inner = parse_unary();
            return make_node({ExprNode::Kind::Neg, {}, inner, nullptr, 0});
        }
        if (eat('+')) return parse_unary();
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (eat('^')) {
            unsigned e = parse_uint();
            return make_node({ExprNode::Kind::Pow, {}, base, nullptr, e});
        }
        return base;
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (c == 'x') {
            ++pos_;
            return make_node({ExprNode::Kind::Var, {}, nullptr, nullptr, 0});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = parse_integer();
            BigRat v(num);
            // "p/q" is a rational constant, not division
            std::size_t save = pos_;
            if (eat('/')) {
                skip_ws();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    BigInt den = parse_integer();
                    if (den == 0) fail("zero denominator");
                    v = BigRat(num, den);
                } else {
                    pos_ = save;
                }
            }
            return make_node({ExprNode::Kind::Num, v, nullptr, nullptr, 0});
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned parse_uint() {
        BigInt v = parse_integer();
        if (v > 1000000) fail("exponent too large");
        return static_cast<unsigned>(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline Poly expand_expr(const ExprPtr& n) {
    switch (n->kind) {
        case ExprNode::Kind::Num: return Poly(n->value);
        case ExprNode::Kind::Var: return Poly::variable();
        case ExprNode::Kind::Add: return expand_expr(n->lhs) + expand_expr(n->rhs);
        case ExprNode::Kind::Sub: return expand_expr(n->lhs) - expand_expr(n->rhs);
        case ExprNode::Kind::Mul: return expand_expr(n->lhs) * expand_expr(n->rhs);
        case ExprNode::Kind::Neg: return expand_expr(n->lhs).scaled(BigRat(-1));
        case ExprNode::Kind::Pow: return expand_expr(n->lhs).pow(n->exponent);
    }
    throw ParseError("corrupt expression tree");
}

// Flattens the top-level multiplicative structure of the expression into
// scalar * prod(base_i ^ exp_i) with each base expanded. Sums stay opaque.
struct ProductParts {
    BigRat scalar{1};
    std::vector<std::pair<Poly, unsigned>> bases;
};

inline void collect_product(const ExprPtr& n, unsigned exp, ProductParts& out) {
    switch (n->kind) {
        case ExprNode::Kind::Num: {
            BigRat v = n->value;
            for (unsigned i = 0; i < exp; ++i) out.scalar *= v;
            return;
        }
        case ExprNode::Kind::Mul:
            collect_product(n->lhs, exp, out);
            collect_product(n->rhs, exp, out);
            return;
        case ExprNode::Kind::Neg:
            if (exp % 2 == 1) out.scalar = -out.scalar;
            collect_product(n->lhs, exp, out);
            return;
        case ExprNode::Kind::Pow:
            collect_product(n->lhs, exp * n->exponent, out);
            return;
        default:
            if (exp > 0) out.bases.emplace_back(expand_expr(n), exp);
            return;
    }
}

} // namespace detail

// Parses a polynomial expression; returns the expanded polynomial together
// with its syntactic product decomposition.
inline std::pair<Poly, detail::ProductParts> parse_poly_expression(std::string_view text) {
    detail::ExprParser p(text);
    detail::ExprPtr ast = p.parse();
    Poly expanded = detail::expand_expr(ast);
    detail::ProductParts parts;
    detail::collect_product(ast, 1, parts);
    return {expanded, parts};
}

} // namespace taugraph
