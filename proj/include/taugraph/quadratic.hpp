#pragma once

// Imaginary quadratic integer rings Z[sqrt(d)] for squarefree d < 0 from a
// fixed allowlist. The finite unit group (4 units for d = -1, otherwise
// {1,-1}) is what makes canonical associate representatives well defined.

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taugraph/numeric.hpp"

namespace taugraph {

struct QuadElem {
    BigInt a{0}; // rational part
    BigInt b{0}; // coefficient of sqrt(d)

    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

class QuadraticDomain {
public:
    using element_type = QuadElem;
    using unit_type = QuadElem;
    static constexpr std::string_view kind = "quad";

    explicit QuadraticDomain(long long d) : d_(d) {
        static constexpr std::array<long long, 5> allow{-1, -2, -5, -6, -10};
        if (std::find(allow.begin(), allow.end(), d) == allow.end())
            throw UsageError("quadratic discriminant must be one of -1, -2, -5, -6, -10");
    }

    long long discriminant() const { return d_; }
    std::string name() const { return "quad:" + std::to_string(d_); }

    BigInt norm(const element_type& e) const { return e.a * e.a - BigInt(d_) * e.b * e.b; }

    bool is_zero(const element_type& e) const { return e.a == 0 && e.b == 0; }
    bool is_unit(const element_type& e) const { return norm(e) == 1; }

    element_type mul(const element_type& x, const element_type& y) const {
        return {x.a * y.a + BigInt(d_) * x.b * y.b, x.a * y.b + x.b * y.a};
    }

    element_type conj(const element_type& e) const { return {e.a, -e.b}; }
    element_type neg(const element_type& e) const { return {-e.a, -e.b}; }

    std::vector<unit_type> units() const {
        if (d_ == -1) return {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        return {{1, 0}, {-1, 0}};
    }

    unit_type unit_one() const { return {1, 0}; }
    unit_type unit_mul(const unit_type& u, const unit_type& v) const { return mul(u, v); }
    element_type apply_unit(const unit_type& u, const element_type& e) const { return mul(u, e); }

    unit_type as_unit(const element_type& e) const {
        if (!is_unit(e)) throw DomainError(to_string(e) + " is not a unit");
        return e;
    }

    // d = -1: the representative of the four-element orbit with a > 0, b >= 0.
    // Otherwise: first nonzero coordinate positive.
    bool is_canonical(const element_type& e) const {
        if (is_zero(e)) return false;
        if (d_ == -1) return e.a > 0 && e.b >= 0;
        if (e.a != 0) return e.a > 0;
        return e.b > 0;
    }

    std::pair<element_type, unit_type> canonicalize(const element_type& e) const {
        if (is_zero(e)) throw DomainError("zero has no associate class");
        for (const unit_type& u : units()) {
            element_type cand = mul(u, e);
            if (is_canonical(cand)) {
                // e = u^-1 * cand; the inverse of a unit is its conjugate
                // divided by its norm, which is 1.
                return {cand, conj(u)};
            }
        }
        throw DomainError("internal: no canonical associate found");
    }

    std::optional<element_type> exact_divide(const element_type& x, const element_type& z) const {
        if (is_zero(z)) throw DomainError("division by zero");
        element_type w = mul(x, conj(z));
        BigInt n = norm(z);
        if (w.a % n != 0 || w.b % n != 0) return std::nullopt;
        return element_type{w.a / n, w.b / n};
    }

    // Canonical non-unit divisors, including x's own representative.
    // Candidates are bounded by norm(cand) dividing norm(x).
    std::vector<element_type> divisors(const element_type& x) const {
        BigInt nx = norm(x);
        if (nx == 0) throw DomainError("zero has no divisors");
        std::vector<element_type> out;
        BigInt amax = isqrt(nx);
        BigInt bmax = isqrt(nx / BigInt(-d_));
        for (BigInt a = 0; a <= amax; ++a) {
            for (BigInt b = -bmax; b <= bmax; ++b) {
                element_type cand{a, b};
                if (!is_canonical(cand)) continue;
                BigInt nc = norm(cand);
                if (nc <= 1 || nx % nc != 0) continue;
                if (!exact_divide(x, cand)) continue;
                out.push_back(cand);
            }
        }
        std::sort(out.begin(), out.end(),
                  [this](const element_type& p, const element_type& q) { return less(p, q); });
        return out;
    }

    BigInt measure(const element_type& e) const {
        if (is_zero(e)) throw DomainError("zero has no measure");
        return norm(e);
    }

    bool equal(const element_type& a, const element_type& b) const { return a == b; }

    bool less(const element_type& x, const element_type& y) const {
        BigInt nx = norm(x), ny = norm(y);
        if (nx != ny) return nx < ny;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }

    std::string to_string(const element_type& e) const {
        std::string root = d_ == -1 ? "i" : "sqrt(" + std::to_string(d_) + ")";
        if (e.b == 0) return e.a.str();
        std::string bpart;
        if (e.b == 1) bpart = root;
        else if (e.b == -1) bpart = "-" + root;
        else bpart = e.b.str() + "*" + root;
        if (e.a == 0) return bpart;
        if (e.b > 0) return e.a.str() + "+" + bpart;
        return e.a.str() + bpart;
    }

    std::string unit_to_string(const unit_type& u) const { return to_string(u); }

    // Accepts sums of terms: integers, [k*]sqrt(d), and "i" when d = -1.
    element_type parse(std::string_view text) const {
        element_type acc{0, 0};
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        auto parse_int = [&]() -> BigInt {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (start == i) throw ParseError("expected integer at position " + std::to_string(i));
            return BigInt(std::string(text.substr(start, i - start)));
        };
        skip_ws();
        bool first = true;
        while (i < text.size()) {
            int sign = 1;
            skip_ws();
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-' at position " + std::to_string(i));
            }
            first = false;
            if (i >= text.size()) throw ParseError("dangling sign");
            BigInt coeff = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = parse_int();
                have_coeff = true;
                skip_ws();
                if (i < text.size() && text[i] == '*') {
                    ++i;
                    skip_ws();
                }
            }
            if (i < text.size() && (text[i] == 'i' || text.substr(i).starts_with("sqrt"))) {
                if (text[i] == 'i') {
                    if (d_ != -1) throw ParseError("'i' only names sqrt(-1)");
                    ++i;
                } else {
                    i += 4;
                    skip_ws();
                    if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' after sqrt");
                    ++i;
                    skip_ws();
                    bool dneg = false;
                    if (i < text.size() && text[i] == '-') {
                        dneg = true;
                        ++i;
                    }
                    BigInt dv = parse_int();
                    if (dneg) dv = -dv;
                    if (dv != d_)
                        throw ParseError("sqrt argument " + dv.str() + " does not match this ring");
                    skip_ws();
                    if (i >= text.size() || text[i] != ')') throw ParseError("expected ')'");
                    ++i;
                }
                acc.b += sign * coeff;
            } else if (have_coeff) {
                acc.a += sign * coeff;
            } else {
                throw ParseError("unexpected character at position " + std::to_string(i));
            }
            skip_ws();
        }
        if (first) throw ParseError("empty element");
        return acc;
    }

    std::vector<unit_type> unit_sample() const { return units(); }

private:
    long long d_;
};

} // namespace taugraph
