#pragma once

// The subring D = Q[x^2, x^3] of Q[x]: rational polynomials with no
// degree-1 term. Units are the nonzero rational constants. Elements carry
// their Q[x]-irreducible factorization, which is what makes divisor
// enumeration in D finite: every D-divisor of f is, up to a scalar, a
// sub-multiset product of f's Q[x] factors with both the divisor and its
// cofactor free of a degree-1 term.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taugraph/poly.hpp"
#include "taugraph/poly_expr.hpp"

namespace taugraph {

struct GappedPolyElem {
    BigRat content{1};                            // nonzero scalar
    std::vector<std::pair<Poly, int>> factors;    // monic irreducible (or trusted), sorted
    Poly monic_part;                              // product of the factors, monic

    int degree() const { return monic_part.degree(); }

    Poly expansion() const { return monic_part.scaled(content); }

    bool operator==(const GappedPolyElem& o) const {
        return content == o.content && factors == o.factors;
    }
};

namespace detail {

// Rational roots of a nonzero polynomial with nonzero constant term, found
// through the rational root theorem on the scaled integer polynomial.
inline std::optional<BigRat> find_rational_root(const Poly& p) {
    BigInt denom_lcm = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        BigInt d = denominator(p.coeff(static_cast<std::size_t>(i)));
        denom_lcm = boost::multiprecision::lcm(denom_lcm, d);
    }
    BigInt lead = numerator(p.coeff(static_cast<std::size_t>(p.degree())) * BigRat(denom_lcm));
    BigInt cons = numerator(p.coeff(0) * BigRat(denom_lcm));
    for (const BigInt& pn : positive_divisors(cons)) {
        for (const BigInt& pd : positive_divisors(lead)) {
            BigRat cand(pn, pd);
            if (p.eval(cand) == 0) return cand;
            if (p.eval(-cand) == 0) return -cand;
        }
    }
    return std::nullopt;
}

// content * x^k * (linear factors from rational roots) * residual.
// Residuals of degree 2..3 are irreducible by rational-root absence;
// degree >= 4 is rejected unless declared trusted by the caller.
inline void weak_factor(const Poly& p, bool trust_factors,
                        BigRat& content, std::map<Poly, int>& factors) {
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    content *= p.leading();
    Poly m = p.scaled(BigRat(1) / p.leading());
    // x-power
    int k = 0;
    while (m.coeff(static_cast<std::size_t>(k)) == 0) ++k;
    if (k > 0) {
        factors[Poly::variable()] += k;
        std::vector<BigRat> shifted;
        for (int i = k; i <= m.degree(); ++i) shifted.push_back(m.coeff(static_cast<std::size_t>(i)));
        m = Poly::from_coeffs(std::move(shifted));
    }
    // rational roots
    while (m.degree() >= 1) {
        auto root = find_rational_root(m);
        if (!root) break;
        Poly lin = Poly::variable() - Poly(*root);
        factors[lin] += 1;
        auto q = m.exact_divide_by(lin);
        m = *q;
    }
    if (m.degree() <= 0) return;
    if (m.degree() <= 3 || trust_factors) {
        factors[m] += 1;
        return;
    }
    throw ParseError("cannot certify irreducibility of degree-" +
                     std::to_string(m.degree()) +
                     " residual " + m.str() + "; supply factored form");
}

inline GappedPolyElem assemble_gapped(BigRat content, std::map<Poly, int> factor_map) {
    if (content == 0) throw DomainError("zero is not a ring element here");
    GappedPolyElem e;
    e.content = std::move(content);
    Poly prod(BigRat(1));
    for (auto& [f, mult] : factor_map) {
        if (mult <= 0) continue;
        e.factors.emplace_back(f, mult);
        prod = prod * f.pow(static_cast<unsigned>(mult));
    }
    e.monic_part = prod;
    return e;
}

} // namespace detail

// Parses an expression in x, verifies membership in Q[x^2, x^3], and
// refactors it over Q[x]. Syntactic product structure is honored, so
// "(x^2+x+1)*(x^2-x+1)" passes where its expansion would need trust.
inline GappedPolyElem parse_gapped_poly(std::string_view text, bool trust_factors = false) {
    auto [expanded, parts] = parse_poly_expression(text);
    if (expanded.is_zero()) throw DomainError("zero is not a ring element here");
    if (!subring_membership(expanded))
        throw ParseError("not a member of Q[x^2,x^3]: coefficient of x^1 is " +
                         taugraph::to_string(expanded.coeff(1)));
    BigRat content = parts.scalar;
    std::map<Poly, int> factor_map;
    for (const auto& [base, exp] : parts.bases) {
        BigRat base_content{1};
        std::map<Poly, int> base_factors;
        detail::weak_factor(base, trust_factors, base_content, base_factors);
        for (unsigned i = 0; i < exp; ++i) content *= base_content;
        for (const auto& [f, mult] : base_factors)
            factor_map[f] += mult * static_cast<int>(exp);
    }
    GappedPolyElem e = detail::assemble_gapped(std::move(content), std::move(factor_map));
    if (!(e.expansion() == expanded))
        throw DomainError("internal: refactorization does not reproduce the input");
    return e;
}

class GappedPolyDomain {
public:
    using element_type = GappedPolyElem;
    using unit_type = BigRat;
    static constexpr std::string_view kind = "gapped-poly";

    explicit GappedPolyDomain(bool trust_factors = false) : trust_(trust_factors) {}

    std::string name() const { return "gapped-poly"; }
    bool trust_factors() const { return trust_; }

    bool is_unit(const element_type& e) const { return e.degree() == 0; }

    bool is_canonical(const element_type& e) const { return e.content == 1; }

    std::pair<element_type, unit_type> canonicalize(const element_type& e) const {
        element_type c = e;
        unit_type u = e.content;
        c.content = 1;
        return {std::move(c), std::move(u)};
    }

    element_type mul(const element_type& a, const element_type& b) const {
        std::map<Poly, int> fm;
        for (const auto& [f, m] : a.factors) fm[f] += m;
        for (const auto& [f, m] : b.factors) fm[f] += m;
        return detail::assemble_gapped(a.content * b.content, std::move(fm));
    }

    unit_type unit_one() const { return BigRat(1); }
    unit_type unit_mul(const unit_type& a, const unit_type& b) const { return a * b; }

    unit_type as_unit(const element_type& e) const {
        if (!is_unit(e)) throw DomainError(to_string(e) + " is not a unit");
        return e.content;
    }

    element_type apply_unit(const unit_type& u, const element_type& e) const {
        if (u == 0) throw DomainError("zero is not a unit");
        element_type r = e;
        r.content *= u;
        return r;
    }

    // Exact division inside D: multiset inclusion in Q[x] plus membership of
    // the quotient (the divisor and dividend are members by construction).
    std::optional<element_type> exact_divide(const element_type& x, const element_type& d) const {
        std::map<Poly, int> fm;
        for (const auto& [f, m] : x.factors) fm[f] = m;
        for (const auto& [f, m] : d.factors) {
            auto it = fm.find(f);
            if (it == fm.end() || it->second < m) return std::nullopt;
            it->second -= m;
            if (it->second == 0) fm.erase(it);
        }
        element_type q = detail::assemble_gapped(x.content / d.content, std::move(fm));
        if (!subring_membership(q.monic_part)) return std::nullopt;
        return q;
    }

    // Canonical (monic) non-unit divisors in D, including x's own monic form.
    // Both the divisor and its cofactor must lie in D.
    std::vector<element_type> divisors(const element_type& x) const {
        const std::size_t n = x.factors.size();
        std::vector<int> exps(n, 0);
        std::vector<element_type> out;
        for (;;) {
            // advance odometer
            std::size_t i = 0;
            while (i < n && exps[i] == x.factors[i].second) {
                exps[i] = 0;
                ++i;
            }
            if (i == n) break;
            ++exps[i];
            std::map<Poly, int> dm, cm;
            for (std::size_t j = 0; j < n; ++j) {
                if (exps[j] > 0) dm[x.factors[j].first] = exps[j];
                int rest = x.factors[j].second - exps[j];
                if (rest > 0) cm[x.factors[j].first] = rest;
            }
            element_type d = detail::assemble_gapped(BigRat(1), std::move(dm));
            if (is_unit(d)) continue;
            if (!subring_membership(d.monic_part)) continue;
            element_type c = detail::assemble_gapped(BigRat(1), std::move(cm));
            if (!subring_membership(c.monic_part)) continue;
            out.push_back(std::move(d));
        }
        std::sort(out.begin(), out.end(),
                  [this](const element_type& a, const element_type& b) { return less(a, b); });
        return out;
    }

    BigInt measure(const element_type& e) const {
        return boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(e.degree()));
    }

    bool equal(const element_type& a, const element_type& b) const { return a == b; }

    bool less(const element_type& a, const element_type& b) const {
        int c = Poly::compare(a.monic_part, b.monic_part);
        if (c != 0) return c < 0;
        return a.content < b.content;
    }

    std::string to_string(const element_type& e) const {
        if (e.content == 1) return e.monic_part.str();
        if (e.degree() == 0) return taugraph::to_string(e.content);
        return taugraph::to_string(e.content) + "*(" + e.monic_part.str() + ")";
    }

    std::string unit_to_string(const unit_type& u) const { return taugraph::to_string(u); }

    element_type parse(std::string_view text) const { return parse_gapped_poly(text, trust_); }

    // Unit orbit is infinite (all of Q*); a fixed spread for sampled
    // associate-preservation checks.
    std::vector<unit_type> unit_sample() const {
        return {BigRat(-1), BigRat(2), BigRat(1, 2), BigRat(-3, 2)};
    }

    int degree_of(const element_type& e) const { return e.degree(); }

private:
    bool trust_;
};

} // namespace taugraph
