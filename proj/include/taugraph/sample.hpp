#pragma once

// Sample construction: integer ranges, quadratic norm balls, curated and
// random polynomial lists. Randomness comes from a splitmix64 generator so
// a fixed seed yields identical samples on every platform and run.

#include <cstdint>
#include <vector>

#include "taugraph/gapped_poly.hpp"
#include "taugraph/integers.hpp"
#include "taugraph/quadratic.hpp"

namespace taugraph {

class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n > 0. The modulo bias is irrelevant at our scale.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

// canonical integers lo..hi (both clamped to >= 2)
inline std::vector<BigInt> int_range_sample(long long lo, long long hi) {
    std::vector<BigInt> out;
    for (long long n = std::max(lo, 2ll); n <= hi; ++n) out.emplace_back(n);
    return out;
}

// canonical quadratic elements with 2 <= norm <= bound, in canonical order
inline std::vector<QuadElem> quad_norm_sample(const QuadraticDomain& dom, long long bound) {
    std::vector<QuadElem> out;
    BigInt b_limit = isqrt(BigInt(bound) / BigInt(-dom.discriminant()));
    for (BigInt a = 0; a * a <= bound; ++a) {
        for (BigInt b = -b_limit; b <= b_limit; ++b) {
            QuadElem e{a, b};
            if (!dom.is_canonical(e)) continue;
            BigInt n = dom.norm(e);
            if (n < 2 || n > bound) continue;
            out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end(),
              [&dom](const QuadElem& x, const QuadElem& y) { return dom.less(x, y); });
    return out;
}

inline std::vector<BigInt> random_int_sample(DetRng& rng, std::size_t count, long long lo,
                                             long long hi) {
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < count; ++i)
        out.emplace_back(static_cast<long long>(rng.below(static_cast<std::uint64_t>(hi - lo + 1))) + lo);
    return out;
}

inline std::vector<QuadElem> random_quad_sample(DetRng& rng, const QuadraticDomain& dom,
                                                std::size_t count, long long norm_bound) {
    std::vector<QuadElem> out;
    long long amax = norm_bound, bmax = norm_bound / (-dom.discriminant());
    long long a_side = 1, b_side = 1;
    while (a_side * a_side <= amax) ++a_side;
    while (b_side * b_side <= bmax) ++b_side;
    while (out.size() < count) {
        BigInt a = static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * a_side + 1))) - a_side;
        BigInt b = static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * b_side + 1))) - b_side;
        QuadElem e{a, b};
        if (a == 0 && b == 0) continue;
        BigInt n = dom.norm(e);
        if (n < 2 || n > norm_bound) continue;
        out.push_back(dom.canonicalize(e).first);
    }
    return out;
}

// Random members of Q[x^2,x^3] built from factored pieces so the ambient
// factorization is known exactly: either x^a times a few linear factors
// (a >= 2 keeps the product in the subring) or a product of gapped
// quadratics/cubics, which are members themselves.
inline std::vector<GappedPolyElem> random_gapped_sample(DetRng& rng, std::size_t count) {
    const BigRat roots[] = {BigRat(1), BigRat(-1), BigRat(2), BigRat(-2), BigRat(1, 2)};
    const BigInt consts[] = {BigInt(1), BigInt(2), BigInt(3), BigInt(5)};
    std::vector<GappedPolyElem> out;
    while (out.size() < count) {
        BigRat content(1);
        std::map<Poly, int> factors;
        if (rng.below(2) == 0) {
            int a = 2 + static_cast<int>(rng.below(4)); // x^a, a in 2..5
            int k = static_cast<int>(rng.below(3));     // up to two linear factors
            Poly piece = Poly::monomial(BigRat(1), static_cast<std::size_t>(a));
            for (int i = 0; i < k; ++i) {
                BigRat r = roots[rng.below(5)];
                piece = piece * (Poly::variable() - Poly(r));
            }
            detail::weak_factor(piece, false, content, factors);
        } else {
            int pieces = 1 + static_cast<int>(rng.below(2));
            for (int i = 0; i < pieces; ++i) {
                std::size_t deg = rng.below(2) == 0 ? 2 : 3;
                BigInt c = consts[rng.below(4)];
                Poly piece = Poly::monomial(BigRat(1), deg) - Poly(BigRat(rng.below(2) == 0 ? c : -c));
                detail::weak_factor(piece, false, content, factors);
            }
        }
        GappedPolyElem e = detail::assemble_gapped(content, std::move(factors));
        if (e.degree() == 0) continue;
        if (!subring_membership(e.expansion())) continue; // defensive; construction keeps us inside
        out.push_back(e);
    }
    return out;
}

// Fixed 20-element list for same-degree experiments; every entry has a
// tau-atomic factorization under same-degree.
inline std::vector<GappedPolyElem> curated_gapped_sample() {
    const char* exprs[] = {
        "x^2",      "x^3",      "x^4",      "x^5",      "x^6",
        "x^7",      "x^9",      "x^10",     "x^12",     "x^15",
        "x^8-x^9",  "x^3-x^2",  "x^4-x^3",  "x^5-x^4",  "x^6-x^5",
        "x^7-x^6",  "x^4-x^2",  "x^4-1",    "x^6-x^4",  "(x^3-1)*(x^3+1)",
    };
    GappedPolyDomain dom;
    std::vector<GappedPolyElem> out;
    for (const char* s : exprs) out.push_back(dom.canonicalize(dom.parse(s)).first);
    return out;
}

} // namespace taugraph
