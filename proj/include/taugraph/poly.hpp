#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taugraph/numeric.hpp"

namespace taugraph {

// Dense univariate polynomial over Q. coeffs_[i] is the coefficient of x^i;
// trailing zeros are stripped, and the zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const BigRat& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }

    static Poly from_coeffs(std::vector<BigRat> c) {
        Poly p;
        p.coeffs_ = std::move(c);
        p.normalize();
        return p;
    }

    static Poly monomial(const BigRat& coeff, std::size_t deg) {
        Poly p;
        if (coeff != 0) {
            p.coeffs_.assign(deg + 1, BigRat(0));
            p.coeffs_[deg] = coeff;
        }
        return p;
    }

    static Poly variable() { return monomial(BigRat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    BigRat coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : BigRat(0);
    }

    const BigRat& leading() const { return coeffs_.back(); } // pre: nonzero
    bool is_monic() const { return !is_zero() && leading() == 1; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<BigRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return from_coeffs(std::move(c));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<BigRat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return from_coeffs(std::move(c));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<BigRat> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(c));
    }

    Poly scaled(const BigRat& s) const {
        if (s == 0) return Poly();
        std::vector<BigRat> c = coeffs_;
        for (auto& x : c) x *= s;
        return from_coeffs(std::move(c));
    }

    Poly pow(unsigned e) const {
        Poly r(BigRat(1));
        Poly base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // Long division: returns (quotient, remainder) with num = q*den + r.
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
        if (den.is_zero()) throw DomainError("polynomial division by zero");
        Poly q;
        Poly r = num;
        const int dd = den.degree();
        while (!r.is_zero() && r.degree() >= dd) {
            BigRat c = r.leading() / den.leading();
            std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
            Poly t = monomial(c, shift);
            q = q + t;
            r = r - t * den;
        }
        return {q, r};
    }

    std::optional<Poly> exact_divide_by(const Poly& den) const {
        auto [q, r] = divmod(*this, den);
        if (!r.is_zero()) return std::nullopt;
        return q;
    }

    BigRat eval(const BigRat& at) const {
        BigRat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    bool operator==(const Poly& other) const { return coeffs_ == other.coeffs_; }

    // Total order: by degree, then coefficients from the highest power down.
    static int compare(const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int i = a.degree(); i >= 0; --i) {
            const BigRat& ca = a.coeffs_[static_cast<std::size_t>(i)];
            const BigRat& cb = b.coeffs_[static_cast<std::size_t>(i)];
            if (ca != cb) return ca < cb ? -1 : 1;
        }
        return 0;
    }

    bool operator<(const Poly& other) const { return compare(*this, other) < 0; }

    // Rendering: descending powers, "x^9-x^8", "3/2*x^2+x-1", "-2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const BigRat& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            bool neg = c < 0;
            BigRat mag = neg ? BigRat(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            bool coeff_one = (mag == 1);
            if (i == 0) {
                out += taugraph::to_string(mag);
            } else {
                if (!coeff_one) {
                    out += taugraph::to_string(mag);
                    out += "*";
                }
                out += "x";
                if (i != 1) {
                    out += "^";
                    out += std::to_string(i);
                }
            }
        }
        return out;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigRat> coeffs_;
};

// Membership in Q[x^2, x^3]: no degree-1 term.
inline bool subring_membership(const Poly& p) { return p.coeff(1) == 0; }

} // namespace taugraph
