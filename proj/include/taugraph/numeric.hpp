#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "taugraph/errors.hpp"

namespace taugraph {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt abs_int(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

// floor(sqrt(n)) for n >= 0
inline BigInt isqrt(const BigInt& n) { return boost::multiprecision::sqrt(n); }

// floor(log2(n)) for n >= 1
inline unsigned floor_log2(const BigInt& n) {
    if (n <= 0) throw DomainError("floor_log2 needs a positive integer");
    return static_cast<unsigned>(boost::multiprecision::msb(n));
}

// Positive divisors of |n| in increasing order, including 1 and |n|.
inline std::vector<BigInt> positive_divisors(const BigInt& n_in) {
    BigInt n = abs_int(n_in);
    if (n == 0) throw DomainError("divisors of zero are undefined");
    std::vector<BigInt> small, large;
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline bool is_prime_int(const BigInt& n_in) {
    BigInt n = abs_int(n_in);
    if (n < 2) return false;
    for (BigInt d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

inline std::string to_string(const BigRat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace taugraph
