#pragma once

// Test-only oracles, deliberately independent of the library's enumeration
// path: plain machine-integer arithmetic and brute-force scans.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracles {

// Number of multisets {a1 <= ... <= an}, n >= 2, each ai >= 2, with product n.
inline std::uint64_t multiplicative_partitions(std::uint64_t n, std::uint64_t min_factor = 2) {
    std::uint64_t count = 0;
    for (std::uint64_t d = min_factor; d * d <= n; ++d) {
        if (n % d == 0) count += 1 + multiplicative_partitions(n / d, d);
    }
    return count;
}

// All factor multisets (including the single-element {n}) with factors >= 2.
inline void multiset_factorizations(std::uint64_t n, std::uint64_t min_factor,
                                    std::vector<std::uint64_t>& cur,
                                    std::vector<std::vector<std::uint64_t>>& out) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    for (std::uint64_t d = min_factor; d * d <= n; ++d) {
        if (n % d != 0) continue;
        cur.push_back(d);
        multiset_factorizations(n / d, d, cur, out);
        cur.pop_back();
    }
}

inline std::size_t divisor_count_nonunit(std::uint64_t n) {
    std::size_t c = 0;
    for (std::uint64_t d = 2; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

inline std::map<std::uint64_t, unsigned> prime_factorization(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            out[p] += 1;
            n /= p;
        }
    }
    if (n > 1) out[n] += 1;
    return out;
}

inline unsigned prime_omega(std::uint64_t n) {
    unsigned total = 0;
    for (const auto& [p, e] : prime_factorization(n)) total += e;
    return total;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace oracles
