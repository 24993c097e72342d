#pragma once

// Z with canonical associates the positive integers and units {1, -1}.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taugraph/numeric.hpp"

namespace taugraph {

class IntegerDomain {
public:
    using element_type = BigInt;
    using unit_type = int; // +1 or -1
    static constexpr std::string_view kind = "int";

    std::string name() const { return "int"; }

    bool is_unit(const element_type& e) const { return e == 1 || e == -1; }

    bool is_canonical(const element_type& e) const { return e > 0; }

    std::pair<element_type, unit_type> canonicalize(const element_type& e) const {
        if (e == 0) throw DomainError("zero has no associate class");
        return e < 0 ? std::pair<element_type, unit_type>{-e, -1}
                     : std::pair<element_type, unit_type>{e, 1};
    }

    element_type mul(const element_type& a, const element_type& b) const { return a * b; }

    unit_type unit_one() const { return 1; }
    unit_type unit_mul(unit_type a, unit_type b) const { return a * b; }
    element_type apply_unit(unit_type u, const element_type& e) const { return u < 0 ? -e : e; }

    unit_type as_unit(const element_type& e) const {
        if (!is_unit(e)) throw DomainError(e.str() + " is not a unit");
        return e < 0 ? -1 : 1;
    }

    std::optional<element_type> exact_divide(const element_type& x, const element_type& d) const {
        if (d == 0) throw DomainError("division by zero");
        if (x % d != 0) return std::nullopt;
        return x / d;
    }

    // Canonical (positive) non-unit divisors of |x|, including |x| itself.
    std::vector<element_type> divisors(const element_type& x) const {
        std::vector<element_type> out;
        for (const BigInt& d : positive_divisors(x))
            if (d > 1) out.push_back(d);
        return out;
    }

    BigInt measure(const element_type& e) const {
        if (e == 0) throw DomainError("zero has no measure");
        return abs_int(e);
    }

    bool equal(const element_type& a, const element_type& b) const { return a == b; }
    bool less(const element_type& a, const element_type& b) const { return a < b; }

    std::string to_string(const element_type& e) const { return e.str(); }
    std::string unit_to_string(unit_type u) const { return u < 0 ? "-1" : "1"; }

    element_type parse(std::string_view text) const {
        std::size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) throw ParseError("expected an integer");
        BigInt v = 0;
        for (; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9')
                throw ParseError(std::string("bad character '") + c + "' in integer");
            v = v * 10 + (c - '0');
        }
        return neg ? element_type(-v) : element_type(v);
    }

    std::vector<unit_type> unit_sample() const { return {1, -1}; }

    bool is_prime(const element_type& e) const { return is_prime_int(e); }
};

} // namespace taugraph
