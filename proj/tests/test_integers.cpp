#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "taugraph/integers.hpp"

using namespace taugraph;

TEST_CASE("integer canonicalization is sign normalization") {
    IntegerDomain dom;
    auto [c, u] = dom.canonicalize(BigInt(-12));
    CHECK(c == 12);
    CHECK(u == -1);
    auto [c2, u2] = dom.canonicalize(BigInt(7));
    CHECK(c2 == 7);
    CHECK(u2 == 1);
    CHECK_THROWS_AS(dom.canonicalize(BigInt(0)), DomainError);
}

TEST_CASE("integer canonicalization is idempotent and associate-complete") {
    IntegerDomain dom;
    for (long long n = 2; n <= 200; ++n) {
        for (int u : dom.unit_sample()) {
            BigInt x = dom.apply_unit(u, BigInt(n));
            auto [c, uu] = dom.canonicalize(x);
            CHECK(c == n);
            CHECK(dom.apply_unit(uu, c) == x);
            CHECK(dom.canonicalize(c).first == c);
        }
    }
}

TEST_CASE("integer exact division") {
    IntegerDomain dom;
    CHECK(dom.exact_divide(BigInt(12), BigInt(4)) == BigInt(3));
    CHECK(!dom.exact_divide(BigInt(12), BigInt(5)).has_value());
    CHECK_THROWS_AS(dom.exact_divide(BigInt(12), BigInt(0)), DomainError);
}

TEST_CASE("integer divisors of 12") {
    IntegerDomain dom;
    std::vector<BigInt> expect{2, 3, 4, 6, 12};
    CHECK(dom.divisors(BigInt(12)) == expect);
}

TEST_CASE("integer divisor count matches trial-division oracle up to 10^4") {
    IntegerDomain dom;
    for (std::uint64_t n = 2; n <= 10000; ++n) {
        CAPTURE(n);
        REQUIRE(dom.divisors(BigInt(n)).size() == oracles::divisor_count_nonunit(n));
    }
}

TEST_CASE("integer divisors are closed under cofactors") {
    IntegerDomain dom;
    for (long long n : {12, 36, 60, 97, 360, 1024}) {
        auto divs = dom.divisors(BigInt(n));
        for (const BigInt& d : divs) {
            BigInt q = *dom.exact_divide(BigInt(n), d);
            if (dom.is_unit(q)) continue;
            CHECK(std::find(divs.begin(), divs.end(), q) != divs.end());
        }
    }
}

TEST_CASE("integer measure is |n| and multiplicative") {
    IntegerDomain dom;
    CHECK(dom.measure(BigInt(12)) == 12);
    CHECK(dom.measure(BigInt(-7)) == 7);
    for (long long n : {12, 30, 128, 210}) {
        for (const BigInt& d : dom.divisors(BigInt(n))) {
            BigInt q = *dom.exact_divide(BigInt(n), d);
            CHECK(dom.measure(BigInt(n)) == dom.measure(d) * dom.measure(q));
        }
    }
    CHECK(dom.measure(BigInt(1)) == 1);
    CHECK_THROWS_AS(dom.measure(BigInt(0)), DomainError);
}

TEST_CASE("integer parsing") {
    IntegerDomain dom;
    CHECK(dom.parse("-12") == -12);
    CHECK(dom.parse("+7") == 7);
    CHECK_THROWS_AS(dom.parse("12x"), ParseError);
    CHECK_THROWS_AS(dom.parse(""), ParseError);
}
