#include <catch2/catch_amalgamated.hpp>

#include "taugraph/gapped_poly.hpp"

using namespace taugraph;

namespace {

Poly poly_of(std::string_view s) { return parse_poly_expression(s).first; }

GappedPolyElem elem_of(std::string_view s, bool trust = false) {
    return parse_gapped_poly(s, trust);
}

} // namespace

TEST_CASE("polynomial arithmetic basics") {
    Poly x = Poly::variable();
    Poly p = x.pow(2) - Poly(BigRat(1));
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigRat(3)) == 8);
    auto [q, r] = Poly::divmod(p, x - Poly(BigRat(1)));
    CHECK(r.is_zero());
    CHECK(q == x + Poly(BigRat(1)));
    CHECK(p.str() == "x^2-1");
    CHECK((x.pow(9) - x.pow(8)).str() == "x^9-x^8");
    CHECK(Poly::monomial(BigRat(3, 2), 4).str() == "3/2*x^4");
}

TEST_CASE("subring membership is the vanishing of the degree-1 term") {
    CHECK(subring_membership(poly_of("x^2-x^3")));
    CHECK(!subring_membership(poly_of("x")));
    CHECK(subring_membership(poly_of("7")));
}

TEST_CASE("expression parser round-trips through expansion") {
    for (const char* s : {"x^8 - x^9", "x^2", "(x-1)*(x+1)", "3x^3-3x^4", "1/2*x^2+x^4",
                          "(x^2-2)^3", "-x^6", "2*(x^3-1)*(x^3+1)"}) {
        CAPTURE(s);
        Poly direct = poly_of(s);
        // the element's expansion must reproduce the parsed polynomial
        if (subring_membership(direct) && !direct.is_zero()) {
            GappedPolyElem e = elem_of(s);
            CHECK(e.expansion() == direct);
        }
    }
}

TEST_CASE("parse x^8-x^9 into content and factors") {
    GappedPolyElem e = elem_of("x^8 - x^9");
    CHECK(e.content == -1);
    REQUIRE(e.factors.size() == 2);
    // factor order: x-1 < x in the coefficient order
    CHECK(e.factors[0].first == Poly::variable() - Poly(BigRat(1)));
    CHECK(e.factors[0].second == 1);
    CHECK(e.factors[1].first == Poly::variable());
    CHECK(e.factors[1].second == 8);
}

TEST_CASE("parse x^2") {
    GappedPolyElem e = elem_of("x^2");
    CHECK(e.content == 1);
    REQUIRE(e.factors.size() == 1);
    CHECK(e.factors[0].second == 2);
}

TEST_CASE("x^3+x is rejected: not in the subring") {
    CHECK_THROWS_AS(elem_of("x^3 + x"), ParseError);
    CHECK_THROWS_WITH(elem_of("x^3 + x"), Catch::Matchers::ContainsSubstring("Q[x^2,x^3]"));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_WITH(elem_of("x^2 + @"), Catch::Matchers::ContainsSubstring("position"));
    CHECK_THROWS_AS(elem_of("(x^2"), ParseError);
    CHECK_THROWS_AS(elem_of("0"), DomainError);
}

TEST_CASE("canonicalization divides out the leading coefficient") {
    GappedPolyDomain dom;
    auto [c, u] = dom.canonicalize(elem_of("3x^3-3x^4"));
    CHECK(u == -3);
    CHECK(dom.to_string(c) == "x^4-x^3");
    CHECK(dom.apply_unit(u, c) == elem_of("3x^3-3x^4"));
    CHECK(dom.is_canonical(c));
}

TEST_CASE("units are the nonzero rational constants") {
    GappedPolyDomain dom;
    CHECK(dom.is_unit(elem_of("7")));
    CHECK(dom.is_unit(elem_of("1/2")));
    CHECK(!dom.is_unit(elem_of("x^2")));
}

TEST_CASE("exact division stays inside the subring") {
    GappedPolyDomain dom;
    auto q = dom.exact_divide(elem_of("x^8-x^9"), elem_of("x^2-x^3"));
    REQUIRE(q.has_value());
    CHECK(q->expansion() == poly_of("x^6"));
    // x^3 / x^2 = x is not a member
    CHECK(!dom.exact_divide(elem_of("x^3"), elem_of("x^2")).has_value());
    // not a Q[x]-divisor at all
    CHECK(!dom.exact_divide(elem_of("x^4"), elem_of("x^2-1")).has_value());
}

TEST_CASE("divisors of x^8-x^9 match the exponent-grid oracle") {
    GappedPolyDomain dom;
    auto [f, unit] = dom.canonicalize(elem_of("x^8-x^9"));
    // oracle: d = x^a (x-1)^b, 0 <= a <= 8, 0 <= b <= 1, d != 1, with both d
    // and f/d free of a degree-1 term
    Poly x = Poly::variable();
    Poly xm1 = x - Poly(BigRat(1));
    std::vector<Poly> oracle;
    for (int a = 0; a <= 8; ++a) {
        for (int b = 0; b <= 1; ++b) {
            if (a == 0 && b == 0) continue;
            Poly d = x.pow(static_cast<unsigned>(a)) * xm1.pow(static_cast<unsigned>(b));
            Poly cof = x.pow(static_cast<unsigned>(8 - a)) * xm1.pow(static_cast<unsigned>(1 - b));
            if (!subring_membership(d) || !subring_membership(cof)) continue;
            oracle.push_back(d);
        }
    }
    std::sort(oracle.begin(), oracle.end());

    std::vector<Poly> got;
    for (const auto& d : dom.divisors(f)) got.push_back(d.expansion());
    std::sort(got.begin(), got.end());
    CHECK(got == oracle);
    CHECK(got.size() == 11);

    // every D-divisor also divides in Q[x]
    for (const auto& d : dom.divisors(f)) {
        auto q = f.expansion().exact_divide_by(d.expansion());
        CHECK(q.has_value());
    }
}

TEST_CASE("gapped divisors are closed under cofactors") {
    GappedPolyDomain dom;
    for (const char* s : {"x^8-x^9", "x^6", "x^4-x^2", "(x^3-1)*(x^3+1)"}) {
        auto f = dom.canonicalize(elem_of(s)).first;
        auto divs = dom.divisors(f);
        for (const auto& d : divs) {
            auto q = dom.exact_divide(f, d);
            REQUIRE(q.has_value());
            if (dom.is_unit(*q)) continue;
            auto qc = dom.canonicalize(*q).first;
            CHECK(std::find(divs.begin(), divs.end(), qc) != divs.end());
        }
    }
}

TEST_CASE("measure is 2^degree and multiplicative") {
    GappedPolyDomain dom;
    CHECK(dom.measure(elem_of("x^3")) == 8);
    CHECK(dom.measure(elem_of("7")) == 1);
    auto f = dom.canonicalize(elem_of("x^8-x^9")).first;
    for (const auto& d : dom.divisors(f)) {
        auto q = dom.exact_divide(f, d);
        REQUIRE(q.has_value());
        CHECK(dom.measure(f) == dom.measure(d) * dom.measure(*q));
    }
}

TEST_CASE("factored input passes where the expansion would need trust") {
    // x^4+x^2+1 = (x^2+x+1)(x^2-x+1): no rational roots, degree-4 residual
    CHECK_THROWS_WITH(elem_of("x^4+x^2+1"),
                      Catch::Matchers::ContainsSubstring("supply factored form"));
    GappedPolyElem e = elem_of("(x^2+x+1)*(x^2-x+1)");
    CHECK(e.expansion() == poly_of("x^4+x^2+1"));
    REQUIRE(e.factors.size() == 2);
}

TEST_CASE("trust flag admits an uncertified quartic") {
    CHECK_THROWS_AS(elem_of("x^4+2"), ParseError);
    GappedPolyElem e = elem_of("x^4+2", true);
    REQUIRE(e.factors.size() == 1);
    CHECK(e.factors[0].first.degree() == 4);
}

TEST_CASE("rational coefficients and juxtaposition parse") {
    GappedPolyElem e = elem_of("1/2*x^2");
    CHECK(e.content == BigRat(1, 2));
    CHECK(elem_of("2x^2").expansion() == poly_of("2*x^2"));
}
