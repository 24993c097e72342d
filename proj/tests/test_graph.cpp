#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "taugraph/graph.hpp"
#include "taugraph/sample.hpp"

using namespace taugraph;

namespace {

GappedPolyElem pelem(const GappedPolyDomain& dom, const char* s) {
    return dom.canonicalize(dom.parse(s)).first;
}

template <typename D>
std::vector<std::string> vertex_strings(const D& dom, const DivisorGraph<D>& g) {
    std::vector<std::string> out;
    for (const auto& v : g.vertices) out.push_back(dom.to_string(v));
    return out;
}

} // namespace

TEST_CASE("same-degree graph of x^8-x^9: two vertices, one edge, one loop") {
    GappedPolyDomain dom;
    FactorEngine<GappedPolyDomain> eng(dom, make_tau(dom, "same-degree"));
    auto f = pelem(dom, "x^8-x^9");
    auto g = build_graph(eng, f);
    CHECK(vertex_strings(dom, g) == std::vector<std::string>{"x^3-x^2", "x^3"});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
    REQUIRE(g.loops.size() == 1);
    CHECK(g.loops.at(1) == 1); // one loop at x^3
    CHECK(g.loops_at(0) == 0);
}

TEST_CASE("full graph of x^8-x^9: four vertices, five edges, loops at x^2 and x^3") {
    GappedPolyDomain dom;
    FactorEngine<GappedPolyDomain> eng(dom, make_tau(dom, "full"));
    auto f = pelem(dom, "x^8-x^9");
    auto g = build_graph(eng, f);
    CHECK(vertex_strings(dom, g) ==
          std::vector<std::string>{"x^2", "x^3-x^2", "x^3", "x^4-x^3"});
    REQUIRE(g.edges.size() == 5);
    // the only missing pair is {x^3-x^2, x^4-x^3}
    std::set<std::pair<int, int>> edges(g.edges.begin(), g.edges.end());
    CHECK(!edges.count({1, 3}));
    CHECK(g.loops == std::map<int, int>{{0, 2}, {2, 1}});
}

TEST_CASE("reduced graph drops loops only, and reducing is idempotent") {
    GappedPolyDomain dom;
    FactorEngine<GappedPolyDomain> eng(dom, make_tau(dom, "full"));
    auto f = pelem(dom, "x^8-x^9");
    auto g = build_graph(eng, f);
    auto r = reduce(g);
    CHECK(r.reduced);
    CHECK(r.vertices == g.vertices);
    CHECK(r.edges == g.edges);
    CHECK(r.loops.empty());
    auto rr = reduce(r);
    CHECK(rr.vertices == r.vertices);
    CHECK(rr.edges == r.edges);
    CHECK(rr.loops.empty());
}

TEST_CASE("graph of 6 in Z[sqrt(-5)] is two disjoint edges") {
    QuadraticDomain dom(-5);
    FactorEngine<QuadraticDomain> eng(dom, make_tau(dom, "full"));
    auto g = build_graph(eng, QuadElem{6, 0});
    CHECK(vertex_strings(dom, g) ==
          std::vector<std::string>{"2", "1-sqrt(-5)", "1+sqrt(-5)", "3"});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(g.loops.empty());
    auto m = metrics(g);
    CHECK(!m.connected);
    CHECK(!m.diameter.has_value()); // infinite
    CHECK(!m.pseudoclique);
}

TEST_CASE("metrics of G_full(12): pseudoclique with a loop at 2") {
    IntegerDomain dom;
    FactorEngine<IntegerDomain> eng(dom, make_tau(dom, "full"));
    auto g = build_graph(eng, BigInt(12));
    REQUIRE(g.vertices == std::vector<BigInt>{2, 3});
    REQUIRE(g.edges.size() == 1);
    CHECK(g.loops == std::map<int, int>{{0, 1}});
    auto m = metrics(g);
    CHECK(m.deg == std::vector<int>{1, 1});
    CHECK(m.degl == std::vector<int>{2, 1});
    CHECK(m.connected);
    CHECK(m.diameter == 1u);
    CHECK(m.pseudoclique);
    CHECK(!m.clique); // the loop
    CHECK(!m.k1);
    auto rm = metrics(reduce(g));
    CHECK(rm.clique);
}

TEST_CASE("K1 metrics for a tau-atom") {
    IntegerDomain dom;
    FactorEngine<IntegerDomain> eng(dom, make_tau(dom, "full"));
    auto g = build_graph(eng, BigInt(7));
    auto m = metrics(g);
    CHECK(m.k1);
    CHECK(m.diameter == 0u);
    CHECK(m.pseudoclique);
    CHECK(m.clique);
    CHECK(m.connected);
}

TEST_CASE("degl - deg equals the loop count everywhere") {
    IntegerDomain dom;
    FactorEngine<IntegerDomain> eng(dom, make_tau(dom, "full"));
    for (long long n : {12, 60, 360, 1024}) {
        auto g = build_graph(eng, BigInt(n));
        auto m = metrics(g);
        for (std::size_t v = 0; v < g.vertices.size(); ++v)
            CHECK(m.degl[v] - m.deg[v] == g.loops_at(static_cast<int>(v)));
    }
}

TEST_CASE("vertex set equals the tau-irreducible divisor set") {
    IntegerDomain dom;
    for (const char* tau : {"full", "coprime", "parity"}) {
        FactorEngine<IntegerDomain> eng(dom, make_tau(dom, tau));
        for (long long n = 2; n <= 120; ++n) {
            CAPTURE(tau, n);
            auto g = build_graph(eng, BigInt(n));
            REQUIRE(g.vertices == eng.tau_irreducible_divisors(BigInt(n)));
        }
    }
}

TEST_CASE("closed-form oracle for integer tau_full graphs") {
    IntegerDomain dom;
    FactorEngine<IntegerDomain> eng(dom, make_tau(dom, "full"));
    for (std::uint64_t n = 2; n <= 300; ++n) {
        CAPTURE(n);
        auto g = build_graph(eng, BigInt(n));
        auto pf = oracles::prime_factorization(n);
        REQUIRE(g.vertices.size() == pf.size());
        std::size_t i = 0;
        for (const auto& [p, e] : pf) {
            REQUIRE(g.vertices[i] == BigInt(p));
            REQUIRE(g.loops_at(static_cast<int>(i)) == static_cast<int>(e) - 1);
            ++i;
        }
        REQUIRE(g.edges.size() == pf.size() * (pf.size() - 1) / 2); // complete
        REQUIRE(metrics(g).pseudoclique);
    }
}

TEST_CASE("edge rule agrees with product divisibility under tau_full") {
    // under the full relation, {a,b} is an edge iff a*b divides x
    IntegerDomain zi;
    FactorEngine<IntegerDomain> ieng(zi, make_tau(zi, "full"));
    for (std::uint64_t n = 2; n <= 200; ++n) {
        auto g = build_graph(ieng, BigInt(n));
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
                bool edge = std::find(g.edges.begin(), g.edges.end(),
                                      std::make_pair(static_cast<int>(i), static_cast<int>(j))) !=
                            g.edges.end();
                bool divides = n % (g.vertices[i] * g.vertices[j]).convert_to<std::uint64_t>() == 0;
                CAPTURE(n, i, j);
                REQUIRE(edge == divides);
            }
        }
    }

    QuadraticDomain qd(-5);
    FactorEngine<QuadraticDomain> qeng(qd, make_tau(qd, "full"));
    for (const auto& x : quad_norm_sample(qd, 40)) {
        auto g = build_graph(qeng, x);
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
                bool edge = std::find(g.edges.begin(), g.edges.end(),
                                      std::make_pair(static_cast<int>(i), static_cast<int>(j))) !=
                            g.edges.end();
                auto q = qd.exact_divide(x, qd.mul(g.vertices[i], g.vertices[j]));
                CAPTURE(qd.to_string(x));
                REQUIRE(edge == q.has_value());
            }
        }
    }
}

TEST_CASE("edge witnesses replay") {
    GappedPolyDomain dom;
    FactorEngine<GappedPolyDomain> eng(dom, make_tau(dom, "full"));
    auto f = pelem(dom, "x^8-x^9");
    auto g = build_graph(eng, f);
    for (const auto& [e, wit] : g.edge_witness) {
        REQUIRE(eng.is_tau_factorization(wit));
        bool found_a = false, found_b = false;
        for (const auto& a : wit.factors) {
            if (dom.equal(a, g.vertices[static_cast<std::size_t>(e.first)])) found_a = true;
            if (dom.equal(a, g.vertices[static_cast<std::size_t>(e.second)])) found_b = true;
        }
        CHECK(found_a);
        CHECK(found_b);
    }
    for (const auto& [v, wit] : g.loop_witness) {
        REQUIRE(eng.is_tau_factorization(wit));
        int count = 0;
        for (const auto& a : wit.factors) {
            CHECK(eng.is_atom(a));
            if (dom.equal(a, g.vertices[static_cast<std::size_t>(v)])) ++count;
        }
        CHECK(count - 1 == g.loops.at(v));
    }
}

TEST_CASE("DOT output is stable and matches goldens") {
    IntegerDomain zi;
    FactorEngine<IntegerDomain> eng(zi, make_tau(zi, "full"));
    auto k1 = build_graph(eng, BigInt(7));
    CHECK(to_dot(zi, k1) == "graph G {\n  \"7\";\n}\n");

    GappedPolyDomain pd;
    FactorEngine<GappedPolyDomain> peng(pd, make_tau(pd, "same-degree"));
    auto g = build_graph(peng, pelem(pd, "x^8-x^9"));
    const std::string expect =
        "graph G {\n"
        "  \"x^3-x^2\";\n"
        "  \"x^3\";\n"
        "  \"x^3-x^2\" -- \"x^3\";\n"
        "  \"x^3\" -- \"x^3\";\n"
        "}\n";
    CHECK(to_dot(pd, g) == expect);
    CHECK(to_dot(pd, g) == to_dot(pd, build_graph(peng, pelem(pd, "x^8-x^9"))));
}

TEST_CASE("empty graph renders as a valid empty DOT body") {
    DivisorGraph<IntegerDomain> g;
    g.target = 1; // never built by the engine; the rendering convention only
    IntegerDomain zi;
    CHECK(to_dot(zi, g) == "graph G {\n}\n");
    auto m = metrics(g);
    CHECK(m.empty_graph);
    CHECK(!m.diameter.has_value());
}

TEST_CASE("graph JSON has the documented shape") {
    IntegerDomain zi;
    FactorEngine<IntegerDomain> eng(zi, make_tau(zi, "full"));
    auto g = build_graph(eng, BigInt(12));
    auto j = graph_to_json(zi, g);
    CHECK(j["target"] == "12");
    CHECK(j["backend"] == "int");
    CHECK(j["tau"] == "full");
    CHECK(j["reduced"] == false);
    CHECK(j["vertices"] == nlohmann::ordered_json::array({"2", "3"}));
    CHECK(j["edges"][0] == nlohmann::ordered_json::array({0, 1}));
    CHECK(j["loops"]["0"] == 1);
    CHECK(j["metrics"]["pseudoclique"] == true);
    CHECK(j["metrics"]["diameter"] == 1);

    QuadraticDomain qd(-5);
    FactorEngine<QuadraticDomain> qeng(qd, make_tau(qd, "full"));
    auto dis = graph_to_json(qd, build_graph(qeng, QuadElem{6, 0}));
    CHECK(dis["metrics"]["diameter"] == "inf");
    CHECK(dis["metrics"]["connected"] == false);
}
