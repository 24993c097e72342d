#pragma once

// The tau-irreducible divisor graph G_tau(x): vertices are the canonical
// tau-atoms tau-dividing x; an edge joins two atoms that occur together in
// some tau-factorization of x; a vertex occurring n times in a tau-ATOMIC
// factorization carries n-1 loops (the maximum over such factorizations).
// Edges come from any tau-factorization, loops only from atomic ones; the
// asymmetry is deliberate and matches the defining construction.

#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taugraph/factorization.hpp"

namespace taugraph {

template <typename D>
struct DivisorGraph {
    using element_type = typename D::element_type;

    element_type target;
    std::string relation;
    bool reduced = false;
    std::vector<element_type> vertices;               // ascending canonical order
    std::vector<std::pair<int, int>> edges;           // i < j, sorted
    std::map<int, int> loops;                         // vertex index -> count >= 1

    // replayable witnesses: a factorization containing both endpoints /
    // an atomic factorization realizing the maximal multiplicity
    std::map<std::pair<int, int>, Factorization<D>> edge_witness;
    std::map<int, Factorization<D>> loop_witness;

    bool empty() const { return vertices.empty(); }
    int loops_at(int v) const {
        auto it = loops.find(v);
        return it == loops.end() ? 0 : it->second;
    }
};

template <typename D>
DivisorGraph<D> build_graph(const FactorEngine<D>& eng, const typename D::element_type& x) {
    using Elem = typename D::element_type;
    const D& dom = eng.domain();

    DivisorGraph<D> g;
    g.target = x;
    g.relation = eng.tau().name;

    FactorizationSet<D> all = eng.factorizations(x, true);

    // vertex set: distinct atomic factor classes across all factorizations
    auto less = [&dom](const Elem& a, const Elem& b) { return dom.less(a, b); };
    std::set<Elem, decltype(less)> verts(less);
    for (const auto& f : all.classes)
        for (const Elem& a : f.factors)
            if (eng.is_atom(a)) verts.insert(a);
    g.vertices.assign(verts.begin(), verts.end());

    auto index_of = [&](const Elem& e) -> int {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), e, less);
        return static_cast<int>(it - g.vertices.begin());
    };

    std::set<std::pair<int, int>> edges;
    for (const auto& f : all.classes) {
        // distinct vertex indices and multiplicities in this class
        std::map<int, int> mult;
        for (const Elem& a : f.factors)
            if (eng.is_atom(a)) mult[index_of(a)] += 1;
        for (auto i = mult.begin(); i != mult.end(); ++i) {
            for (auto j = std::next(i); j != mult.end(); ++j) {
                std::pair<int, int> e{i->first, j->first};
                if (edges.insert(e).second) g.edge_witness.emplace(e, f);
            }
        }
        // loops need every factor atomic
        if (std::all_of(f.factors.begin(), f.factors.end(),
                        [&](const Elem& a) { return eng.is_atom(a); })) {
            for (const auto& [v, m] : mult) {
                if (m - 1 > g.loops_at(v)) {
                    g.loops[v] = m - 1;
                    g.loop_witness.insert_or_assign(v, f);
                }
            }
        }
    }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

template <typename D>
DivisorGraph<D> reduce(DivisorGraph<D> g) {
    g.loops.clear();
    g.loop_witness.clear();
    g.reduced = true;
    return g;
}

struct GraphMetrics {
    bool empty_graph = false; // antimatter convention: no vertices at all
    bool k1 = false;          // one vertex, no edges, no loops
    bool connected = false;
    bool complete = false;    // every vertex pair adjacent
    bool pseudoclique = false;
    bool clique = false;
    std::optional<unsigned> diameter; // nullopt: infinite (disconnected) or empty graph
    std::vector<int> deg;
    std::vector<int> degl;

    bool diameter_at_most(unsigned n) const { return diameter && *diameter <= n; }
};

template <typename D>
GraphMetrics metrics(const DivisorGraph<D>& g) {
    GraphMetrics m;
    const std::size_t n = g.vertices.size();
    if (n == 0) {
        m.empty_graph = true;
        return m;
    }
    std::vector<std::vector<int>> adj(n);
    for (const auto& [i, j] : g.edges) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    m.deg.resize(n);
    m.degl.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        m.deg[v] = static_cast<int>(adj[v].size());
        m.degl[v] = m.deg[v] + g.loops_at(static_cast<int>(v));
    }
    // all-pairs shortest paths by BFS from every vertex
    unsigned max_dist = 0;
    bool disconnected = false;
    for (std::size_t s = 0; s < n && !disconnected; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(static_cast<int>(s));
        std::size_t reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[static_cast<std::size_t>(v)]) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    max_dist = std::max(max_dist, static_cast<unsigned>(dist[static_cast<std::size_t>(w)]));
                    q.push(w);
                    ++reached;
                }
            }
        }
        if (reached != n) disconnected = true;
    }
    m.connected = !disconnected;
    if (m.connected) m.diameter = max_dist;
    m.complete = g.edges.size() == n * (n - 1) / 2;
    m.pseudoclique = m.complete;
    m.clique = m.complete && g.loops.empty();
    m.k1 = n == 1 && g.loops.empty();
    return m;
}

// Deterministic DOT rendering; loops appear as repeated self-edges.
template <typename D>
std::string to_dot(const D& dom, const DivisorGraph<D>& g) {
    std::string out = "graph G {\n";
    for (const auto& v : g.vertices) out += "  \"" + dom.to_string(v) + "\";\n";
    for (const auto& [i, j] : g.edges)
        out += "  \"" + dom.to_string(g.vertices[static_cast<std::size_t>(i)]) + "\" -- \"" +
               dom.to_string(g.vertices[static_cast<std::size_t>(j)]) + "\";\n";
    for (const auto& [v, count] : g.loops) {
        std::string label = dom.to_string(g.vertices[static_cast<std::size_t>(v)]);
        for (int k = 0; k < count; ++k) out += "  \"" + label + "\" -- \"" + label + "\";\n";
    }
    out += "}\n";
    return out;
}

template <typename D>
nlohmann::ordered_json graph_to_json(const D& dom, const DivisorGraph<D>& g,
                                     bool with_metrics = true) {
    nlohmann::ordered_json j;
    j["target"] = dom.to_string(g.target);
    j["backend"] = dom.name();
    j["tau"] = g.relation;
    j["reduced"] = g.reduced;
    nlohmann::ordered_json verts = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices) verts.push_back(dom.to_string(v));
    j["vertices"] = std::move(verts);
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(nlohmann::ordered_json::array({a, b}));
    j["edges"] = std::move(edges);
    nlohmann::ordered_json loops = nlohmann::ordered_json::object();
    for (const auto& [v, count] : g.loops) loops[std::to_string(v)] = count;
    j["loops"] = std::move(loops);
    if (with_metrics) {
        GraphMetrics m = metrics(g);
        nlohmann::ordered_json mj;
        mj["empty"] = m.empty_graph;
        mj["k1"] = m.k1;
        mj["connected"] = m.connected;
        mj["complete"] = m.complete;
        mj["pseudoclique"] = m.pseudoclique;
        mj["clique"] = m.clique;
        if (m.empty_graph)
            mj["diameter"] = nullptr;
        else if (m.diameter)
            mj["diameter"] = *m.diameter;
        else
            mj["diameter"] = "inf";
        mj["deg"] = m.deg;
        mj["degl"] = m.degl;
        j["metrics"] = std::move(mj);
    }
    return j;
}

} // namespace taugraph
