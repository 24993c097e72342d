#pragma once

// Command-line surface. Three subcommands share one engine path:
//   graph           render G_tau(x) (or its reduced form) as dot/json/text
//   factorizations  list tau-factorization classes, optionally atomic only
//   harness         run a named check over a sample, emit a report
//
// Exit codes: 0 ok, 1 a harness check found violations, 2 usage,
// 3 element/expression parse failure, 4 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "taugraph/harness.hpp"
#include "taugraph/sample.hpp"

namespace taugraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitCap = 4;

struct Options {
    std::string command;
    std::string backend = "int";
    std::string tau = "full";
    std::string format;
    std::string elem;
    std::vector<std::string> elems;
    std::string check;
    std::string range;
    long long norm_bound = 0;
    bool reduced = false;
    bool atomic = false;
    bool trust_factors = false;
    std::string output;
    std::uint64_t max_factorizations = 1000000;
    unsigned max_depth = 64;
    unsigned max_chain_depth = 64;
};

using Backend = std::variant<IntegerDomain, QuadraticDomain, GappedPolyDomain>;

inline Backend make_backend(const std::string& spec, bool trust_factors) {
    if (spec == "int") return IntegerDomain{};
    if (spec == "gapped-poly") return GappedPolyDomain{trust_factors};
    if (spec.starts_with("quad:")) {
        std::string num = spec.substr(5);
        try {
            std::size_t used = 0;
            long long d = std::stoll(num, &used);
            if (used != num.size()) throw std::invalid_argument(num);
            return QuadraticDomain(d);
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("bad quadratic discriminant '" + num + "'");
        }
    }
    throw UsageError("unknown backend '" + spec + "' (expected int, quad:<d>, gapped-poly)");
}

namespace detail_cli {

template <typename D>
typename D::element_type parse_canonical(const D& dom, const std::string& text) {
    auto raw = dom.parse(text);
    if constexpr (std::is_same_v<D, QuadraticDomain>) {
        if (dom.is_zero(raw)) throw DomainError("zero has no associate class");
    } else if constexpr (std::is_same_v<D, IntegerDomain>) {
        if (raw == 0) throw DomainError("zero has no associate class");
    }
    if (dom.is_unit(raw))
        throw DomainError("'" + text + "' is a unit; expected a non-zero non-unit");
    return dom.canonicalize(raw).first;
}

template <typename D>
std::pair<std::vector<typename D::element_type>, std::string> build_sample(const D& dom,
                                                                           const Options& opt) {
    if (!opt.range.empty()) {
        if constexpr (std::is_same_v<D, IntegerDomain>) {
            auto colon = opt.range.find(':');
            if (colon == std::string::npos)
                throw UsageError("--range wants the form lo:hi");
            long long lo = std::stoll(opt.range.substr(0, colon));
            long long hi = std::stoll(opt.range.substr(colon + 1));
            if (lo < 2 || hi < lo) throw UsageError("--range wants 2 <= lo <= hi");
            return {int_range_sample(lo, hi), "range " + opt.range};
        } else {
            throw UsageError("--range only applies to the integer backend");
        }
    }
    if (opt.norm_bound > 0) {
        if constexpr (std::is_same_v<D, QuadraticDomain>) {
            return {quad_norm_sample(dom, opt.norm_bound),
                    "norm<=" + std::to_string(opt.norm_bound)};
        } else {
            throw UsageError("--norm-bound only applies to quadratic backends");
        }
    }
    std::vector<std::string> texts = opt.elems;
    if (!opt.elem.empty()) texts.push_back(opt.elem);
    if (texts.empty())
        throw UsageError("no sample: give --range, --norm-bound, --elems or --elem");
    std::vector<typename D::element_type> out;
    for (const std::string& t : texts) out.push_back(parse_canonical(dom, t));
    return {out, "list[" + std::to_string(out.size()) + "]"};
}

inline void deliver(const Options& opt, std::ostream& out, const std::string& text) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + opt.output + "'");
    f << text;
}

template <typename D>
std::string render_graph_text(const D& dom, const DivisorGraph<D>& g) {
    GraphMetrics m = metrics(g);
    std::string s;
    s += "target: " + dom.to_string(g.target) + "\n";
    s += "backend: " + dom.name() + "\n";
    s += "tau: " + g.relation + "\n";
    s += "reduced: " + std::string(g.reduced ? "yes" : "no") + "\n";
    s += "vertices (" + std::to_string(g.vertices.size()) + "):";
    for (const auto& v : g.vertices) s += " " + dom.to_string(v);
    s += "\nedges (" + std::to_string(g.edges.size()) + "):";
    for (const auto& [i, j] : g.edges)
        s += " {" + dom.to_string(g.vertices[static_cast<std::size_t>(i)]) + ", " +
             dom.to_string(g.vertices[static_cast<std::size_t>(j)]) + "}";
    s += "\nloops:";
    if (g.loops.empty()) s += " none";
    for (const auto& [v, c] : g.loops)
        s += " " + dom.to_string(g.vertices[static_cast<std::size_t>(v)]) + ":" +
             std::to_string(c);
    s += "\n";
    if (m.empty_graph) {
        s += "empty graph (antimatter convention)\n";
        return s;
    }
    s += "connected: " + std::string(m.connected ? "yes" : "no") + "\n";
    s += "diameter: " + (m.diameter ? std::to_string(*m.diameter) : std::string("inf")) + "\n";
    s += "pseudoclique: " + std::string(m.pseudoclique ? "yes" : "no") + "\n";
    s += "clique: " + std::string(m.clique ? "yes" : "no") + "\n";
    s += "k1: " + std::string(m.k1 ? "yes" : "no") + "\n";
    return s;
}

template <typename D>
int run_graph(const D& dom, const Options& opt, std::ostream& out) {
    auto x = parse_canonical(dom, opt.elem);
    FactorEngine<D> eng(dom, make_tau(dom, opt.tau),
                        EngineConfig{opt.max_factorizations, opt.max_depth});
    DivisorGraph<D> g = build_graph(eng, x);
    if (opt.reduced) g = reduce(std::move(g));
    std::string format = opt.format.empty() ? "dot" : opt.format;
    if (format == "dot") {
        deliver(opt, out, to_dot(dom, g));
    } else if (format == "json") {
        deliver(opt, out, graph_to_json(dom, g).dump(2) + "\n");
    } else if (format == "text") {
        deliver(opt, out, render_graph_text(dom, g));
    } else {
        throw UsageError("graph formats: dot, json, text");
    }
    return kExitOk;
}

template <typename D>
int run_factorizations(const D& dom, const Options& opt, std::ostream& out) {
    auto x = parse_canonical(dom, opt.elem);
    FactorEngine<D> eng(dom, make_tau(dom, opt.tau),
                        EngineConfig{opt.max_factorizations, opt.max_depth});
    FactorizationSet<D> set =
        opt.atomic ? eng.atomic_factorizations(x) : eng.factorizations(x, true);

    std::string format = opt.format.empty() ? "text" : opt.format;
    if (format == "json") {
        nlohmann::ordered_json j;
        j["target"] = dom.to_string(x);
        j["backend"] = dom.name();
        j["tau"] = set.relation;
        j["atomic_only"] = opt.atomic;
        nlohmann::ordered_json classes = nlohmann::ordered_json::array();
        for (const auto& f : set.classes) {
            nlohmann::ordered_json c;
            c["unit"] = dom.unit_to_string(f.unit);
            nlohmann::ordered_json fs = nlohmann::ordered_json::array();
            for (const auto& a : f.factors) fs.push_back(dom.to_string(a));
            c["factors"] = std::move(fs);
            c["length"] = f.factors.size();
            c["trivial"] = f.trivial();
            classes.push_back(std::move(c));
        }
        j["classes"] = std::move(classes);
        j["counts"] = {{"total", set.classes.size()}, {"nontrivial", set.nontrivial_count()}};
        deliver(opt, out, j.dump(2) + "\n");
    } else if (format == "text") {
        std::string s;
        s += "target: " + dom.to_string(x) + "\n";
        s += "backend: " + dom.name() + "\n";
        s += "tau: " + set.relation + "\n";
        s += std::string(opt.atomic ? "atomic classes" : "classes") + " (" +
             std::to_string(set.classes.size()) + ", nontrivial " +
             std::to_string(set.nontrivial_count()) + "):\n";
        for (const auto& f : set.classes) {
            s += "  " + factorization_to_string(dom, f);
            if (f.trivial()) s += "   [trivial]";
            s += "\n";
        }
        deliver(opt, out, s);
    } else {
        throw UsageError("factorizations formats: text, json");
    }
    return kExitOk;
}

template <typename D>
int run_harness(const D& dom, const Options& opt, std::ostream& out) {
    FactorEngine<D> eng(dom, make_tau(dom, opt.tau),
                        EngineConfig{opt.max_factorizations, opt.max_depth});
    auto [sample, desc] = build_sample(dom, opt);

    HarnessReport rep;
    if (opt.check == "atom-iff-k1") {
        rep = check_atom_iff_k1(eng, sample, desc);
    } else if (opt.check == "ufd-family") {
        rep = check_ufd_family(eng, sample, desc);
    } else if (opt.check == "ffd-counts") {
        rep = check_ffd_counts(eng, sample, desc);
    } else if (opt.check == "accp-chain") {
        rep = check_accp_chain(eng, sample, desc, opt.max_chain_depth);
    } else if (opt.check == "classify") {
        rep = check_classify(eng, sample, desc);
    } else if (opt.check == "relation-properties") {
        rep = check_relation_properties(eng, sample, desc);
    } else {
        throw UsageError("unknown check '" + opt.check +
                         "' (atom-iff-k1, ufd-family, ffd-counts, accp-chain, classify, "
                         "relation-properties)");
    }

    std::string format = opt.format.empty() ? "json" : opt.format;
    if (format == "json") {
        deliver(opt, out, rep.body.dump(2) + "\n");
    } else if (format == "text") {
        std::string s;
        s += "check: " + rep.body["check"].get<std::string>() + "\n";
        s += "backend: " + rep.body["backend"].get<std::string>() + "\n";
        s += "tau: " + rep.body["tau"].get<std::string>() + "\n";
        s += "sample: " + rep.body["sample"].get<std::string>() + "\n";
        s += "verdict: " + rep.body["verdict"].get<std::string>() + " (" +
             std::to_string(rep.violations) + " violations)\n";
        for (const auto& v : rep.body["violations"]) {
            s += "  " + v["element"].get<std::string>() + ": expected " +
                 v["expected"].get<std::string>() + ", observed " +
                 v["observed"].get<std::string>() + "\n";
        }
        deliver(opt, out, s);
    } else {
        throw UsageError("harness formats: json, text");
    }
    return rep.violations == 0 ? kExitOk : kExitViolation;
}

} // namespace detail_cli

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"tau-factorizations, tau-atoms and tau-irreducible divisor graphs"};
    app.set_config("--config", "", "read options from a key=value file");
    app.require_subcommand(0, 1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--backend", opt.backend,
                        "element domain: int, quad:<d> (d in -1,-2,-5,-6,-10), gapped-poly")
            ->capture_default_str();
        cmd->add_option("--tau", opt.tau,
                        "relation: full, empty, subset:<pred>, same-degree, coprime, parity")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "output format (dot|json|text; command default)");
        cmd->add_option("--output", opt.output, "write output to this file instead of stdout");
        cmd->add_flag("--trust-factors", opt.trust_factors,
                      "accept degree>=4 polynomial factors as irreducible");
        cmd->add_option("--max-factorizations", opt.max_factorizations,
                        "enumeration cap; exceeding it is a loud failure")
            ->capture_default_str();
        cmd->add_option("--max-depth", opt.max_depth, "recursion depth cap")
            ->capture_default_str();
    };

    CLI::App* graph_cmd = app.add_subcommand("graph", "build the tau-irreducible divisor graph");
    graph_cmd->configurable();
    add_common(graph_cmd);
    graph_cmd->add_option("--elem", opt.elem, "the element")->required();
    graph_cmd->add_flag("--reduced", opt.reduced, "drop loops (reduced graph)");

    CLI::App* fact_cmd =
        app.add_subcommand("factorizations", "list tau-factorization classes of an element");
    fact_cmd->configurable();
    add_common(fact_cmd);
    fact_cmd->add_option("--elem", opt.elem, "the element")->required();
    fact_cmd->add_flag("--atomic", opt.atomic, "only tau-atomic factorizations");

    CLI::App* harness_cmd =
        app.add_subcommand("harness", "run a characterization/property check over a sample");
    harness_cmd->configurable();
    add_common(harness_cmd);
    harness_cmd->add_option("--check", opt.check,
                            "atom-iff-k1 | ufd-family | ffd-counts | accp-chain | classify | "
                            "relation-properties")
        ->required();
    harness_cmd->add_option("--range", opt.range, "integer sample lo:hi");
    harness_cmd->add_option("--norm-bound", opt.norm_bound, "quadratic sample: 2 <= norm <= N");
    harness_cmd->add_option("--elems", opt.elems, "explicit element list")->delimiter(',');
    harness_cmd->add_option("--elem", opt.elem, "a single element");
    harness_cmd->add_option("--max-chain-depth", opt.max_chain_depth,
                            "cap for accp-chain search")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "taugraph: error: usage: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Backend backend = make_backend(opt.backend, opt.trust_factors);
        return std::visit(
            [&](const auto& dom) -> int {
                if (graph_cmd->parsed()) return detail_cli::run_graph(dom, opt, out);
                if (fact_cmd->parsed()) return detail_cli::run_factorizations(dom, opt, out);
                if (harness_cmd->parsed()) return detail_cli::run_harness(dom, opt, out);
                err << "taugraph: error: usage: no subcommand given (try --help)\n";
                return kExitUsage;
            },
            backend);
    } catch (const UsageError& e) {
        err << "taugraph: error: usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CapExceeded& e) {
        err << "taugraph: error: cap: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        err << "taugraph: error: parse: " << e.what() << "\n";
        return kExitParse;
    } catch (const DomainError& e) {
        err << "taugraph: error: domain: " << e.what() << "\n";
        return kExitParse;
    }
}

} // namespace taugraph::cli
