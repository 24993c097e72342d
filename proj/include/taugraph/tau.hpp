#pragma once

// Symmetric relations tau on the non-zero non-units of a domain, selecting
// which factorizations count. Built-ins: full, empty, subset:<pred>,
// same-degree (polynomials), coprime and parity (integers).
//
// Predicates are evaluated mathematically on arbitrary associates; every
// built-in is associate-invariant by construction (subset predicates only
// see measure, degree and primality, all of which are associate-invariant,
// so the selected set S is a union of associate classes).

#include <functional>
#include <string>
#include <string_view>
#include <type_traits>

#include "taugraph/gapped_poly.hpp"
#include "taugraph/integers.hpp"
#include "taugraph/quadratic.hpp"

namespace taugraph {

struct RelationProps {
    bool symmetric = false;
    bool associate_preserving = false;
    bool multiplicative = false;
    bool divisive = false;
    bool refinable = false;
    bool combinable = false;
    bool reflexive = false;
};

template <typename D>
struct TauRelation {
    using element_type = typename D::element_type;

    std::string name;
    RelationProps props;
    std::function<bool(const D&, const element_type&, const element_type&)> predicate;

    bool holds(const D& dom, const element_type& a, const element_type& b) const {
        return predicate(dom, a, b);
    }
};

namespace detail {

enum class CmpOp { Eq, Ne, Le, Ge, Lt, Gt };

inline bool apply_cmp(CmpOp op, const BigInt& lhs, const BigInt& rhs) {
    switch (op) {
        case CmpOp::Eq: return lhs == rhs;
        case CmpOp::Ne: return lhs != rhs;
        case CmpOp::Le: return lhs <= rhs;
        case CmpOp::Ge: return lhs >= rhs;
        case CmpOp::Lt: return lhs < rhs;
        case CmpOp::Gt: return lhs > rhs;
    }
    return false;
}

inline std::pair<CmpOp, std::string> split_cmp(const std::string& atom, std::size_t at) {
    // two-char ops first
    std::string rest = atom.substr(at);
    if (rest.starts_with("==")) return {CmpOp::Eq, rest.substr(2)};
    if (rest.starts_with("!=")) return {CmpOp::Ne, rest.substr(2)};
    if (rest.starts_with("<=")) return {CmpOp::Le, rest.substr(2)};
    if (rest.starts_with(">=")) return {CmpOp::Ge, rest.substr(2)};
    if (rest.starts_with("<")) return {CmpOp::Lt, rest.substr(1)};
    if (rest.starts_with(">")) return {CmpOp::Gt, rest.substr(1)};
    throw UsageError("bad comparison in subset predicate: " + atom);
}

// One conjunct of a subset predicate: prime | measure OP n | degree OP n.
template <typename D>
std::function<bool(const D&, const typename D::element_type&)>
parse_subset_atom(const std::string& atom) {
    if (atom == "prime") {
        if constexpr (std::is_same_v<D, IntegerDomain>) {
            return [](const D& dom, const typename D::element_type& e) { return dom.is_prime(e); };
        } else {
            throw UsageError("'prime' subset predicate needs the integer backend");
        }
    }
    if (atom.starts_with("measure")) {
        auto [op, num] = split_cmp(atom, 7);
        BigInt n(num);
        return [op, n](const D& dom, const typename D::element_type& e) {
            return apply_cmp(op, dom.measure(e), n);
        };
    }
    if (atom.starts_with("degree")) {
        if constexpr (std::is_same_v<D, GappedPolyDomain>) {
            auto [op, num] = split_cmp(atom, 6);
            BigInt n(num);
            return [op, n](const D& dom, const typename D::element_type& e) {
                return apply_cmp(op, BigInt(dom.degree_of(e)), n);
            };
        } else {
            throw UsageError("'degree' subset predicate needs the gapped-poly backend");
        }
    }
    throw UsageError("unknown subset predicate atom: " + atom);
}

template <typename D>
std::function<bool(const D&, const typename D::element_type&)>
parse_subset_predicate(const std::string& expr) {
    if (expr.empty()) throw UsageError("subset relation needs a predicate, e.g. subset:measure<=20");
    std::vector<std::function<bool(const D&, const typename D::element_type&)>> conjuncts;
    std::size_t start = 0;
    while (start <= expr.size()) {
        std::size_t amp = expr.find('&', start);
        std::string atom = expr.substr(start, amp == std::string::npos ? amp : amp - start);
        conjuncts.push_back(parse_subset_atom<D>(atom));
        if (amp == std::string::npos) break;
        start = amp + 1;
    }
    return [conjuncts](const D& dom, const typename D::element_type& e) {
        for (const auto& c : conjuncts)
            if (!c(dom, e)) return false;
        return true;
    };
}

} // namespace detail

// Builds a relation from "name" or "name:params".
template <typename D>
TauRelation<D> make_tau(const D&, std::string_view spec) {
    using Elem = typename D::element_type;
    std::string s(spec);
    std::string name = s, params;
    if (auto pos = s.find(':'); pos != std::string::npos) {
        name = s.substr(0, pos);
        params = s.substr(pos + 1);
    }

    TauRelation<D> tau;
    tau.name = s;
    tau.props.symmetric = true;

    if (name == "full") {
        tau.props.associate_preserving = true;
        tau.props.multiplicative = true;
        tau.props.divisive = true;
        tau.props.refinable = true;
        tau.props.combinable = true;
        tau.props.reflexive = true;
        tau.predicate = [](const D&, const Elem&, const Elem&) { return true; };
        return tau;
    }
    if (name == "empty") {
        tau.props.associate_preserving = true;
        tau.props.multiplicative = true; // vacuously
        tau.props.divisive = true;       // vacuously
        tau.predicate = [](const D&, const Elem&, const Elem&) { return false; };
        return tau;
    }
    if (name == "subset") {
        auto member = detail::parse_subset_predicate<D>(params);
        tau.props.associate_preserving = true; // predicate language is associate-invariant
        tau.predicate = [member](const D& dom, const Elem& a, const Elem& b) {
            return member(dom, a) && member(dom, b);
        };
        return tau;
    }
    if (name == "same-degree" || name == "same_degree") {
        if constexpr (std::is_same_v<D, GappedPolyDomain>) {
            tau.props.associate_preserving = true;
            tau.props.reflexive = true;
            tau.predicate = [](const D& dom, const Elem& a, const Elem& b) {
                return dom.degree_of(a) == dom.degree_of(b);
            };
            return tau;
        }
        throw UsageError("relation 'same-degree' needs the gapped-poly backend");
    }
    if (name == "coprime") {
        if constexpr (std::is_same_v<D, IntegerDomain>) {
            tau.props.associate_preserving = true;
            tau.props.multiplicative = true;
            tau.props.divisive = true;
            tau.predicate = [](const D&, const Elem& a, const Elem& b) {
                return boost::multiprecision::gcd(abs_int(a), abs_int(b)) == 1;
            };
            return tau;
        }
        throw UsageError("relation 'coprime' needs the integer backend");
    }
    if (name == "parity") {
        if constexpr (std::is_same_v<D, IntegerDomain>) {
            tau.props.associate_preserving = true; // defined on positive representatives
            tau.props.reflexive = true;
            tau.predicate = [](const D&, const Elem& a, const Elem& b) {
                return abs_int(a) % 2 == abs_int(b) % 2;
            };
            return tau;
        }
        throw UsageError("relation 'parity' needs the integer backend");
    }
    throw UsageError("unknown relation '" + name +
                     "' (expected full, empty, subset:<pred>, same-degree, coprime, parity)");
}

} // namespace taugraph
