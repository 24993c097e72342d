#pragma once

// Enumeration of tau-factorizations up to rearrangement and associates.
//
// Factor multisets are produced by depth-first expansion over canonical
// divisors with a non-decreasing order constraint, so each class appears
// exactly once; the pairwise tau condition is checked incrementally as
// factors are chosen. Termination is guaranteed because the measure is
// multiplicative and every non-unit has measure >= 2, bounding any
// factorization length by log2(measure(x)).

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taugraph/tau.hpp"

namespace taugraph {

struct EngineConfig {
    std::uint64_t max_factorizations = 1000000;
    unsigned max_depth = 64;
};

template <typename D>
struct Factorization {
    using element_type = typename D::element_type;

    element_type target;                   // canonical
    typename D::unit_type unit;            // target = unit * prod(factors)
    std::vector<element_type> factors;     // canonical non-units, ascending

    bool trivial() const { return factors.size() == 1; }
};

template <typename D>
struct FactorizationSet {
    typename D::element_type target;
    std::string relation;
    bool include_trivial = true;
    bool exhaustive = true; // enumeration ran to completion (else CapExceeded was thrown)
    std::vector<Factorization<D>> classes; // sorted by length, then factor order

    std::size_t nontrivial_count() const {
        std::size_t n = 0;
        for (const auto& f : classes)
            if (!f.trivial()) ++n;
        return n;
    }
};

template <typename D>
class FactorEngine {
public:
    using element_type = typename D::element_type;

    FactorEngine(const D& dom, TauRelation<D> tau, EngineConfig cfg = {})
        : dom_(dom), tau_(std::move(tau)), cfg_(cfg),
          atom_memo_(Less{&dom_}), divisor_memo_(Less{&dom_}) {}

    const D& domain() const { return dom_; }
    const TauRelation<D>& tau() const { return tau_; }
    const EngineConfig& config() const { return cfg_; }

    // True iff the candidate multiplies out to its target and every
    // unordered pair of factors is tau-related (vacuous for one factor).
    bool is_tau_factorization(const Factorization<D>& f) const {
        if (f.factors.empty()) return false;
        element_type prod = f.factors.front();
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            if (dom_.is_unit(f.factors[i])) return false;
            if (i > 0) prod = dom_.mul(prod, f.factors[i]);
        }
        if (!dom_.equal(dom_.apply_unit(f.unit, prod), f.target)) return false;
        for (std::size_t i = 0; i < f.factors.size(); ++i)
            for (std::size_t j = i + 1; j < f.factors.size(); ++j)
                if (!tau_.holds(dom_, f.factors[i], f.factors[j])) return false;
        return true;
    }

    FactorizationSet<D> factorizations(const element_type& x, bool include_trivial = true) const {
        FactorizationSet<D> out;
        out.target = x;
        out.relation = tau_.name;
        out.include_trivial = include_trivial;
        enumerate(x, [&](const std::vector<element_type>& factors) {
            if (include_trivial || factors.size() > 1)
                out.classes.push_back(assemble(x, factors));
            return true;
        });
        sort_classes(out.classes);
        return out;
    }

    FactorizationSet<D> atomic_factorizations(const element_type& x) const {
        FactorizationSet<D> out;
        out.target = x;
        out.relation = tau_.name;
        enumerate(x, [&](const std::vector<element_type>& factors) {
            for (const element_type& f : factors)
                if (!is_atom(f)) return true;
            out.classes.push_back(assemble(x, factors));
            return true;
        });
        sort_classes(out.classes);
        return out;
    }

    // x is a tau-atom iff its only tau-factorization is the trivial one.
    bool is_atom(const element_type& x) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = atom_memo_.find(x);
            if (it != atom_memo_.end()) return it->second;
        }
        bool nontrivial_found = false;
        enumerate(x, [&](const std::vector<element_type>& factors) {
            if (factors.size() > 1) {
                nontrivial_found = true;
                return false;
            }
            return true;
        });
        bool atom = !nontrivial_found;
        {
            std::lock_guard<std::mutex> lock(mu_);
            atom_memo_.emplace(x, atom);
        }
        return atom;
    }

    // Non-associate elements occurring as a factor in some tau-factorization
    // of x, the trivial one included, so x's class is always present.
    std::vector<element_type> tau_divisors(const element_type& x) const {
        std::set<element_type, Less> seen{Less{&dom_}};
        enumerate(x, [&](const std::vector<element_type>& factors) {
            for (const element_type& f : factors) seen.insert(f);
            return true;
        });
        return {seen.begin(), seen.end()};
    }

    std::vector<element_type> tau_irreducible_divisors(const element_type& x) const {
        std::vector<element_type> out;
        for (const element_type& d : tau_divisors(x))
            if (is_atom(d)) out.push_back(d);
        return out;
    }

    // Replaces factors by the supplied factorizations of them, folding the
    // sub-units into the leading unit. The result always multiplies back to
    // the target; whether it is again a tau-factorization is exactly the
    // refinability question and is not checked here.
    static Factorization<D> refine(const D& dom, const Factorization<D>& f,
                                   const std::vector<std::optional<Factorization<D>>>& subs) {
        if (subs.size() != f.factors.size())
            throw DomainError("refinement needs one (optional) factorization per factor");
        Factorization<D> out;
        out.target = f.target;
        out.unit = f.unit;
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            if (!subs[i]) {
                out.factors.push_back(f.factors[i]);
                continue;
            }
            const Factorization<D>& s = *subs[i];
            if (!dom.equal(s.target, f.factors[i]))
                throw DomainError("refinement target mismatch at index " + std::to_string(i));
            out.unit = dom.unit_mul(out.unit, s.unit);
            out.factors.insert(out.factors.end(), s.factors.begin(), s.factors.end());
        }
        std::sort(out.factors.begin(), out.factors.end(),
                  [&dom](const element_type& a, const element_type& b) { return dom.less(a, b); });
        return out;
    }

    // Canonical divisor list, memoized per canonical element.
    const std::vector<element_type>& divisors(const element_type& x) const {
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = divisor_memo_.find(x);
            if (it != divisor_memo_.end()) return it->second;
        }
        std::vector<element_type> divs = dom_.divisors(x);
        std::lock_guard<std::mutex> lock(mu_);
        return divisor_memo_.emplace(x, std::move(divs)).first->second;
    }

    // Visits every factor multiset (ascending, canonical) whose product is
    // associate to x and which satisfies tau pairwise; the single-element
    // multiset {x} (the trivial factorization) is always visited. The
    // visitor returns false to stop early.
    template <typename Visitor>
    void enumerate(const element_type& x, Visitor&& visit) const {
        require_canonical_nonunit(x);
        std::vector<element_type> chosen;
        chosen.reserve(cfg_.max_depth + 1);
        std::uint64_t emitted = 0;
        bool stop = false;
        expand(x, std::nullopt, chosen, emitted, stop, visit);
    }

private:
    struct Less {
        const D* d;
        bool operator()(const element_type& a, const element_type& b) const {
            return d->less(a, b);
        }
    };

    void require_canonical_nonunit(const element_type& x) const {
        if (dom_.is_unit(x)) throw DomainError("units have no factorizations into non-units");
        if (!dom_.is_canonical(x))
            throw DomainError("expected a canonical element, got " + dom_.to_string(x));
    }

    Factorization<D> assemble(const element_type& x, std::vector<element_type> factors) const {
        Factorization<D> f;
        f.target = x;
        f.factors = std::move(factors);
        element_type prod = f.factors.front();
        for (std::size_t i = 1; i < f.factors.size(); ++i) prod = dom_.mul(prod, f.factors[i]);
        auto q = dom_.exact_divide(x, prod);
        if (!q || !dom_.is_unit(*q))
            throw DomainError("internal: factor product is not associate to the target");
        f.unit = dom_.as_unit(*q);
        return f;
    }

    void sort_classes(std::vector<Factorization<D>>& classes) const {
        std::sort(classes.begin(), classes.end(),
                  [this](const Factorization<D>& f, const Factorization<D>& g) {
                      if (f.factors.size() != g.factors.size())
                          return f.factors.size() < g.factors.size();
                      for (std::size_t i = 0; i < f.factors.size(); ++i) {
                          if (!dom_.equal(f.factors[i], g.factors[i]))
                              return dom_.less(f.factors[i], g.factors[i]);
                      }
                      return false;
                  });
    }

    template <typename Visitor>
    void expand(const element_type& rest, const std::optional<element_type>& lower,
                std::vector<element_type>& chosen, std::uint64_t& emitted, bool& stop,
                Visitor& visit) const {
        if (stop) return;
        if (chosen.size() >= cfg_.max_depth)
            throw CapExceeded("factorization depth exceeded max_depth=" +
                              std::to_string(cfg_.max_depth));
        const std::vector<element_type>& divs = divisors(rest);
        for (const element_type& d : divs) {
            if (stop) return;
            if (lower && dom_.less(d, *lower)) continue;
            bool tau_ok = true;
            for (const element_type& c : chosen) {
                if (!tau_.holds(dom_, c, d)) {
                    tau_ok = false;
                    break;
                }
            }
            if (!tau_ok) continue;
            auto q = dom_.exact_divide(rest, d);
            if (!q) throw DomainError("internal: divisor does not divide");
            if (dom_.is_unit(*q)) {
                chosen.push_back(d);
                if (++emitted > cfg_.max_factorizations)
                    throw CapExceeded("factorization count exceeded max_factorizations=" +
                                      std::to_string(cfg_.max_factorizations));
                if (!visit(static_cast<const std::vector<element_type>&>(chosen))) stop = true;
                chosen.pop_back();
            } else {
                element_type qc = dom_.canonicalize(*q).first;
                chosen.push_back(d);
                expand(qc, d, chosen, emitted, stop, visit);
                chosen.pop_back();
            }
        }
    }

    const D dom_; // domains are small value types; a copy avoids lifetime traps
    TauRelation<D> tau_;
    EngineConfig cfg_;
    mutable std::mutex mu_;
    mutable std::map<element_type, bool, Less> atom_memo_;
    mutable std::map<element_type, std::vector<element_type>, Less> divisor_memo_;
};

} // namespace taugraph
