#pragma once

// Sampled checks of the structural properties a relation may have
// (symmetric, associate-preserving, multiplicative, divisive, refinable,
// combinable). Universally quantified statements are only ever tested on a
// finite sample: the verdict is "no counterexample at this bound", never a
// certificate. A returned witness always replays to a genuine violation.

#include <optional>
#include <string>
#include <vector>

#include "taugraph/factorization.hpp"

namespace taugraph {

enum class RelProperty {
    Symmetric,
    AssociatePreserving,
    Multiplicative,
    Divisive,
    Refinable,
    Combinable,
};

inline std::string property_name(RelProperty p) {
    switch (p) {
        case RelProperty::Symmetric: return "symmetric";
        case RelProperty::AssociatePreserving: return "associate-preserving";
        case RelProperty::Multiplicative: return "multiplicative";
        case RelProperty::Divisive: return "divisive";
        case RelProperty::Refinable: return "refinable";
        case RelProperty::Combinable: return "combinable";
    }
    return "?";
}

inline std::vector<RelProperty> all_properties() {
    return {RelProperty::Symmetric,      RelProperty::AssociatePreserving,
            RelProperty::Multiplicative, RelProperty::Divisive,
            RelProperty::Refinable,      RelProperty::Combinable};
}

struct PropertyCheckReport {
    std::string property;
    std::string relation;
    std::string sample;
    bool counterexample = false;
    std::vector<std::string> witness; // rendered elements / factorizations, role order per property
    std::string note;
};

template <typename D>
std::string factorization_to_string(const D& dom, const Factorization<D>& f) {
    std::string body;
    for (const auto& a : f.factors) {
        if (!body.empty()) body += " * ";
        std::string t = dom.to_string(a);
        if (t.find_first_of("+-*") != std::string::npos) t = "(" + t + ")";
        body += t;
    }
    std::string u = dom.unit_to_string(f.unit);
    if (u == "1") return body;
    return "(" + u + ") * " + body;
}

// Merges the factors at positions i and j of f into their product, folding
// the canonicalizing unit into the leading one.
template <typename D>
Factorization<D> combine_factors(const D& dom, const Factorization<D>& f, std::size_t i,
                                 std::size_t j) {
    auto [mc, mu] = dom.canonicalize(dom.mul(f.factors[i], f.factors[j]));
    Factorization<D> out;
    out.target = f.target;
    out.unit = dom.unit_mul(f.unit, mu);
    for (std::size_t k = 0; k < f.factors.size(); ++k)
        if (k != i && k != j) out.factors.push_back(f.factors[k]);
    out.factors.push_back(std::move(mc));
    std::sort(out.factors.begin(), out.factors.end(),
              [&dom](const auto& a, const auto& b) { return dom.less(a, b); });
    return out;
}

template <typename D>
PropertyCheckReport check_property(const FactorEngine<D>& eng, RelProperty property,
                                   const std::vector<typename D::element_type>& sample,
                                   const std::string& sample_desc) {
    using Elem = typename D::element_type;
    const D& dom = eng.domain();
    const TauRelation<D>& tau = eng.tau();

    PropertyCheckReport rep;
    rep.property = property_name(property);
    rep.relation = tau.name;
    rep.sample = sample_desc;

    auto found = [&](std::vector<std::string> witness, std::string note) {
        rep.counterexample = true;
        rep.witness = std::move(witness);
        rep.note = std::move(note);
    };

    switch (property) {
        case RelProperty::Symmetric: {
            for (const Elem& a : sample) {
                for (const Elem& b : sample) {
                    if (tau.holds(dom, a, b) != tau.holds(dom, b, a)) {
                        found({dom.to_string(a), dom.to_string(b)},
                              "tau(a,b) != tau(b,a)");
                        return rep;
                    }
                }
            }
            break;
        }
        case RelProperty::AssociatePreserving: {
            for (const Elem& a : sample) {
                for (const Elem& b : sample) {
                    if (!tau.holds(dom, a, b)) continue;
                    for (const auto& u : dom.unit_sample()) {
                        Elem b2 = dom.apply_unit(u, b);
                        if (!tau.holds(dom, a, b2)) {
                            found({dom.to_string(a), dom.to_string(b), dom.to_string(b2)},
                                  "tau(a,b) holds but tau(a, u*b) fails");
                            return rep;
                        }
                    }
                }
            }
            break;
        }
        case RelProperty::Multiplicative: {
            for (const Elem& a : sample) {
                for (const Elem& b : sample) {
                    if (!tau.holds(dom, a, b)) continue;
                    for (const Elem& c : sample) {
                        if (!tau.holds(dom, a, c)) continue;
                        Elem bc = dom.mul(b, c);
                        if (!tau.holds(dom, a, bc)) {
                            found({dom.to_string(a), dom.to_string(b), dom.to_string(c),
                                   dom.to_string(bc)},
                                  "tau(a,b) and tau(a,c) hold but tau(a,b*c) fails");
                            return rep;
                        }
                    }
                }
            }
            break;
        }
        case RelProperty::Divisive: {
            for (const Elem& a : sample) {
                for (const Elem& b : sample) {
                    if (!tau.holds(dom, a, b)) continue;
                    for (const Elem& d : eng.divisors(b)) {
                        if (!tau.holds(dom, a, d)) {
                            found({dom.to_string(a), dom.to_string(b), dom.to_string(d)},
                                  "tau(a,b) holds, d divides b, but tau(a,d) fails");
                            return rep;
                        }
                    }
                }
            }
            break;
        }
        case RelProperty::Refinable: {
            // Single-position refinements suffice on a sample: a refinement
            // at several positions is a composition of single-position ones,
            // each applied to a factorization that is itself checked here.
            for (const Elem& x : sample) {
                auto facts = eng.factorizations(x, true);
                for (const auto& f : facts.classes) {
                    for (std::size_t i = 0; i < f.factors.size(); ++i) {
                        auto subs_of_factor = eng.factorizations(f.factors[i], false);
                        for (const auto& s : subs_of_factor.classes) {
                            std::vector<std::optional<Factorization<D>>> subs(f.factors.size());
                            subs[i] = s;
                            Factorization<D> refined = FactorEngine<D>::refine(dom, f, subs);
                            if (!eng.is_tau_factorization(refined)) {
                                found({dom.to_string(x), factorization_to_string(dom, f),
                                       dom.to_string(f.factors[i]),
                                       factorization_to_string(dom, s),
                                       factorization_to_string(dom, refined)},
                                      "refining one factor broke the pairwise condition");
                                return rep;
                            }
                        }
                    }
                }
            }
            break;
        }
        case RelProperty::Combinable: {
            for (const Elem& x : sample) {
                auto facts = eng.factorizations(x, true);
                for (const auto& f : facts.classes) {
                    if (f.factors.size() < 2) continue;
                    for (std::size_t i = 0; i < f.factors.size(); ++i) {
                        for (std::size_t j = i + 1; j < f.factors.size(); ++j) {
                            Factorization<D> merged = combine_factors(dom, f, i, j);
                            if (!eng.is_tau_factorization(merged)) {
                                found({dom.to_string(x), factorization_to_string(dom, f),
                                       factorization_to_string(dom, merged)},
                                      "merging two factors broke the pairwise condition");
                                return rep;
                            }
                        }
                    }
                }
            }
            break;
        }
    }
    return rep;
}

} // namespace taugraph
