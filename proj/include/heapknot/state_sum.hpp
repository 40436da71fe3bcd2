#pragma once

#include <map>

#include "cochain.hpp"
#include "coloring.hpp"

namespace heapknot {

// Weights multiply in A; additively that is a sum of signed cocycle values.
// Written multiplicatively, a value k stands for g^k (A = Z) or for the
// residue k (A = Z_m).
using WeightPair = std::pair<long long, long long>;
using InvariantKey = std::vector<WeightPair>;  // one pair per component

struct InvariantValue {
    Coeff coeff;
    int component_count = 0;
    std::map<InvariantKey, long long> terms;

    long long total_multiplicity() const {
        long long t = 0;
        for (const auto& [k, m] : terms) t += m;
        return t;
    }
    bool operator==(const InvariantValue& o) const {
        return coeff.mod == o.coeff.mod && component_count == o.component_count &&
               terms == o.terms;
    }
};

// Boltzmann weight of one colored site, for the lower (l = 0) or upper (l = 1)
// strand of the doubled under-arc. Positive sites weigh the incoming under
// labels against the over pair; negative sites weigh the outgoing labels and
// invert.
inline long long site_weight(const Cochain2& psi, const SiteRecord& r, int l) {
    const LabelPair& base = r.sign > 0 ? r.under_in : r.under_out;
    long long v = psi.at(l == 0 ? base.p : base.q, r.over.p, r.over.q);
    return psi.coeff.reduce(r.sign > 0 ? v : -v);
}

// Componentwise ribbon cocycle invariant: for each coloring, each component
// accumulates the weight pair over the sites whose under-arc it owns.
inline InvariantValue invariant(const FiniteGroup& X, const FramedLink& link,
                                const Cochain2& psi, int workers = 0,
                                bool verify_cocycle = true) {
    if (verify_cocycle && !is_cocycle2(X, ComplexVariant::full(), psi))
        throw std::invalid_argument("weight function is not a 2-cocycle");
    InvariantValue out;
    out.coeff = psi.coeff;
    out.component_count = link.component_count();
    for (const Coloring& c : enumerate_colorings(X, link, workers)) {
        InvariantKey key(link.component_count(), {0, 0});
        for (const auto& r : c.records) {
            key[r.under_component].first += site_weight(psi, r, 0);
            key[r.under_component].second += site_weight(psi, r, 1);
        }
        for (auto& [b0, b1] : key) {
            b0 = psi.coeff.reduce(b0);
            b1 = psi.coeff.reduce(b1);
        }
        ++out.terms[key];
    }
    return out;
}

}  // namespace heapknot
