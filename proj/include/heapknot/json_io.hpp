#pragma once

#include <json.hpp>

#include "cochain.hpp"
#include "cocycles.hpp"
#include "coloring.hpp"
#include "presentation.hpp"
#include "state_sum.hpp"

namespace heapknot {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline ordered_json group_json(const FiniteGroup& g) {
    ordered_json j;
    j["order"] = g.order;
    j["names"] = g.names;
    std::vector<std::vector<int>> table(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) table[a][b] = g.op(a, b);
    j["mul_table"] = table;
    return j;
}

// Sparse value table: sorted [x, y, z, value] rows, zero entries omitted.
inline ordered_json cochain_json(const Cochain2& c) {
    ordered_json rows = ordered_json::array();
    for (int x = 0; x < c.order; ++x)
        for (int y = 0; y < c.order; ++y)
            for (int z = 0; z < c.order; ++z) {
                long long v = c.coeff.reduce(c.at(x, y, z));
                if (v != 0) rows.push_back({x, y, z, v});
            }
    return rows;
}

inline ordered_json cohomology_json(const CohomologyResult& r) {
    ordered_json j;
    j["rank"] = r.free_rank;
    std::vector<std::string> torsion;
    for (const auto& d : r.torsion) torsion.push_back(d.get_str());
    j["torsion"] = torsion;
    ordered_json basis = ordered_json::array();
    for (const auto& c : r.basis) basis.push_back(cochain_json(c));
    j["basis"] = basis;
    return j;
}

inline ordered_json crossing_sites_json(const FramedLink& link) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : crossing_sites(link)) {
        ordered_json j;
        j["kind"] = s.kind == CrossingSite::Letter ? "letter" : "kink";
        j["sign"] = s.sign;
        if (s.kind == CrossingSite::Letter) {
            j["letter"] = s.letter_index;
        } else {
            j["component"] = s.component;
            j["kink"] = s.kink_index;
            j["strand"] = s.strand;
        }
        j["under_component"] = s.under_component;
        arr.push_back(j);
    }
    return arr;
}

inline ordered_json coloring_json(const Coloring& c) {
    ordered_json pairs = ordered_json::array();
    for (const auto& pr : c.top) pairs.push_back({pr.p, pr.q});
    return pairs;
}

inline ordered_json invariant_json(const InvariantValue& v) {
    ordered_json terms = ordered_json::array();
    for (const auto& [key, mult] : v.terms) {
        ordered_json pairs = ordered_json::array();
        for (const auto& [b0, b1] : key) pairs.push_back({b0, b1});
        terms.push_back({{"key", pairs}, {"mult", mult}});
    }
    ordered_json j;
    j["coeff"] = v.coeff.str();
    j["components"] = v.component_count;
    j["terms"] = terms;
    return j;
}

inline ordered_json presentation_json(const Presentation& p) {
    ordered_json j;
    j["generators"] = p.gens;
    ordered_json rels = ordered_json::array();
    for (const auto& r : p.relators) {
        ordered_json runs = ordered_json::array();
        for (const auto& [s, e] : r.runs) runs.push_back({p.gens[s], e});
        rels.push_back(runs);
    }
    j["relators"] = rels;
    return j;
}

}  // namespace heapknot
