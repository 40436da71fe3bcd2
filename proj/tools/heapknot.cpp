// heapknot: heap colorings, TSD cohomology, ribbon cocycle invariants and
// fundamental-heap presentations for framed links given as braid closures.

#include <CLI11.hpp>

#include <heapknot/acceptance.hpp>
#include <heapknot/json_io.hpp>

#include <iostream>

using namespace heapknot;

namespace {

struct VariantSpec {
    std::string text = "full";

    ComplexVariant resolve(const FiniteGroup& g) const {
        auto parse_subgroup = [&](const std::string& body) {
            std::vector<int> gens;
            std::string cur;
            for (char ch : body + ",") {
                if (ch == ',') {
                    if (!cur.empty()) gens.push_back(g.name_to_index(cur));
                    cur.clear();
                } else {
                    cur.push_back(ch);
                }
            }
            if (gens.empty()) throw CLI::ValidationError("--variant", "empty subgroup spec");
            return generated_subgroup(g, gens);
        };
        if (text == "full") return ComplexVariant::full();
        if (text == "dh") return ComplexVariant::degenerate();
        if (text == "ndh") return ComplexVariant::nondegenerate();
        auto expect_prefix = [&](const std::string& p) {
            return text.size() > p.size() && text.compare(0, p.size(), p) == 0;
        };
        if (expect_prefix("loc:G=")) return ComplexVariant::localized_at(parse_subgroup(text.substr(6)));
        if (expect_prefix("rel:G=")) return ComplexVariant::relative_to(parse_subgroup(text.substr(6)));
        if (expect_prefix("rel2:G=")) {
            std::string rest = text.substr(7);
            auto split = rest.find(",F=");
            if (split == std::string::npos)
                throw CLI::ValidationError("--variant", "rel2 needs G=...,F=...");
            return ComplexVariant::relative_iterated(parse_subgroup(rest.substr(0, split)),
                                                     parse_subgroup(rest.substr(split + 3)));
        }
        throw CLI::ValidationError("--variant", "unknown variant " + text);
    }
};

Coeff parse_coeff(const std::string& text) {
    if (text == "Z") return Coeff::Z();
    if (text.size() > 1 && text[0] == 'Z') return Coeff::Zm(std::stol(text.substr(1)));
    throw CLI::ValidationError("--coeff", "expected Z or Z<m>");
}

NamedCocycle parse_cocycle(const std::string& spec, const FiniteGroup& g) {
    auto colon = spec.find(':');
    std::string family = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
    std::vector<long> args;
    if (colon != std::string::npos) {
        std::string cur;
        for (char ch : spec.substr(colon + 1) + ",") {
            if (ch == ',') {
                if (!cur.empty()) args.push_back(std::stol(cur));
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
    }
    if (family == "deg") return degenerate_generator(g, Coeff::Z());
    if (family == "ring") {
        if (args.size() != 3) throw CLI::ValidationError("--cocycle", "ring:a,b,c");
        if (g.spec.empty() || g.spec[0] != 'Z')
            throw CLI::ValidationError("--cocycle", "ring cocycles need a cyclic group");
        return ring_cocycle(g.order, args[0], args[1], args[2]);
    }
    if (family == "phi") {
        if (args.size() != 1) throw CLI::ValidationError("--cocycle", "phi:i");
        return phi(g.order, args[0]);
    }
    if (family == "psi") {
        if (args.size() != 1) throw CLI::ValidationError("--cocycle", "psi:i");
        return psi_dihedral(g.order / 2, args[0]);
    }
    throw CLI::ValidationError("--cocycle", "unknown family " + family);
}

void emit(const ordered_json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string invariant_text(const InvariantValue& v) {
    std::string out;
    for (const auto& [key, mult] : v.terms) {
        out += std::to_string(mult) + " * (";
        for (size_t c = 0; c < key.size(); ++c) {
            if (c) out += ", ";
            out += "[" + std::to_string(key[c].first) + "|" + std::to_string(key[c].second) + "]";
        }
        out += ")\n";
    }
    out += "total " + std::to_string(v.total_multiplicity()) + " colorings\n";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heap colorings, cohomology and cocycle invariants of framed links"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string group_spec = "Z2", coeff_spec = "Z", braid_text, cocycle_spec = "deg";
    VariantSpec variant;
    int strands = 1, workers = 0;
    std::vector<long> framings;
    bool as_json = false, emit_colorings = false, simplify = false, abelianize = false;
    std::string map_to;
    int criterion = 0;

    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto add_link_opts = [&](CLI::App* cmd) {
        cmd->add_option("--braid", braid_text, "whitespace-separated signed letters, e.g. \"1 -2 1\"");
        cmd->add_option("--strands", strands, "strand count of the braid")->required();
        cmd->add_option("--framings", framings, "framing integer per component")->required();
    };

    auto* coh = app.add_subcommand("cohomology", "second TSD cohomology of a group heap");
    coh->add_option("--group", group_spec, "group spec, e.g. Z4, D3, Z2xZ2")->required();
    coh->add_option("--coeff", coeff_spec, "coefficients: Z or Z<m>");
    coh->add_option("--variant", variant.text, "full|dh|ndh|loc:G=..|rel:G=..|rel2:G=..,F=..");
    coh->add_flag("--basis", emit_colorings, "include representative cocycles");

    auto* coc = app.add_subcommand("cocycles", "named 2-cocycle families");
    coc->add_option("--group", group_spec)->required();
    coc->add_option("--family", cocycle_spec, "deg | ring:a,b,c | phi:i | psi:i")->required();

    auto* col = app.add_subcommand("color", "enumerate heap colorings of a framed braid closure");
    col->add_option("--group", group_spec)->required();
    add_link_opts(col);
    col->add_option("--workers", workers, "enumeration threads (0 = auto)");
    col->add_flag("--emit-colorings", emit_colorings, "list the colorings");

    auto* inv = app.add_subcommand("invariant", "ribbon cocycle invariant of a framed link");
    inv->add_option("--group", group_spec)->required();
    inv->add_option("--coeff", coeff_spec, "coefficient sanity check: Z or Z<m>");
    inv->add_option("--cocycle", cocycle_spec, "deg | ring:a,b,c | phi:i | psi:i")->required();
    add_link_opts(inv);
    inv->add_option("--workers", workers);

    auto* fun = app.add_subcommand("fundheap", "fundamental-heap presentation of a framed link");
    add_link_opts(fun);
    fun->add_flag("--simplify", simplify, "run Tietze generator elimination");
    fun->add_flag("--abelianize", abelianize, "report the abelianization");
    fun->add_option("--map-to", map_to,
                    "finite target: <group-spec>:<gen>=<element>,... verifies a homomorphism");

    auto* rep = app.add_subcommand("reproduce", "run the acceptance suite");
    rep->add_option("--criterion", criterion, "run a single criterion (1-8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (coh->parsed()) {
            FiniteGroup g = make_group(group_spec);
            CohomologyResult r = second_cohomology(g, parse_coeff(coeff_spec), variant.resolve(g));
            ordered_json j = cohomology_json(r);
            if (!emit_colorings) j.erase("basis");
            std::string text = "H2(" + group_spec + ", " + coeff_spec + ", " + variant.text +
                               "): free rank " + std::to_string(r.free_rank) + ", torsion [";
            for (size_t i = 0; i < r.torsion.size(); ++i)
                text += (i ? "," : "") + r.torsion[i].get_str();
            text += "], cocycle rank " + std::to_string(r.cocycle_rank) + "\n";
            emit(j, as_json, text);
        } else if (coc->parsed()) {
            FiniteGroup g = make_group(group_spec);
            NamedCocycle c = parse_cocycle(cocycle_spec, g);
            bool ok = is_cocycle2(c.group, c.variant, c.cochain);
            ordered_json j;
            j["label"] = c.label;
            j["coeff"] = c.cochain.coeff.str();
            j["is_cocycle"] = ok;
            j["values"] = cochain_json(c.cochain);
            emit(j, as_json,
                 c.label + " over " + c.cochain.coeff.str() + ": " +
                     (ok ? "verified 2-cocycle" : "NOT a cocycle") + ", " +
                     std::to_string(j["values"].size()) + " nonzero values\n");
        } else if (col->parsed()) {
            FiniteGroup g = make_group(group_spec);
            FramedLink link = parse_link(braid_text, strands, framings);
            auto colorings = enumerate_colorings(g, link, workers);
            std::vector<long> bicount(link.component_count(), 0);
            for (const auto& c : colorings) {
                auto mono = classify(link, c);
                for (int k = 0; k < link.component_count(); ++k)
                    if (!mono[k]) ++bicount[k];
            }
            ordered_json j;
            j["count"] = colorings.size();
            j["bicolored_per_component"] = bicount;
            j["sites"] = crossing_sites_json(link);
            if (emit_colorings) {
                ordered_json arr = ordered_json::array();
                for (const auto& c : colorings) arr.push_back(coloring_json(c));
                j["colorings"] = arr;
            }
            std::string text = "colorings: " + std::to_string(colorings.size()) + "\n";
            for (int k = 0; k < link.component_count(); ++k)
                text += "component " + std::to_string(k) + ": " + std::to_string(bicount[k]) +
                        " bicolored\n";
            emit(j, as_json, text);
        } else if (inv->parsed()) {
            FiniteGroup g = make_group(group_spec);
            NamedCocycle c = parse_cocycle(cocycle_spec, g);
            if (inv->count("--coeff") != 0 && parse_coeff(coeff_spec).mod != c.cochain.coeff.mod)
                throw std::invalid_argument("--coeff disagrees with the cocycle family");
            FramedLink link = parse_link(braid_text, strands, framings);
            InvariantValue v = invariant(g, link, c.cochain, workers);
            emit(invariant_json(v), as_json, c.label + ":\n" + invariant_text(v));
        } else if (fun->parsed()) {
            FramedLink link = parse_link(braid_text, strands, framings);
            Presentation p = alpha_form(presentation(link));
            if (simplify) p = tietze_simplify(p);
            ordered_json j = presentation_json(p);
            std::string text = "generators:";
            for (const auto& g : p.gens) text += " " + g;
            text += "\nrelators:\n";
            for (const auto& r : p.relators) text += "  " + r.str(p.gens) + "\n";
            if (abelianize) {
                AbelianInvariants ab = abelianization(p);
                ordered_json ja;
                ja["rank"] = ab.free_rank;
                std::vector<std::string> t;
                for (const auto& d : ab.torsion) t.push_back(d.get_str());
                ja["torsion"] = t;
                j["abelianization"] = ja;
                text += "abelianization: Z^" + std::to_string(ab.free_rank);
                for (const auto& d : ab.torsion) text += " + Z_" + d.get_str();
                text += "\n";
            }
            if (!map_to.empty()) {
                auto colon = map_to.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("--map-to needs <group>:<gen>=<element>,...");
                FiniteGroup target = make_group(map_to.substr(0, colon));
                TargetGroupSpec t;
                t.finite = &target;
                t.finite_images.assign(p.gens.size(), target.identity);
                std::string cur;
                int depth = 0;
                auto apply = [&](const std::string& item) {
                    auto eq = item.find('=');
                    if (eq == std::string::npos)
                        throw std::invalid_argument("bad --map-to assignment: " + item);
                    t.finite_images[p.gen_index(item.substr(0, eq))] =
                        target.name_to_index(item.substr(eq + 1));
                };
                // commas inside parenthesized element names do not split
                for (char ch : map_to.substr(colon + 1) + ",") {
                    if (ch == '(') ++depth;
                    if (ch == ')') --depth;
                    if (ch == ',' && depth == 0) {
                        if (!cur.empty()) apply(cur);
                        cur.clear();
                    } else {
                        cur.push_back(ch);
                    }
                }
                HomCheck hc = check_homomorphism(p, t);
                j["homomorphism"] = hc.ok;
                j["surjective"] = hc.surjective;
                text += std::string("homomorphism: ") + (hc.ok ? "yes" : "no") +
                        (hc.surjective ? " (surjective)" : "") + "\n";
                for (const auto& line : hc.trace) text += "  " + line + "\n";
            }
            emit(j, as_json, text);
        } else if (rep->parsed()) {
            auto results = criterion > 0 ? acceptance::run_criterion(criterion)
                                         : acceptance::run_all();
            bool all_ok = true;
            for (const auto& r : results) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name;
                if (!r.detail.empty()) std::cout << " -- " << r.detail;
                std::cout << "\n";
                all_ok = all_ok && r.pass;
            }
            std::cout << (all_ok ? "all criteria passed\n" : "some criteria FAILED\n");
            return all_ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
