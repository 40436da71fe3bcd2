#pragma once

#include <tuple>

#include "braid.hpp"
#include "freeword.hpp"
#include "group.hpp"
#include "matrix.hpp"

namespace heapknot {

struct Presentation {
    std::vector<std::string> gens;
    std::vector<FreeWord> relators;  // freely reduced, nonempty

    int gen_index(const std::string& name) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown generator " + name);
    }

    void add_relator(FreeWord w) {
        if (!w.empty()) relators.push_back(std::move(w));
    }
};

// Doubled-strand labels as free words; generators x_i, y_i per top strand.
struct SymbolicState {
    std::vector<std::pair<FreeWord, FreeWord>> pairs;
};

// Propagate label pairs through kinks and braid letters over the free group,
// mirroring the coloring maps.
inline SymbolicState symbolic_propagate(const FramedLink& link, SymbolicState state) {
    auto heap_mul = [](const std::pair<FreeWord, FreeWord>& pr, bool positive) {
        // translation word t: u^-1 v for positive, v^-1 u for negative
        return positive ? pr.first.inverse() * pr.second : pr.second.inverse() * pr.first;
    };
    for (int c = 0; c < link.component_count(); ++c) {
        long f = link.framings[c];
        auto& pr = state.pairs[link.kink_strand[c]];
        for (long k = 0; k < std::labs(f); ++k) {
            FreeWord a = heap_mul(pr, f > 0);
            pr = {pr.first * a, pr.second * a};
        }
    }
    for (const auto& l : link.braid.letters) {
        const int i = l.pos - 1;
        if (l.sign > 0) {
            auto under = state.pairs[i], over = state.pairs[i + 1];
            FreeWord t = heap_mul(over, true);
            state.pairs[i] = over;
            state.pairs[i + 1] = {under.first * t, under.second * t};
        } else {
            auto over = state.pairs[i], under = state.pairs[i + 1];
            FreeWord t = heap_mul(over, false);
            state.pairs[i] = {under.first * t, under.second * t};
            state.pairs[i + 1] = over;
        }
    }
    return state;
}

inline SymbolicState top_generators(int strands) {
    SymbolicState s;
    for (int i = 0; i < strands; ++i)
        s.pairs.push_back({FreeWord::gen(2 * i), FreeWord::gen(2 * i + 1)});
    return s;
}

// Fundamental-heap presentation of a framed braid closure: generators x_i, y_i
// per top strand, relators (bottom label)(top label)^-1 per strand position.
inline Presentation presentation(const FramedLink& link) {
    const int n = link.strand_count();
    Presentation p;
    for (int i = 0; i < n; ++i) {
        p.gens.push_back("x" + std::to_string(i + 1));
        p.gens.push_back("y" + std::to_string(i + 1));
    }
    // symbols: x_i -> 2i, y_i -> 2i+1, matching the gens list
    SymbolicState bottom = symbolic_propagate(link, top_generators(n));
    std::vector<FreeWord> raw;
    for (int i = 0; i < n; ++i) {
        raw.push_back(bottom.pairs[i].first * FreeWord::gen(2 * i, -1));
        raw.push_back(bottom.pairs[i].second * FreeWord::gen(2 * i + 1, -1));
    }
    // reorder symbols to match gens list: symbol 2i = x_{i+1} -> index 2i; ok as is
    for (auto& w : raw) p.add_relator(std::move(w));
    return p;
}

// Presentation of a pretzel link built from cyclically wired 2-strand twist
// blocks with even crossing counts; block i has top pairs (x_i, y_i) on the
// left and (y_{i+1}, x_{i+1}) on the right.
inline Presentation pretzel_presentation(const std::vector<int>& crossings) {
    const int r = static_cast<int>(crossings.size());
    if (r < 2) throw std::invalid_argument("pretzel needs at least two twist regions");
    for (int n : crossings)
        if (n % 2 != 0) throw std::invalid_argument("pretzel twist counts must be even");
    Presentation p;
    for (int i = 0; i < r; ++i) {
        p.gens.push_back("x" + std::to_string(i + 1));
        p.gens.push_back("y" + std::to_string(i + 1));
    }
    auto X = [](int i) { return FreeWord::gen(2 * i); };
    auto Y = [](int i) { return FreeWord::gen(2 * i + 1); };
    auto twist_block = [](int count) {
        FramedLink block;
        block.braid.strands = 2;
        for (int k = 0; k < std::abs(count); ++k)
            block.braid.letters.push_back({1, count > 0 ? 1 : -1});
        block.components = {{0}, {1}};
        block.component_of_strand = {0, 1};
        block.framings = {0, 0};
        block.kink_strand = {0, 1};
        return block;
    };
    // block i acts on the pairs (x_i, y_i) x (y_{i+1}, x_{i+1})
    std::vector<SymbolicState> bottoms(r);
    for (int i = 0; i < r; ++i) {
        int j = (i + 1) % r;
        SymbolicState top;
        top.pairs = {{X(i), Y(i)}, {Y(j), X(j)}};
        bottoms[i] = symbolic_propagate(twist_block(crossings[i]), top);
    }
    // the right bottom arcs of block i meet the left bottom arcs of block i+1
    // in opposite order
    for (int i = 0; i < r; ++i) {
        int j = (i + 1) % r;
        p.add_relator(bottoms[i].pairs[1].first * bottoms[j].pairs[0].second.inverse());
        p.add_relator(bottoms[i].pairs[1].second * bottoms[j].pairs[0].first.inverse());
    }
    return p;
}

// Rewrites a heap presentation over pairs (x_i, y_i) in terms of one strand
// generator per component plus alpha_i = x_i^-1 y_i. The strand generators
// must disappear from every relator; anything else signals a propagation bug.
inline Presentation alpha_form(const Presentation& p) {
    const int n = static_cast<int>(p.gens.size()) / 2;
    if (static_cast<int>(p.gens.size()) != 2 * n)
        throw std::invalid_argument("alpha_form: expected x/y generator pairs");
    // symbols in the rewritten alphabet: x_i -> i, alpha_i -> n + i
    std::vector<FreeWord> images(2 * n);
    for (int i = 0; i < n; ++i) {
        images[2 * i] = FreeWord::gen(i);
        images[2 * i + 1] = FreeWord::gen(i) * FreeWord::gen(n + i);
    }
    std::vector<FreeWord> rels;
    for (const auto& r : p.relators) {
        FreeWord w = r.substituted(images).cyclically_reduced();
        if (!w.empty()) rels.push_back(std::move(w));
    }

    auto is_x = [n](int sym) { return sym < n; };
    auto pure_alpha = [&](const FreeWord& w) {
        for (const auto& [s, e] : w.runs)
            if (is_x(s)) return false;
        return true;
    };

    // elimination edges: relators of cyclic shape x_j A x_i^-1 with A alpha-only
    struct Edge {
        int from, to;       // x_to = x_from * word
        FreeWord word;
        size_t relator;
    };
    std::vector<Edge> edges;
    for (size_t ri = 0; ri < rels.size(); ++ri) {
        const FreeWord& w = rels[ri];
        int xruns = 0;
        for (const auto& [s, e] : w.runs)
            if (is_x(s)) xruns += static_cast<int>(std::labs(e));
        if (xruns != 2) continue;
        std::vector<int> flat = w.letters();
        const size_t len = flat.size();
        for (size_t shift = 0; shift < len; ++shift) {
            int first = flat[shift];
            if (first < 0 || !is_x(FreeWord::letter_sym(first))) continue;
            // candidate rotation starting with x_j^{+1}
            std::vector<int> rot(len);
            for (size_t k = 0; k < len; ++k) rot[k] = flat[(shift + k) % len];
            if (rot.back() >= 0 || !is_x(FreeWord::letter_sym(rot.back()))) continue;
            bool middle_alpha = true;
            for (size_t k = 1; k + 1 < len; ++k)
                if (is_x(FreeWord::letter_sym(rot[k]))) middle_alpha = false;
            if (!middle_alpha) continue;
            Edge e;
            e.from = FreeWord::letter_sym(rot.front());
            e.to = FreeWord::letter_sym(rot.back());
            e.word = FreeWord::from_letters(std::vector<int>(rot.begin() + 1, rot.end() - 1));
            e.relator = ri;
            if (e.from != e.to) edges.push_back(e);
            break;
        }
    }

    // spanning forest over the strand generators
    std::vector<int> root(n, -1);
    std::vector<FreeWord> path(n);  // x_i = x_root(i) * path[i]
    std::vector<char> used_rel(rels.size(), 0);
    for (int start = 0; start < n; ++start) {
        if (root[start] >= 0) continue;
        root[start] = start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& e : edges) {
                if (root[e.from] == start && root[e.to] < 0) {
                    root[e.to] = start;
                    path[e.to] = path[e.from] * e.word;
                    used_rel[e.relator] = 1;
                    grew = true;
                } else if (root[e.to] == start && root[e.from] < 0) {
                    root[e.from] = start;
                    path[e.from] = path[e.to] * e.word.inverse();
                    used_rel[e.relator] = 1;
                    grew = true;
                }
            }
        }
    }

    std::vector<FreeWord> subst(2 * n);
    for (int i = 0; i < n; ++i) {
        subst[i] = FreeWord::gen(root[i]) * path[i];
        subst[n + i] = FreeWord::gen(n + i);
    }

    Presentation out;
    std::vector<int> symmap(2 * n, -1);
    std::vector<int> roots;
    for (int i = 0; i < n; ++i)
        if (root[i] == i) {
            symmap[i] = static_cast<int>(out.gens.size());
            out.gens.push_back("x" + std::to_string(i + 1));
            roots.push_back(i);
        }
    for (int i = 0; i < n; ++i) {
        symmap[n + i] = static_cast<int>(out.gens.size());
        out.gens.push_back("a" + std::to_string(i + 1));
    }

    std::vector<std::vector<int>> seen;
    for (size_t ri = 0; ri < rels.size(); ++ri) {
        if (used_rel[ri]) continue;  // consumed as a definition
        FreeWord w = rels[ri].substituted(subst).cyclically_reduced();
        if (w.empty()) continue;
        if (!pure_alpha(w))
            throw std::logic_error("alpha_form: strand generator survives in a relator");
        auto canon = cyclic_canonical(w);
        bool dup = false;
        for (const auto& c : seen)
            if (c == canon) dup = true;
        if (dup) continue;
        seen.push_back(canon);
        FreeWord renamed;
        for (const auto& [s, e] : w.runs) renamed.push(symmap[s], e);
        out.add_relator(renamed);
    }
    for (int rt : roots)
        for (const auto& r : out.relators)
            if (r.contains(symmap[rt]))
                throw std::logic_error("alpha_form: free factor generator occurs in a relator");
    return out;
}

// Repeatedly eliminates generators occurring exactly once in some relator.
inline Presentation tietze_simplify(Presentation p, int max_passes = 64) {
    for (int pass = 0; pass < max_passes; ++pass) {
        // tidy relators
        std::vector<FreeWord> rels;
        std::vector<std::vector<int>> seen;
        for (const auto& r : p.relators) {
            FreeWord w = r.cyclically_reduced();
            if (w.empty()) continue;
            auto canon = cyclic_canonical(w);
            bool dup = false;
            for (const auto& c : seen)
                if (c == canon) dup = true;
            if (!dup) {
                seen.push_back(canon);
                rels.push_back(w);
            }
        }
        p.relators = rels;

        // candidate: generator with a single +-1 occurrence in some relator,
        // chosen by (relator length, relator order, generator index)
        int best_rel = -1, best_gen = -1;
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            const FreeWord& w = p.relators[ri];
            for (size_t gi = 0; gi < p.gens.size(); ++gi) {
                if (w.occurrences(static_cast<int>(gi)) != 1) continue;
                if (best_rel < 0 ||
                    std::make_tuple(w.length(), w.runs, gi) <
                        std::make_tuple(p.relators[best_rel].length(), p.relators[best_rel].runs,
                                        static_cast<size_t>(best_gen))) {
                    best_rel = static_cast<int>(ri);
                    best_gen = static_cast<int>(gi);
                }
            }
        }
        if (best_rel < 0) break;

        // rotate the relator to start with g^{+-1}; g = w' gives the image
        std::vector<int> flat = p.relators[best_rel].letters();
        size_t at = 0;
        while (FreeWord::letter_sym(flat[at]) != best_gen) ++at;
        std::vector<int> rot(flat.size());
        for (size_t k = 0; k < flat.size(); ++k) rot[k] = flat[(at + k) % flat.size()];
        FreeWord rest = FreeWord::from_letters(std::vector<int>(rot.begin() + 1, rot.end()));
        FreeWord image = rot[0] > 0 ? rest.inverse() : rest;

        std::vector<FreeWord> images(p.gens.size());
        for (size_t gi = 0; gi < p.gens.size(); ++gi) images[gi] = FreeWord::gen(static_cast<int>(gi));
        images[best_gen] = image;

        Presentation q;
        std::vector<int> remap(p.gens.size(), -1);
        for (size_t gi = 0; gi < p.gens.size(); ++gi)
            if (static_cast<int>(gi) != best_gen) {
                remap[gi] = static_cast<int>(q.gens.size());
                q.gens.push_back(p.gens[gi]);
            }
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            if (static_cast<int>(ri) == best_rel) continue;
            FreeWord w = p.relators[ri].substituted(images).cyclically_reduced();
            FreeWord renamed;
            for (const auto& [s, e] : w.runs) renamed.push(remap[s], e);
            q.add_relator(renamed);
        }
        p = std::move(q);
    }
    return p;
}

// Free rank and torsion of the abelianization, via the SNF of the relator
// exponent-sum matrix.
inline AbelianInvariants abelianization(const Presentation& p) {
    const int g = static_cast<int>(p.gens.size());
    IntMatrix m(g, static_cast<int>(p.relators.size()));
    for (size_t ri = 0; ri < p.relators.size(); ++ri)
        for (const auto& [s, e] : p.relators[ri].runs) m.add(s, static_cast<int>(ri), e);
    return cokernel_invariants(m);
}

// Target of a homomorphism check: either a finite table group with explicit
// generator images, or a group given by power laws a^k = 1 and w^k = 1.
struct PowerLaw {
    FreeWord word;
    long exponent;  // 0 means infinite order: no relation
};

struct TargetGroupSpec {
    // finite route
    const FiniteGroup* finite = nullptr;
    std::vector<int> finite_images;
    // power-relator route
    int target_gens = 0;
    std::vector<long> gen_orders;  // 0 = infinite
    std::vector<PowerLaw> word_laws;
    std::vector<FreeWord> images;  // presentation generator -> target word
};

struct HomCheck {
    bool ok = true;
    bool surjective = false;      // meaningful for finite targets
    std::vector<std::string> trace;
};

namespace fh_detail2 {

// Reduce a word in the power-relator target: fold generator exponents by
// their orders (to the representative of least absolute value) and collapse
// maximal runs of declared law words, including their cyclic rotations, to a
// fixpoint. Sound but incomplete: an irreducible nonempty result only means
// "not verified".
inline FreeWord power_reduce(FreeWord w, const std::vector<long>& gen_orders,
                             const std::vector<PowerLaw>& laws, int max_iter = 200) {
    auto fold_gens = [&](FreeWord in) {
        FreeWord out;
        for (auto [s, e] : in.runs) {
            long k = gen_orders[s];
            if (k > 0) {
                e %= k;
                if (e < 0) e += k;
                if (2 * e > k) e -= k;  // least absolute value; ties positive
            }
            out.push(s, e);
        }
        return out;
    };
    // a law w^k = 1 holds for every cyclic rotation of w as well
    std::vector<std::pair<std::vector<int>, long>> patterns;
    for (const auto& law : laws) {
        if (law.exponent <= 0) continue;
        std::vector<int> base = law.word.letters();
        for (size_t shift = 0; shift < base.size(); ++shift) {
            std::vector<int> rot(base.size());
            for (size_t i = 0; i < base.size(); ++i) rot[i] = base[(i + shift) % base.size()];
            if (std::find_if(patterns.begin(), patterns.end(), [&](const auto& p) {
                    return p.first == rot;
                }) == patterns.end())
                patterns.emplace_back(rot, law.exponent);
        }
    }
    for (int iter = 0; iter < max_iter; ++iter) {
        FreeWord before = w;
        w = fold_gens(w);
        for (const auto& [pat, exponent] : patterns) {
            std::vector<int> flat = w.letters();
            const size_t pl = pat.size();
            std::vector<int> inv_pat(pl);
            for (size_t i = 0; i < pl; ++i) inv_pat[i] = -pat[pl - 1 - i];
            auto match_at = [&](const std::vector<int>& pattern, size_t pos) {
                if (pos + pl > flat.size()) return false;
                for (size_t i = 0; i < pl; ++i)
                    if (flat[pos + i] != pattern[i]) return false;
                return true;
            };
            for (size_t pos = 0; pos < flat.size(); ++pos) {
                for (int dir = 0; dir < 2; ++dir) {
                    const auto& pattern = dir == 0 ? pat : inv_pat;
                    long m = 0;
                    while (match_at(pattern, pos + m * pl)) ++m;
                    if (m == 0) continue;
                    long signed_m = dir == 0 ? m : -m;
                    long folded = signed_m % exponent;
                    if (folded < 0) folded += exponent;
                    if (2 * folded > exponent) folded -= exponent;
                    if (folded == signed_m) continue;
                    std::vector<int> next(flat.begin(), flat.begin() + pos);
                    const auto& rep_pat = folded >= 0 ? pat : inv_pat;
                    for (long rep = 0; rep < std::labs(folded); ++rep)
                        next.insert(next.end(), rep_pat.begin(), rep_pat.end());
                    next.insert(next.end(), flat.begin() + pos + m * pl, flat.end());
                    flat = next;
                    pos = 0;
                }
            }
            w = FreeWord::from_letters(flat);
        }
        if (w == before) break;
    }
    return w;
}

}  // namespace fh_detail2

inline HomCheck check_homomorphism(const Presentation& p, const TargetGroupSpec& t) {
    HomCheck out;
    if (t.finite) {
        const FiniteGroup& G = *t.finite;
        if (t.finite_images.size() != p.gens.size())
            throw std::invalid_argument("image missing for some generator");
        for (const auto& r : p.relators) {
            int v = G.identity;
            for (const auto& [s, e] : r.runs) {
                int g = e > 0 ? t.finite_images[s] : G.inv[t.finite_images[s]];
                for (long i = 0; i < std::labs(e); ++i) v = G.op(v, g);
            }
            bool id = v == G.identity;
            out.ok = out.ok && id;
            out.trace.push_back(r.str(p.gens) + " -> " + G.names[v]);
        }
        std::vector<int> gens = t.finite_images;
        out.surjective = !gens.empty() &&
                         generated_subgroup(G, gens).size() == G.order;
        return out;
    }
    if (t.images.size() != p.gens.size())
        throw std::invalid_argument("image missing for some generator");
    for (const auto& r : p.relators) {
        FreeWord img = r.substituted(t.images);
        FreeWord red = fh_detail2::power_reduce(img, t.gen_orders, t.word_laws);
        bool id = red.empty();
        out.ok = out.ok && id;
        std::vector<std::string> tnames;
        for (int i = 0; i < t.target_gens; ++i) tnames.push_back("g" + std::to_string(i + 1));
        out.trace.push_back(r.str(p.gens) + " -> " + (id ? "1" : red.str(tnames)));
    }
    return out;
}

}  // namespace heapknot
