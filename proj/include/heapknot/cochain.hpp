#pragma once

#include <array>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>

#include "group.hpp"
#include "matrix.hpp"

namespace heapknot {

// Degree convention: degree-n chains are (2n-1)-tuples of X, so C_1 <-> X,
// C_2 <-> X^3, C_3 <-> X^5. The i-th "pair" of a degree-n tuple sits at
// positions (2i, 2i+1), 1-based, for i = 1..n-1; 1-tuples have no pairs.

// Coefficient ring: Z when mod == 0, Z_mod otherwise.
struct Coeff {
    long mod = 0;
    static Coeff Z() { return {0}; }
    static Coeff Zm(long m) {
        if (m < 2) throw std::invalid_argument("modulus must be >= 2");
        return {m};
    }
    bool is_modular() const { return mod != 0; }
    long long reduce(long long v) const {
        if (!mod) return v;
        long long r = v % mod;
        return r < 0 ? r + mod : r;
    }
    std::string str() const { return mod ? "Z" + std::to_string(mod) : "Z"; }
};

enum class VariantTag { Full, Degenerate, Nondegenerate, LocalizedAt, RelativeTo, LocalizedIterated, RelativeIterated };

// Which slice of the chain complex we work in. Subcomplex variants restrict
// the chain groups; Relative* variants are the corresponding quotients, whose
// cochains must vanish on the removed chains.
struct ComplexVariant {
    VariantTag tag = VariantTag::Full;
    std::optional<Subgroup> G, F;

    static ComplexVariant full() { return {VariantTag::Full, {}, {}}; }
    static ComplexVariant degenerate() { return {VariantTag::Degenerate, {}, {}}; }
    static ComplexVariant nondegenerate() { return {VariantTag::Nondegenerate, {}, {}}; }
    static ComplexVariant localized_at(Subgroup g) {
        return {VariantTag::LocalizedAt, std::move(g), {}};
    }
    static ComplexVariant relative_to(Subgroup g) {
        return {VariantTag::RelativeTo, std::move(g), {}};
    }
    static ComplexVariant localized_iterated(Subgroup g, Subgroup f) {
        return {VariantTag::LocalizedIterated, std::move(g), std::move(f)};
    }
    static ComplexVariant relative_iterated(Subgroup g, Subgroup f) {
        return {VariantTag::RelativeIterated, std::move(g), std::move(f)};
    }

    bool is_quotient() const {
        return tag == VariantTag::RelativeTo || tag == VariantTag::RelativeIterated ||
               tag == VariantTag::LocalizedIterated;
    }

    std::string str() const {
        switch (tag) {
            case VariantTag::Full: return "full";
            case VariantTag::Degenerate: return "dh";
            case VariantTag::Nondegenerate: return "ndh";
            case VariantTag::LocalizedAt: return "loc";
            case VariantTag::RelativeTo: return "rel";
            case VariantTag::LocalizedIterated: return "loc2";
            case VariantTag::RelativeIterated: return "rel2";
        }
        return "?";
    }
};

// A-valued function on ordered triples of X, dense.
struct Cochain2 {
    int order = 0;
    Coeff coeff;
    std::vector<long long> values;  // index (x,y,z) -> x*o^2 + y*o + z

    Cochain2() = default;
    Cochain2(int ord, Coeff a) : order(ord), coeff(a), values(static_cast<size_t>(ord) * ord * ord, 0) {}

    long long& at(int x, int y, int z) {
        return values[(static_cast<size_t>(x) * order + y) * order + z];
    }
    long long at(int x, int y, int z) const {
        return values[(static_cast<size_t>(x) * order + y) * order + z];
    }
    bool is_zero() const {
        for (long long v : values)
            if (coeff.reduce(v) != 0) return false;
        return true;
    }
};

struct CohomologyResult {
    long free_rank = 0;
    std::vector<mpz_class> torsion;
    std::vector<Cochain2> basis;        // representative cocycles
    long cocycle_rank = 0;              // rank of the cocycle lattice (Z) / generator count (Z_m)

    AbelianInvariants invariants() const { return {free_rank, torsion}; }
};

namespace tsd {

inline bool pair_admissible(const FiniteGroup& X, const ComplexVariant& var, int y, int z) {
    switch (var.tag) {
        case VariantTag::Full: return true;
        case VariantTag::Degenerate: return true;  // handled at tuple level
        case VariantTag::Nondegenerate: return y != z;
        case VariantTag::LocalizedAt: return y != z && same_left_coset(X, *var.G, y, z);
        case VariantTag::RelativeTo: return y != z && !same_left_coset(X, *var.G, y, z);
        case VariantTag::LocalizedIterated:
            return y != z && same_left_coset(X, *var.F, y, z) && !same_left_coset(X, *var.G, y, z);
        case VariantTag::RelativeIterated:
            return y != z && !same_left_coset(X, *var.G, y, z) && !same_left_coset(X, *var.F, y, z);
    }
    return false;
}

inline bool triple_admissible(const FiniteGroup& X, const ComplexVariant& var, int /*x*/, int y, int z) {
    if (var.tag == VariantTag::Degenerate) return y == z;
    return pair_admissible(X, var, y, z);
}

// Quintuples indexing the degree-2 cocycle equations. Quotient variants take
// the cocycle condition on the ambient (non-removed) chains; their cochains
// vanish on removed triples, which drops those terms from the equations.
inline bool quintuple_in_scope(const FiniteGroup& X, const ComplexVariant& var,
                               int y, int z, int u, int v) {
    switch (var.tag) {
        case VariantTag::Full: return true;
        case VariantTag::Degenerate: return y == z || u == v;
        case VariantTag::Nondegenerate:
        case VariantTag::RelativeTo:
        case VariantTag::RelativeIterated:
            return y != z && u != v;
        case VariantTag::LocalizedAt:
            return y != z && u != v && same_left_coset(X, *var.G, y, z) &&
                   same_left_coset(X, *var.G, u, v);
        case VariantTag::LocalizedIterated:
            return y != z && u != v && same_left_coset(X, *var.F, y, z) &&
                   same_left_coset(X, *var.F, u, v);
    }
    return false;
}

struct TripleIndex {
    int order = 0;
    std::vector<int> id;        // triple -> column id or -1
    std::vector<int> triples;   // column id -> packed triple

    TripleIndex() = default;
    TripleIndex(const FiniteGroup& X, const ComplexVariant& var) : order(X.order) {
        id.assign(static_cast<size_t>(order) * order * order, -1);
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y)
                for (int z = 0; z < order; ++z)
                    if (triple_admissible(X, var, x, y, z)) {
                        int packed = (x * order + y) * order + z;
                        id[packed] = static_cast<int>(triples.size());
                        triples.push_back(packed);
                    }
    }
    int count() const { return static_cast<int>(triples.size()); }
    int lookup(int x, int y, int z) const { return id[(x * order + y) * order + z]; }
};

// The four terms of the 2-cocycle condition on the quintuple (x,y,z,u,v):
//   psi(x,y,z) - psi(xu'v, yu'v, zu'v) - psi(x,u,v) + psi(xy'z, u, v) = 0
// with primes denoting inverses.
template <typename Sink>
inline void cocycle_terms(const FiniteGroup& X, int x, int y, int z, int u, int v, Sink&& sink) {
    sink(x, y, z, +1);
    int t = X.op(X.inv[u], v);
    sink(X.op(x, t), X.op(y, t), X.op(z, t), -1);
    sink(x, u, v, -1);
    sink(X.heap(x, y, z), u, v, +1);
}

// Equation matrix of the variant's degree-2 cocycle condition. For subcomplex
// variants any residual coefficient on an out-of-scope triple is a bug; for
// quotient variants those terms are killed by the vanishing constraint.
inline IntMatrix cocycle_equation_matrix(const FiniteGroup& X, const ComplexVariant& var,
                                         const TripleIndex& tix) {
    const int o = X.order;
    IntMatrix rows(0, tix.count());
    std::vector<long long> acc(static_cast<size_t>(o) * o * o, 0);
    std::vector<int> touched;
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y)
            for (int z = 0; z < o; ++z)
                for (int u = 0; u < o; ++u)
                    for (int v = 0; v < o; ++v) {
                        if (!quintuple_in_scope(X, var, y, z, u, v)) continue;
                        touched.clear();
                        cocycle_terms(X, x, y, z, u, v,
                                      [&](int a, int b, int c, int s) {
                                          int packed = (a * o + b) * o + c;
                                          if (acc[packed] == 0) touched.push_back(packed);
                                          acc[packed] += s;
                                      });
                        std::vector<std::pair<int, mpz_class>> row;
                        for (int packed : touched) {
                            long long cval = acc[packed];
                            acc[packed] = 0;
                            if (cval == 0) continue;
                            int col = tix.id[packed];
                            if (col < 0) {
                                if (!var.is_quotient())
                                    throw std::logic_error("boundary escaped the subcomplex");
                                continue;
                            }
                            row.emplace_back(col, mpz_class(static_cast<long>(cval)));
                        }
                        if (!row.empty()) {
                            rows.entries.push_back(std::move(row));
                            ++rows.rows;
                        }
                    }
    return rows.deduped_rows();
}

// delta^1 f (x,y,z) = f(x) - f(x y^-1 z), written on the variant's triples.
// Columns = elements of X.
inline IntMatrix coboundary1_matrix(const FiniteGroup& X, const TripleIndex& tix) {
    const int o = X.order;
    IntMatrix m(tix.count(), o);
    for (int col = 0; col < tix.count(); ++col) {
        int packed = tix.triples[col];
        int z = packed % o, y = (packed / o) % o, x = packed / (o * o);
        int w = X.heap(x, y, z);
        if (x == w) continue;
        m.entries[col].emplace_back(x, mpz_class(1));
        m.entries[col].emplace_back(w, mpz_class(-1));
    }
    return m;
}

// Nondegenerate triples a quotient-variant cochain must vanish on.
inline std::vector<int> removed_triples(const FiniteGroup& X, const ComplexVariant& var) {
    const int o = X.order;
    std::vector<int> out;
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y)
            for (int z = 0; z < o; ++z) {
                if (y == z) continue;
                if (!triple_admissible(X, var, x, y, z)) out.push_back((x * o + y) * o + z);
            }
    return out;
}

// Basis (columns over X) of the 1-cochains admitted by the variant: for
// quotient variants, those f whose coboundary vanishes on the removed triples.
// Degenerate has no 1-chains at all.
inline std::vector<std::vector<mpz_class>> one_cochain_basis(const FiniteGroup& X,
                                                             const ComplexVariant& var,
                                                             const Coeff& coeff) {
    const int o = X.order;
    if (var.tag == VariantTag::Degenerate) return {};
    if (!var.is_quotient()) {
        std::vector<std::vector<mpz_class>> cols;
        for (int i = 0; i < o; ++i) {
            std::vector<mpz_class> e(o, 0);
            e[i] = 1;
            cols.push_back(std::move(e));
        }
        return cols;
    }
    IntMatrix constraints(0, o);
    for (int packed : removed_triples(X, var)) {
        int z = packed % o, y = (packed / o) % o, x = packed / (o * o);
        int w = X.heap(x, y, z);
        if (x == w) continue;
        std::vector<std::pair<int, mpz_class>> row{{x, mpz_class(1)}, {w, mpz_class(-1)}};
        constraints.entries.push_back(std::move(row));
        ++constraints.rows;
    }
    constraints = constraints.deduped_rows();
    return coeff.is_modular() ? kernel_basis_mod(constraints, coeff.mod)
                              : kernel_basis(constraints);
}

inline std::vector<std::vector<mpz_class>> coboundary_generators(const FiniteGroup& X,
                                                                 const ComplexVariant& var,
                                                                 const TripleIndex& tix,
                                                                 const Coeff& coeff) {
    IntMatrix d1 = coboundary1_matrix(X, tix);
    std::vector<std::vector<mpz_class>> gens;
    for (const auto& f : one_cochain_basis(X, var, coeff)) {
        std::vector<mpz_class> img(tix.count(), 0);
        for (int r = 0; r < tix.count(); ++r)
            for (const auto& [c, v] : d1.entries[r])
                if (f[c] != 0) img[r] += v * f[c];
        if (std::any_of(img.begin(), img.end(), [](const mpz_class& e) { return e != 0; }))
            gens.push_back(std::move(img));
    }
    return gens;
}

inline Cochain2 vector_to_cochain(const FiniteGroup& X, const Coeff& coeff,
                                  const TripleIndex& tix, const std::vector<mpz_class>& vec) {
    Cochain2 c(X.order, coeff);
    for (int i = 0; i < tix.count(); ++i) {
        mpz_class v = vec[i];
        if (coeff.is_modular()) {
            v %= coeff.mod;
            if (v < 0) v += coeff.mod;
        }
        if (!v.fits_slong_p()) throw std::overflow_error("cochain value too large");
        c.values[tix.triples[i]] = v.get_si();
    }
    return c;
}

inline std::vector<mpz_class> cochain_to_vector(const Cochain2& psi, const TripleIndex& tix) {
    std::vector<mpz_class> v(tix.count());
    for (int i = 0; i < tix.count(); ++i) v[i] = static_cast<long>(psi.values[tix.triples[i]]);
    return v;
}

}  // namespace tsd

// Matrix of d_n from (2n-1)-tuples to (2n-3)-tuples of the full complex,
// with the alternating sign (-1)^i on the i-th pair removal.
inline IntMatrix boundary_matrix(const FiniteGroup& X, int n,
                                 size_t tuple_budget = size_t(4) << 20) {
    if (n < 2 || n > 4) throw std::invalid_argument("boundary_matrix: degree must be 2, 3 or 4");
    if (n == 4 && X.order > 8) throw std::invalid_argument("boundary_matrix: order > 8 in degree 4");
    const int o = X.order;
    size_t src = 1, dst = 1;
    for (int i = 0; i < 2 * n - 1; ++i) src *= o;
    for (int i = 0; i < 2 * n - 3; ++i) dst *= o;
    if (src > tuple_budget) throw std::invalid_argument("boundary_matrix: tuple budget exceeded");

    const int len = 2 * n - 1;
    std::vector<int> tup(len);
    // column-major construction, transposed into row storage at the end
    IntMatrix m(static_cast<int>(dst), static_cast<int>(src));
    std::vector<int> out(len - 2);
    for (size_t col = 0; col < src; ++col) {
        size_t rest = col;
        for (int i = len - 1; i >= 0; --i) {
            tup[i] = static_cast<int>(rest % o);
            rest /= o;
        }
        int sign = 1;
        for (int i = 1; i <= n - 1; ++i) {
            sign = -sign;  // (-1)^i
            const int y = tup[2 * i - 1], z = tup[2 * i];
            // remove pair i
            int w = 0;
            for (int j = 0; j < len; ++j)
                if (j != 2 * i - 1 && j != 2 * i) out[w++] = tup[j];
            size_t row = 0;
            for (int j = 0; j < len - 2; ++j) row = row * o + out[j];
            m.add(static_cast<int>(row), static_cast<int>(col), sign);
            // act on the prefix by y^-1 z, then remove pair i
            const int t = X.op(X.inv[y], z);
            for (int j = 0; j < 2 * i - 1; ++j) out[j] = X.op(out[j], t);
            row = 0;
            for (int j = 0; j < len - 2; ++j) row = row * o + out[j];
            m.add(static_cast<int>(row), static_cast<int>(col), -sign);
        }
    }
    m.sort_rows();
    return m;
}

// True iff the product A*B is the zero matrix (A, B sparse by rows).
inline bool product_is_zero(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("shape mismatch");
    // compute column-by-column of B against rows of A transposed: iterate rows of A
    for (int r = 0; r < a.rows; ++r) {
        std::map<int, mpz_class> acc;
        for (const auto& [k, av] : a.entries[r])
            for (const auto& [c, bv] : b.entries[k]) acc[c] += av * bv;
        for (const auto& [c, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

inline bool is_cocycle2(const FiniteGroup& X, const ComplexVariant& var, const Cochain2& psi) {
    const int o = X.order;
    if (psi.order != o) throw std::invalid_argument("group/cochain mismatch");
    // vanishing constraints of the variant
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y)
            for (int z = 0; z < o; ++z)
                if (!tsd::triple_admissible(X, var, x, y, z) &&
                    psi.coeff.reduce(psi.at(x, y, z)) != 0)
                    return false;
    auto value = [&](int a, int b, int c) -> long long {
        return tsd::triple_admissible(X, var, a, b, c) ? psi.at(a, b, c) : 0;
    };
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y)
            for (int z = 0; z < o; ++z)
                for (int u = 0; u < o; ++u)
                    for (int v = 0; v < o; ++v) {
                        if (!tsd::quintuple_in_scope(X, var, y, z, u, v)) continue;
                        long long s = 0;
                        tsd::cocycle_terms(X, x, y, z, u, v,
                                           [&](int a, int b, int c, int sg) { s += sg * value(a, b, c); });
                        if (psi.coeff.reduce(s) != 0) return false;
                    }
    return true;
}

// Basis of the solution lattice of the variant's cocycle condition. Over Z_m
// the generators describe the solution module (m-fold multiples are dropped).
inline std::vector<Cochain2> cocycle_basis2(const FiniteGroup& X, const Coeff& coeff,
                                            const ComplexVariant& var, long* rank_out = nullptr) {
    tsd::TripleIndex tix(X, var);
    IntMatrix m = tsd::cocycle_equation_matrix(X, var, tix);
    std::vector<Cochain2> out;
    long rank = 0;
    if (!coeff.is_modular()) {
        for (const auto& col : kernel_basis(m)) {
            out.push_back(tsd::vector_to_cochain(X, coeff, tix, col));
            ++rank;
        }
    } else {
        for (const auto& col : kernel_basis_mod(m, coeff.mod)) {
            Cochain2 c = tsd::vector_to_cochain(X, coeff, tix, col);
            if (c.is_zero()) continue;  // an m-fold multiple, trivial mod m
            out.push_back(std::move(c));
            ++rank;
        }
    }
    if (rank_out) *rank_out = rank;
    return out;
}

// H^2 of the variant complex: ker delta^2 / im delta^1, with delta^1 drawn
// from the variant's own 1-cochains.
//
// With u M v = diag(d_i) for the equation matrix M, the cocycle lattice is
// spanned by scaled columns of v, and v^-1 turns any cocycle vector into
// coordinates in that basis. Over Z_m the lattice { M x = 0 mod m } has basis
// c_i v_i with c_i = m / gcd(d_i, m), and the quotient additionally divides
// out m Z^T.
inline CohomologyResult second_cohomology(const FiniteGroup& X, const Coeff& coeff,
                                          const ComplexVariant& var) {
    tsd::TripleIndex tix(X, var);
    const int T = tix.count();
    IntMatrix m = unit_row_reduce(tsd::cocycle_equation_matrix(X, var, tix));
    SnfResult s = smith_normal_form(m, {.v = true, .v_inv = true});
    const auto& v = *s.v;
    const auto& vinv = *s.v_inv;
    auto bgens = tsd::coboundary_generators(X, var, tix, coeff);

    CohomologyResult res;
    const int r = s.rank;
    const int k = coeff.is_modular() ? T : T - r;  // columns of the cocycle basis

    std::vector<mpz_class> scale(T, 1);  // basis col i = scale[i] * v(:,i)
    if (coeff.is_modular()) {
        mpz_class mm(coeff.mod);
        for (int i = 0; i < r; ++i) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), s.factors[i].get_mpz_t(), mm.get_mpz_t());
            scale[i] = mm / g;
        }
    }
    auto basis_col = [&](int i) {  // i in [0, k)
        int src = coeff.is_modular() ? i : r + i;
        std::vector<mpz_class> col(T);
        for (int t = 0; t < T; ++t) col[t] = scale[src] * v[t][src];
        return col;
    };

    res.cocycle_rank = k;
    if (coeff.is_modular()) {
        long nontrivial = 0;
        for (int i = 0; i < k; ++i)
            if (!tsd::vector_to_cochain(X, coeff, tix, basis_col(i)).is_zero()) ++nontrivial;
        res.cocycle_rank = nontrivial;
    }
    if (k == 0) return res;

    // coordinates of a cocycle vector in the basis: entries of v^-1 b, scaled
    auto coords_of = [&](const std::vector<mpz_class>& b) {
        std::vector<mpz_class> y(T, 0);
        for (int i = 0; i < T; ++i)
            for (int t = 0; t < T; ++t)
                if (vinv[i][t] != 0 && b[t] != 0) y[i] += vinv[i][t] * b[t];
        std::vector<mpz_class> c(k);
        if (!coeff.is_modular()) {
            for (int i = 0; i < r; ++i)
                if (y[i] != 0) throw std::domain_error("image not contained in kernel");
            for (int i = 0; i < k; ++i) c[i] = y[r + i];
        } else {
            for (int i = 0; i < T; ++i) {
                if (y[i] % scale[i] != 0) throw std::domain_error("image not in mod-m kernel");
                c[i] = y[i] / scale[i];
            }
        }
        return c;
    };

    IntMatrix coords(k, 0);
    auto push = [&](const std::vector<mpz_class>& c) {
        for (int i = 0; i < k; ++i)
            if (c[i] != 0) coords.entries[i].emplace_back(coords.cols, c[i]);
        ++coords.cols;
    };
    for (const auto& g : bgens) push(coords_of(g));
    if (coeff.is_modular()) {
        // coords of m e_t: column t of v^-1, scaled by m / c_i
        mpz_class mm(coeff.mod);
        for (int t = 0; t < T; ++t) {
            std::vector<mpz_class> c(k);
            for (int i = 0; i < T; ++i) c[i] = (mm / scale[i]) * vinv[i][t];
            push(c);
        }
    }

    SnfResult sq = smith_normal_form(coords, {.u_inv = true});
    res.free_rank = k - sq.rank;
    for (const auto& d : sq.factors)
        if (d > 1) res.torsion.push_back(d);

    // representatives: preimages of the quotient's cyclic factors
    const auto& w = *sq.u_inv;
    auto rep_from = [&](int i) {
        std::vector<mpz_class> vec(T, 0);
        for (int j = 0; j < k; ++j)
            if (w[j][i] != 0) {
                auto col = basis_col(j);
                for (int t = 0; t < T; ++t) vec[t] += w[j][i] * col[t];
            }
        return tsd::vector_to_cochain(X, coeff, tix, vec);
    };
    for (int i = 0; i < sq.rank; ++i)
        if (sq.factors[i] > 1) res.basis.push_back(rep_from(i));
    for (int i = sq.rank; i < k; ++i) res.basis.push_back(rep_from(i));
    return res;
}

// Formal sum of triples with multiplicities.
using Chain2 = std::vector<std::pair<std::array<int, 3>, long long>>;

inline long long evaluate(const Cochain2& psi, const Chain2& chain) {
    long long s = 0;
    for (const auto& [t, mult] : chain) s += mult * psi.at(t[0], t[1], t[2]);
    return psi.coeff.reduce(s);
}

struct CoboundaryWitness {
    bool yes = false;
    std::vector<long long> f;  // 1-cochain over X when yes
};

// Is psi = delta^1 f solvable within the variant (over psi's coefficients)?
inline CoboundaryWitness is_coboundary(const FiniteGroup& X, const ComplexVariant& var,
                                       const Cochain2& psi) {
    tsd::TripleIndex tix(X, var);
    const Coeff& coeff = psi.coeff;
    auto fbasis = tsd::one_cochain_basis(X, var, coeff);
    std::vector<std::vector<mpz_class>> gens;
    IntMatrix d1 = tsd::coboundary1_matrix(X, tix);
    for (const auto& f : fbasis) {
        std::vector<mpz_class> img(tix.count(), 0);
        for (int r = 0; r < tix.count(); ++r)
            for (const auto& [c, v] : d1.entries[r])
                if (f[c] != 0) img[r] += v * f[c];
        gens.push_back(std::move(img));
    }
    if (coeff.is_modular()) {
        std::vector<mpz_class> unit(tix.count(), 0);
        for (int t = 0; t < tix.count(); ++t) {
            unit[t] = coeff.mod;
            gens.push_back(unit);
            unit[t] = 0;
        }
    }
    std::vector<mpz_class> target = tsd::cochain_to_vector(psi, tix);
    CoboundaryWitness out;
    if (gens.empty()) {
        out.yes = true;
        for (const auto& t : target)
            if (coeff.is_modular() ? (t % coeff.mod != 0) : (t != 0)) out.yes = false;
        out.f.assign(X.order, 0);
        return out;
    }
    LatticeSolver solver(gens);
    std::vector<mpz_class> c;
    try {
        c = solver.solve(target);
    } catch (const std::domain_error&) {
        return out;
    }
    out.yes = true;
    std::vector<mpz_class> f(X.order, 0);
    for (size_t i = 0; i < fbasis.size(); ++i)
        for (int e = 0; e < X.order; ++e) f[e] += c[i] * fbasis[i][e];
    out.f.resize(X.order);
    for (int e = 0; e < X.order; ++e) {
        mpz_class v = f[e];
        if (coeff.is_modular()) {
            v %= coeff.mod;
            if (v < 0) v += coeff.mod;
        }
        if (!v.fits_slong_p()) throw std::overflow_error("witness too large");
        out.f[e] = v.get_si();
    }
    return out;
}

}  // namespace heapknot
