#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace heapknot {

// Sparse integer matrix: per row, a sorted (col, value) list with no stored zeros.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, mpz_class>>> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), entries(r) {}

    void add(int r, int c, const mpz_class& v) {
        if (v == 0) return;
        auto& row = entries[r];
        for (auto& [cc, vv] : row) {
            if (cc == c) {
                vv += v;
                if (vv == 0) {
                    row.erase(std::find_if(row.begin(), row.end(),
                                           [c](const auto& e) { return e.first == c; }));
                }
                return;
            }
        }
        row.emplace_back(c, v);
    }

    void sort_rows() {
        for (auto& row : entries)
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
    }

    mpz_class at(int r, int c) const {
        for (const auto& [cc, vv] : entries[r])
            if (cc == c) return vv;
        return 0;
    }

    static IntMatrix from_dense(const std::vector<std::vector<long long>>& d) {
        IntMatrix m(static_cast<int>(d.size()), d.empty() ? 0 : static_cast<int>(d[0].size()));
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c)
                if (d[r][c] != 0) m.entries[r].emplace_back(c, mpz_class(static_cast<long>(d[r][c])));
        return m;
    }

    // Drops zero rows and duplicate rows (also duplicates up to sign).
    IntMatrix deduped_rows() const {
        IntMatrix out(0, cols);
        std::unordered_map<std::string, char> seen;
        for (const auto& row : entries) {
            if (row.empty()) continue;
            auto sorted = row;
            std::sort(sorted.begin(), sorted.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            int sign = sgn(sorted.front().second) >= 0 ? 1 : -1;
            std::string key;
            for (const auto& [c, v] : sorted) {
                key += std::to_string(c);
                key += ':';
                key += mpz_class(sign * v).get_str();
                key += ';';
            }
            if (seen.emplace(key, 1).second) {
                out.entries.push_back(sorted);
                ++out.rows;
            }
        }
        return out;
    }
};

// Which unimodular transforms to accumulate alongside the SNF.
struct SnfOptions {
    bool u = false, u_inv = false, v = false, v_inv = false;
};

// Invariant factors d_1 | d_2 | ... | d_rank, all positive.
struct SnfResult {
    std::vector<mpz_class> factors;
    int rank = 0;
    // When tracked: u * M * v = diag(factors).
    std::optional<std::vector<std::vector<mpz_class>>> u, u_inv, v, v_inv;
};

namespace snf_detail {

using Dense = std::vector<std::vector<mpz_class>>;

inline Dense identity(int n) {
    Dense m(n, std::vector<mpz_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

struct Worker {
    Dense a;
    int rows, cols;
    SnfOptions opt;
    Dense u, uinv, v, vinv;

    Worker(const IntMatrix& m, SnfOptions o) : rows(m.rows), cols(m.cols), opt(o) {
        a.assign(rows, std::vector<mpz_class>(cols, 0));
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, vv] : m.entries[r]) a[r][c] = vv;
        if (opt.u) u = identity(rows);
        if (opt.u_inv) uinv = identity(rows);
        if (opt.v) v = identity(cols);
        if (opt.v_inv) vinv = identity(cols);
    }

    void row_swap(int i, int j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        if (opt.u) std::swap(u[i], u[j]);
        if (opt.u_inv)
            for (int r = 0; r < rows; ++r) std::swap(uinv[r][i], uinv[r][j]);
    }
    void col_swap(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        if (opt.v)
            for (int r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
        if (opt.v_inv) std::swap(vinv[i], vinv[j]);
    }
    // row j += q * row i
    void row_add(int j, int i, const mpz_class& q) {
        if (q == 0) return;
        for (int c = 0; c < cols; ++c)
            if (a[i][c] != 0) a[j][c] += q * a[i][c];
        if (opt.u)
            for (int c = 0; c < rows; ++c)
                if (u[i][c] != 0) u[j][c] += q * u[i][c];
        if (opt.u_inv)  // the inverse picks up the opposite column operation
            for (int r = 0; r < rows; ++r)
                if (uinv[r][j] != 0) uinv[r][i] -= q * uinv[r][j];
    }
    // col j += q * col i
    void col_add(int j, int i, const mpz_class& q) {
        if (q == 0) return;
        for (int r = 0; r < rows; ++r)
            if (a[r][i] != 0) a[r][j] += q * a[r][i];
        if (opt.v)
            for (int r = 0; r < cols; ++r)
                if (v[r][i] != 0) v[r][j] += q * v[r][i];
        if (opt.v_inv)  // inverse picks up the opposite row operation
            for (int c = 0; c < cols; ++c)
                if (vinv[j][c] != 0) vinv[i][c] -= q * vinv[j][c];
    }
    void row_negate(int i) {
        for (int c = 0; c < cols; ++c) a[i][c] = -a[i][c];
        if (opt.u)
            for (int c = 0; c < rows; ++c) u[i][c] = -u[i][c];
        if (opt.u_inv)
            for (int r = 0; r < rows; ++r) uinv[r][i] = -uinv[r][i];
    }

    // Smallest nonzero |entry| in the trailing block, ties by (row, col).
    bool find_pivot(int t, int& pr, int& pc) {
        bool found = false;
        mpz_class best;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                mpz_class m = abs(a[r][c]);
                if (!found || m < best) {
                    found = true;
                    best = m;
                    pr = r;
                    pc = c;
                }
            }
        return found;
    }

    void run(SnfResult& out) {
        int t = 0;
        while (t < rows && t < cols) {
            int pr, pc;
            if (!find_pivot(t, pr, pc)) break;
            row_swap(t, pr);
            col_swap(t, pc);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int r = t + 1; r < rows; ++r) {
                    if (a[r][t] == 0) continue;
                    mpz_class q = a[r][t] / a[t][t];  // truncated division
                    row_add(r, t, -q);
                    if (a[r][t] != 0) {
                        // remainder is smaller; promote it to pivot and restart
                        row_swap(t, r);
                        dirty = true;
                    }
                }
                for (int c = t + 1; c < cols; ++c) {
                    if (a[t][c] == 0) continue;
                    mpz_class q = a[t][c] / a[t][t];
                    col_add(c, t, -q);
                    if (a[t][c] != 0) {
                        col_swap(t, c);
                        dirty = true;
                    }
                }
            }
            if (a[t][t] < 0) row_negate(t);
            ++t;
        }
        // enforce the divisibility chain
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < t; ++i) {
                if (a[i + 1][i + 1] % a[i][i] == 0) continue;
                changed = true;
                // fold d_{i+1} into column i, then run Euclid on the 2x2 block;
                // rows i, i+1 are zero outside columns {i, i+1} so full swaps are safe
                col_add(i, i + 1, 1);
                for (;;) {
                    if (a[i + 1][i] != 0) {
                        mpz_class q = a[i + 1][i] / a[i][i];
                        row_add(i + 1, i, -q);
                        if (a[i + 1][i] != 0) row_swap(i, i + 1);
                        continue;
                    }
                    if (a[i][i + 1] != 0) {
                        mpz_class q = a[i][i + 1] / a[i][i];
                        col_add(i + 1, i, -q);
                        if (a[i][i + 1] != 0) col_swap(i, i + 1);
                        continue;
                    }
                    break;
                }
                if (a[i][i] < 0) row_negate(i);
                if (a[i + 1][i + 1] < 0) row_negate(i + 1);
            }
        }
        out.rank = t;
        out.factors.resize(t);
        for (int i = 0; i < t; ++i) out.factors[i] = a[i][i];
    }
};

}  // namespace snf_detail

inline SnfResult smith_normal_form(const IntMatrix& m, SnfOptions opt = {}) {
    snf_detail::Worker w(m, opt);
    SnfResult out;
    w.run(out);
    if (opt.u) out.u = std::move(w.u);
    if (opt.u_inv) out.u_inv = std::move(w.uinv);
    if (opt.v) out.v = std::move(w.v);
    if (opt.v_inv) out.v_inv = std::move(w.vinv);
    return out;
}

// Row-space-preserving sparse reduction: repeatedly pivot on +-1 entries and
// eliminate their columns from all other rows. Keeps the SNF, kernels and the
// mod-m solution lattices intact while collapsing redundant equation sets.
inline IntMatrix unit_row_reduce(const IntMatrix& input) {
    std::vector<std::map<int, mpz_class>> rows;
    for (const auto& r : input.entries) {
        std::map<int, mpz_class> m;
        for (const auto& [c, v] : r) m[c] = v;
        if (!m.empty()) rows.push_back(std::move(m));
    }
    std::vector<char> done(rows.size(), 0);
    for (;;) {
        // shortest unprocessed row with a unit entry
        int best = -1;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (done[i] || rows[i].empty()) continue;
            bool unit = false;
            for (const auto& [c, v] : rows[i])
                if (v == 1 || v == -1) unit = true;
            if (unit && (best < 0 || rows[i].size() < rows[best].size()))
                best = static_cast<int>(i);
        }
        if (best < 0) break;
        done[best] = 1;
        int pc = -1;
        mpz_class pv;
        for (const auto& [c, v] : rows[best])
            if (v == 1 || v == -1) {
                pc = c;
                pv = v;
                break;
            }
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == best || rows[i].empty()) continue;
            auto it = rows[i].find(pc);
            if (it == rows[i].end()) continue;
            mpz_class q = it->second / pv;  // exact: pv is a unit
            for (const auto& [c, v] : rows[best]) {
                auto& cell = rows[i][c];
                cell -= q * v;
                if (cell == 0) rows[i].erase(c);
            }
        }
    }
    IntMatrix out(0, input.cols);
    for (const auto& r : rows) {
        if (r.empty()) continue;
        std::vector<std::pair<int, mpz_class>> row(r.begin(), r.end());
        out.entries.push_back(std::move(row));
        ++out.rows;
    }
    return out.deduped_rows();
}

// Columns spanning { x : M x = 0 } over Z.
inline std::vector<std::vector<mpz_class>> kernel_basis(const IntMatrix& m_in) {
    IntMatrix m = unit_row_reduce(m_in);
    SnfResult s = smith_normal_form(m, {.v = true});
    const auto& v = *s.v;
    std::vector<std::vector<mpz_class>> basis;
    for (int c = s.rank; c < m.cols; ++c) {
        std::vector<mpz_class> col(m.cols);
        for (int r = 0; r < m.cols; ++r) col[r] = v[r][c];
        basis.push_back(std::move(col));
    }
    return basis;
}

// Full-rank basis of the lattice { x in Z^cols : M x = 0 mod modulus }.
inline std::vector<std::vector<mpz_class>> kernel_basis_mod(const IntMatrix& m_in, long modulus) {
    if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
    IntMatrix m = unit_row_reduce(m_in);
    SnfResult s = smith_normal_form(m, {.v = true});
    const auto& v = *s.v;
    std::vector<std::vector<mpz_class>> basis;
    mpz_class mm(modulus);
    for (int c = 0; c < m.cols; ++c) {
        mpz_class scale = 1;
        if (c < s.rank) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), s.factors[c].get_mpz_t(), mm.get_mpz_t());
            scale = mm / g;
        }
        std::vector<mpz_class> col(m.cols);
        for (int r = 0; r < m.cols; ++r) col[r] = scale * v[r][c];
        basis.push_back(std::move(col));
    }
    return basis;
}

// Solves B c = target where B's columns are a lattice basis. Throws if the
// target is outside the column lattice.
class LatticeSolver {
  public:
    explicit LatticeSolver(const std::vector<std::vector<mpz_class>>& basis_cols) {
        dim_ = basis_cols.empty() ? 0 : static_cast<int>(basis_cols[0].size());
        k_ = static_cast<int>(basis_cols.size());
        IntMatrix m(dim_, k_);
        for (int c = 0; c < k_; ++c)
            for (int r = 0; r < dim_; ++r)
                if (basis_cols[c][r] != 0) m.entries[r].emplace_back(c, basis_cols[c][r]);
        snf_ = smith_normal_form(m, {.u = true, .v = true});
    }

    std::vector<mpz_class> solve(const std::vector<mpz_class>& target) const {
        const auto& u = *snf_.u;
        const auto& v = *snf_.v;
        std::vector<mpz_class> y(dim_, 0);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c)
                if (u[r][c] != 0 && target[c] != 0) y[r] += u[r][c] * target[c];
        std::vector<mpz_class> z(k_, 0);
        for (int i = 0; i < dim_; ++i) {
            if (i < snf_.rank) {
                if (i < k_) {
                    if (y[i] % snf_.factors[i] != 0)
                        throw std::domain_error("vector not in lattice span");
                    z[i] = y[i] / snf_.factors[i];
                } else if (y[i] != 0) {
                    throw std::domain_error("vector not in lattice span");
                }
            } else if (y[i] != 0) {
                throw std::domain_error("vector not in lattice span");
            }
        }
        std::vector<mpz_class> c(k_, 0);
        for (int r = 0; r < k_; ++r)
            for (int j = 0; j < k_; ++j)
                if (v[r][j] != 0 && z[j] != 0) c[r] += v[r][j] * z[j];
        return c;
    }

    bool contains(const std::vector<mpz_class>& target) const {
        try {
            solve(target);
            return true;
        } catch (const std::domain_error&) {
            return false;
        }
    }

  private:
    int dim_ = 0, k_ = 0;
    SnfResult snf_;
};

// Free rank plus torsion factors of an abelian group presented as
// Z^k / (lattice spanned by generator columns), with k = ambient rank.
struct AbelianInvariants {
    long free_rank = 0;
    std::vector<mpz_class> torsion;  // factors > 1, divisibility order

    bool operator==(const AbelianInvariants& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
};

inline AbelianInvariants cokernel_invariants(const IntMatrix& gens_as_columns) {
    SnfResult s = smith_normal_form(gens_as_columns);
    AbelianInvariants inv;
    inv.free_rank = gens_as_columns.rows - s.rank;
    for (const auto& d : s.factors)
        if (d > 1) inv.torsion.push_back(d);
    return inv;
}

// ker/im quotient: kernel basis columns define the ambient lattice, image
// generators must lie inside it. coeff_mod = 0 means coefficients in Z;
// otherwise the quotient is additionally taken mod coeff_mod (the ambient
// dimension's worth of mod-m relations is adjoined before the SNF).
inline AbelianInvariants quotient_invariants(
    const std::vector<std::vector<mpz_class>>& kernel_cols,
    const std::vector<std::vector<mpz_class>>& image_cols, long coeff_mod = 0) {
    const int k = static_cast<int>(kernel_cols.size());
    if (k == 0) {
        for (const auto& col : image_cols)
            for (const auto& e : col)
                if (e != 0) throw std::domain_error("image not contained in kernel");
        return {};
    }
    LatticeSolver solver(kernel_cols);
    IntMatrix coords(k, 0);
    auto push_col = [&](const std::vector<mpz_class>& target) {
        std::vector<mpz_class> c = solver.solve(target);
        for (int r = 0; r < k; ++r)
            if (c[r] != 0) coords.entries[r].emplace_back(coords.cols, c[r]);
        ++coords.cols;
    };
    for (const auto& col : image_cols) push_col(col);
    if (coeff_mod > 0) {
        const int dim = static_cast<int>(kernel_cols[0].size());
        std::vector<mpz_class> unit(dim, 0);
        for (int t = 0; t < dim; ++t) {
            unit[t] = coeff_mod;
            push_col(unit);
            unit[t] = 0;
        }
    }
    return cokernel_invariants(coords);
}

}  // namespace heapknot
