#pragma once

#include "cochain.hpp"

namespace heapknot {

struct NamedCocycle {
    std::string label;
    FiniteGroup group;
    Cochain2 cochain;
    ComplexVariant variant;
};

// psi_0 = sum over (x,y) of chi_(x,y,y); generates the degenerate part of H^2.
inline NamedCocycle degenerate_generator(const FiniteGroup& X, const Coeff& coeff) {
    Cochain2 c(X.order, coeff);
    for (int x = 0; x < X.order; ++x)
        for (int y = 0; y < X.order; ++y) c.at(x, y, y) = 1;
    return {"deg", X, std::move(c), ComplexVariant::full()};
}

// psi_(a,b,c)(x,y,z) = (a x + b (z - y) + c)(z - y) on X = A = Z_n.
inline NamedCocycle ring_cocycle(long n, long a, long b, long c) {
    if (n < 2) throw std::invalid_argument("ring_cocycle: n must be >= 2");
    FiniteGroup X = make_group("Z" + std::to_string(n));
    Coeff coeff = Coeff::Zm(n);
    Cochain2 psi(X.order, coeff);
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            for (long z = 0; z < n; ++z) {
                long d = ((z - y) % n + n) % n;
                psi.at(static_cast<int>(x), static_cast<int>(y), static_cast<int>(z)) =
                    coeff.reduce((a * x + b * d + c) % n * d);
            }
    std::string label = "ring(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")";
    return {label, std::move(X), std::move(psi), ComplexVariant::full()};
}

// phi_i on Z_n with Z coefficients: indicator of over-pairs advancing by i.
inline NamedCocycle phi(long n, long i) {
    if (i < 1 || i > n - 1) throw std::out_of_range("phi: need 1 <= i <= n-1");
    FiniteGroup X = make_group("Z" + std::to_string(n));
    Cochain2 psi(X.order, Coeff::Z());
    for (long x = 0; x < n; ++x)
        for (long y = 0; y < n; ++y)
            psi.at(static_cast<int>(x), static_cast<int>(y), static_cast<int>((y + i) % n)) = 1;
    return {"phi_" + std::to_string(i), std::move(X), std::move(psi),
            ComplexVariant::nondegenerate()};
}

// psi_i on D_n with Z coefficients: detects over-pairs (r^j, r^{j+i}) and
// (a r^-j, a r^-j-i); rotation bases advance by r^i, reflection bases by r^-i.
inline NamedCocycle psi_dihedral(long n, long i) {
    if (i < 1 || i > n - 1) throw std::out_of_range("psi_dihedral: need 1 <= i <= n-1");
    FiniteGroup X = make_group("D" + std::to_string(n));
    Cochain2 psi(X.order, Coeff::Z());
    for (int x = 0; x < X.order; ++x)
        for (long j = 0; j < n; ++j) {
            psi.at(x, static_cast<int>(j), static_cast<int>((j + i) % n)) = 1;
            int refl = static_cast<int>(n + ((-j) % n + n) % n);
            int refl2 = static_cast<int>(n + ((-j - i) % n + n) % n);
            psi.at(x, refl, refl2) = 1;
        }
    return {"psi_" + std::to_string(i), std::move(X), std::move(psi),
            ComplexVariant::nondegenerate()};
}

// Rank of the span of the classes [psi_k] in H^2 over Z: lattice rank of
// (cocycles + coboundaries) minus that of the coboundaries alone.
inline long class_rank(const FiniteGroup& X, const std::vector<Cochain2>& cocycles) {
    const int o = X.order;
    size_t dim = static_cast<size_t>(o) * o * o;
    for (const auto& c : cocycles) {
        if (c.order != o) throw std::invalid_argument("class_rank: mixed groups");
        if (c.coeff.is_modular()) throw std::invalid_argument("class_rank: Z coefficients only");
    }
    tsd::TripleIndex tix(X, ComplexVariant::full());
    auto bgens = tsd::coboundary_generators(X, ComplexVariant::full(), tix, Coeff::Z());

    auto rank_of = [&](bool with_cocycles) {
        IntMatrix m(0, static_cast<int>(dim));
        for (const auto& g : bgens) {
            std::vector<std::pair<int, mpz_class>> row;
            for (int t = 0; t < tix.count(); ++t)
                if (g[t] != 0) row.emplace_back(tix.triples[t], g[t]);
            m.entries.push_back(std::move(row));
            ++m.rows;
        }
        if (with_cocycles)
            for (const auto& c : cocycles) {
                std::vector<std::pair<int, mpz_class>> row;
                for (size_t t = 0; t < dim; ++t)
                    if (c.values[t] != 0) row.emplace_back(static_cast<int>(t), mpz_class(static_cast<long>(c.values[t])));
                m.entries.push_back(std::move(row));
                ++m.rows;
            }
        return smith_normal_form(m).rank;
    };
    return rank_of(true) - rank_of(false);
}

}  // namespace heapknot
