#include <catch2/catch_amalgamated.hpp>

#include <heapknot/cocycles.hpp>

using namespace heapknot;

namespace {

// Exhaustive check of the cocycle condition, written out directly; the tests
// use this instead of trusting is_cocycle2.
bool passes_star(const FiniteGroup& X, const Cochain2& psi) {
    const int o = X.order;
    for (int x = 0; x < o; ++x)
        for (int y = 0; y < o; ++y)
            for (int z = 0; z < o; ++z)
                for (int u = 0; u < o; ++u)
                    for (int v = 0; v < o; ++v) {
                        int t = X.op(X.inv[u], v);
                        long long s = psi.at(x, y, z) -
                                      psi.at(X.op(x, t), X.op(y, t), X.op(z, t)) -
                                      psi.at(x, u, v) + psi.at(X.heap(x, y, z), u, v);
                        if (psi.coeff.reduce(s) != 0) return false;
                    }
    return true;
}

}  // namespace

TEST_CASE("degenerate generator") {
    FiniteGroup z2 = make_group("Z2");
    NamedCocycle psi = degenerate_generator(z2, Coeff::Z());
    CHECK(psi.cochain.at(0, 1, 1) == 1);
    CHECK(psi.cochain.at(0, 0, 1) == 0);

    FiniteGroup d3 = make_group("D3");
    NamedCocycle psid = degenerate_generator(d3, Coeff::Z());
    CHECK(passes_star(d3, psid.cochain));

    // its class generates the degenerate part: H^2_DH = A and the generator
    // pairs to 1 against the 2-cycle (u,u,u)
    auto dh = second_cohomology(d3, Coeff::Zm(3), ComplexVariant::degenerate());
    CHECK(dh.invariants() == AbelianInvariants{0, {3}});
    REQUIRE(dh.basis.size() == 1);
    long long pairing = evaluate(dh.basis[0], {{{1, 1, 1}, 1}});
    CHECK(pairing % 3 != 0);
}

TEST_CASE("ring cocycles") {
    NamedCocycle r4 = ring_cocycle(4, 1, 0, 0);
    CHECK(r4.cochain.at(1, 0, 2) == 2);

    NamedCocycle r2 = ring_cocycle(2, 1, 0, 0);
    CHECK(evaluate(r2.cochain, {{{0, 0, 1}, 1}, {{1, 0, 1}, 1}}) == 1);

    NamedCocycle r3 = ring_cocycle(3, 0, 0, 1);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) CHECK(r3.cochain.at(x, y, z) == ((z - y) % 3 + 3) % 3);
    CHECK(passes_star(r3.group, r3.cochain));

    for (long a = 0; a < 3; ++a)
        for (long b = 0; b < 3; ++b)
            for (long c = 0; c < 3; ++c)
                CHECK(passes_star(r3.group, ring_cocycle(3, a, b, c).cochain));

    CHECK_THROWS_AS(ring_cocycle(1, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("phi family on cyclic heaps") {
    NamedCocycle p1 = phi(3, 1);
    CHECK(p1.cochain.at(2, 0, 1) == 1);
    CHECK(p1.cochain.at(0, 0, 2) == 0);
    CHECK(p1.cochain.at(1, 0, 2) == 0);

    NamedCocycle p53 = phi(5, 3);
    CHECK(passes_star(p53.group, p53.cochain));
    CHECK(is_cocycle2(p53.group, ComplexVariant::nondegenerate(), p53.cochain));

    CHECK_THROWS_AS(phi(4, 0), std::out_of_range);
    CHECK_THROWS_AS(phi(4, 4), std::out_of_range);
}

TEST_CASE("psi family on dihedral heaps") {
    NamedCocycle p1 = psi_dihedral(3, 1);
    const FiniteGroup& d3 = p1.group;
    int r0 = d3.name_to_index("r0"), r1 = d3.name_to_index("r1");
    int ar0 = d3.name_to_index("ar0"), ar2 = d3.name_to_index("ar2");
    for (int x = 0; x < 6; ++x) {
        CHECK(p1.cochain.at(x, r0, r1) == 1);
        CHECK(p1.cochain.at(x, ar0, ar2) == 1);  // a r^0 -> a r^-1 = a r^2
        CHECK(p1.cochain.at(x, r0, ar0) == 0);
    }

    NamedCocycle p42 = psi_dihedral(4, 2);
    CHECK(passes_star(p42.group, p42.cochain));
}

TEST_CASE("linear combinations of phi remain cocycles") {
    FiniteGroup z4 = make_group("Z4");
    Cochain2 combo(4, Coeff::Z());
    long coeffs[] = {2, -1, 3};
    for (long i = 1; i <= 3; ++i) {
        NamedCocycle p = phi(4, i);
        for (size_t t = 0; t < combo.values.size(); ++t)
            combo.values[t] += coeffs[i - 1] * p.cochain.values[t];
    }
    CHECK(passes_star(z4, combo));
}

TEST_CASE("class ranks in cohomology") {
    FiniteGroup z3 = make_group("Z3");
    CHECK(class_rank(z3, {phi(3, 1).cochain, phi(3, 2).cochain}) == 2);

    // {psi, 2 psi} spans one class
    Cochain2 psi = phi(3, 1).cochain;
    Cochain2 twice = psi;
    for (auto& v : twice.values) v *= 2;
    CHECK(class_rank(z3, {psi, twice}) == 1);

    // a coboundary has class rank zero
    Cochain2 cob(3, Coeff::Z());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) cob.at(x, y, z) = (x == 0) - (z3.heap(x, y, z) == 0);
    CHECK(class_rank(z3, {cob}) == 0);

    CHECK_THROWS_AS(class_rank(z3, {ring_cocycle(3, 1, 0, 0).cochain}), std::invalid_argument);
}
