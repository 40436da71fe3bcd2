#include <catch2/catch_amalgamated.hpp>

#include <heapknot/group.hpp>

using namespace heapknot;

TEST_CASE("group construction from specs") {
    FiniteGroup z4 = make_group("Z4");
    z4.validate();
    CHECK(z4.order == 4);
    CHECK(z4.names[3] == "3");

    FiniteGroup d3 = make_group("D3");
    d3.validate();
    CHECK(d3.order == 6);
    CHECK(d3.names[0] == "r0");
    CHECK(d3.names[3] == "ar0");
    // a r a = r^-1
    int a = d3.name_to_index("ar0"), r = d3.name_to_index("r1");
    CHECK(d3.op(d3.op(a, r), a) == d3.inv[r]);

    FiniteGroup klein = make_group("Z2xZ2");
    klein.validate();
    CHECK(klein.order == 4);
    for (int x = 0; x < 4; ++x)
        if (x != klein.identity) CHECK(klein.op(x, x) == klein.identity);

    make_group("Z2 x D3").validate();

    CHECK_THROWS_AS(make_group("Q8"), std::invalid_argument);
    CHECK_THROWS_AS(make_group("Z0"), std::invalid_argument);
    CHECK_THROWS_AS(make_group("Zx"), std::invalid_argument);
}

TEST_CASE("heap operation") {
    FiniteGroup z5 = make_group("Z5");
    CHECK(z5.heap(1, 3, 4) == 2);  // 1 - 3 + 4 mod 5
    for (const char* spec : {"Z4", "D3"}) {
        FiniteGroup g = make_group(spec);
        for (int x = 0; x < g.order; ++x)
            for (int y = 0; y < g.order; ++y) {
                CHECK(g.heap(x, x, y) == y);
                CHECK(g.heap(x, y, y) == x);
            }
    }
}

TEST_CASE("para-associativity holds exhaustively up to order 8") {
    for (const char* spec : {"Z5", "Z8", "D3", "D4", "Z2xZ2", "Z2xZ4"}) {
        FiniteGroup g = make_group(spec);
        const int o = g.order;
        bool ok = true;
        for (int a = 0; a < o && ok; ++a)
            for (int b = 0; b < o && ok; ++b)
                for (int c = 0; c < o && ok; ++c)
                    for (int u = 0; u < o && ok; ++u)
                        for (int v = 0; v < o; ++v) {
                            int lhs = g.heap(g.heap(a, b, c), u, v);
                            int mid = g.heap(a, g.heap(u, c, b), v);
                            int rhs = g.heap(a, b, g.heap(c, u, v));
                            if (lhs != mid || mid != rhs) {
                                ok = false;
                                break;
                            }
                        }
        CHECK(ok);
    }
}

TEST_CASE("ternary self-distributivity holds exhaustively up to order 6") {
    for (const char* spec : {"Z6", "D3", "Z2xZ2"}) {
        FiniteGroup g = make_group(spec);
        const int o = g.order;
        bool ok = true;
        for (int a = 0; a < o && ok; ++a)
            for (int b = 0; b < o && ok; ++b)
                for (int c = 0; c < o && ok; ++c)
                    for (int u = 0; u < o && ok; ++u)
                        for (int v = 0; v < o; ++v) {
                            int lhs = g.heap(g.heap(a, b, c), u, v);
                            int rhs = g.heap(g.heap(a, u, v), g.heap(b, u, v), g.heap(c, u, v));
                            if (lhs != rhs) {
                                ok = false;
                                break;
                            }
                        }
        CHECK(ok);
    }
}

TEST_CASE("generated subgroups") {
    FiniteGroup d3 = make_group("D3");
    Subgroup ga = generated_subgroup(d3, {d3.name_to_index("ar0")});
    CHECK(ga.members == std::vector<int>{0, 3});
    Subgroup gr = generated_subgroup(d3, {d3.name_to_index("r1")});
    CHECK(gr.members == std::vector<int>{0, 1, 2});

    FiniteGroup z4 = make_group("Z4");
    CHECK(generated_subgroup(z4, {2}).members == std::vector<int>{0, 2});

    CHECK_THROWS_AS(generated_subgroup(z4, {}), std::invalid_argument);
    CHECK_THROWS_AS(generated_subgroup(z4, {7}), std::out_of_range);
}

TEST_CASE("left cosets") {
    FiniteGroup z4 = make_group("Z4");
    CosetPartition p = left_cosets(z4, generated_subgroup(z4, {2}));
    CHECK(p.coset_count == 2);
    CHECK(p.coset_of[0] == p.coset_of[2]);
    CHECK(p.coset_of[1] == p.coset_of[3]);
    CHECK(p.coset_of[0] != p.coset_of[1]);

    FiniteGroup d3 = make_group("D3");
    Subgroup h = generated_subgroup(d3, {d3.name_to_index("ar0")});
    CosetPartition q = left_cosets(d3, h);
    CHECK(q.coset_count == 3);
    // cosets {1,a}, {r, r a}, {r^2, r^2 a}
    CHECK(q.coset_of[d3.name_to_index("r1")] ==
          q.coset_of[d3.op(d3.name_to_index("r1"), d3.name_to_index("ar0"))]);

    CosetPartition whole = left_cosets(d3, whole_group(d3));
    CHECK(whole.coset_count == 1);
}

TEST_CASE("coset compatibility under right heap translation") {
    FiniteGroup d3 = make_group("D3");
    Subgroup h = generated_subgroup(d3, {d3.name_to_index("ar0")});
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) {
            if (!same_left_coset(d3, h, u, v)) continue;
            for (int w = 0; w < 6; ++w) {
                int moved = d3.op(w, d3.op(d3.inv[u], v));
                CHECK(same_left_coset(d3, h, w, moved));
            }
        }
}
