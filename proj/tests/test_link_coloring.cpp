#include <catch2/catch_amalgamated.hpp>

#include <heapknot/coloring.hpp>

#include <random>

using namespace heapknot;

TEST_CASE("braid parsing and components") {
    FramedLink hopf = parse_link("1 1", 2, {0, 0});
    CHECK(hopf.component_count() == 2);

    FramedLink trefoil = parse_link("1 1 1", 2, {0});
    CHECK(trefoil.component_count() == 1);

    FramedLink cord = parse_link("", 1, {3});
    CHECK(cord.component_count() == 1);
    CHECK(cord.total_sites() == 3);

    CHECK_THROWS_AS(parse_link("1 x", 2, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(parse_link("2", 2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(parse_link("0", 2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(parse_link("1 1", 2, {0}), std::invalid_argument);
}

TEST_CASE("crossing site inventory") {
    FramedLink t24 = parse_link("1 1 1 1", 2, {0, 0});
    auto sites = crossing_sites(t24);
    REQUIRE(sites.size() == 4);
    for (const auto& s : sites) {
        CHECK(s.kind == CrossingSite::Letter);
        CHECK(s.sign == 1);
    }
    // alternating under-component down the braid
    CHECK(sites[0].under_component != sites[1].under_component);
    CHECK(sites[0].under_component == sites[2].under_component);

    FramedLink c2 = parse_link("", 1, {2});
    auto kinks = crossing_sites(c2);
    REQUIRE(kinks.size() == 2);
    for (const auto& s : kinks) {
        CHECK(s.kind == CrossingSite::Kink);
        CHECK(s.sign == 1);
    }

    FramedLink mixed = parse_link("1", 2, {-1});
    auto ms = crossing_sites(mixed);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].kind == CrossingSite::Letter);
    CHECK(ms[1].kind == CrossingSite::Kink);
    CHECK(ms[1].sign == -1);

    CHECK(writhe(t24) == 4);
    CHECK(writhe(parse_link("1 -1 -1", 2, {0})) == -1);
}

TEST_CASE("positive kink on a Z3 pair") {
    FiniteGroup z3 = make_group("Z3");
    FramedLink c1 = parse_link("", 1, {1});
    LabelState s = {{0, 1}};
    LabelState out = propagate(z3, c1, s);
    CHECK(out[0].p == 1);
    CHECK(out[0].q == 2);
}

TEST_CASE("a letter followed by its inverse is the identity on states") {
    FiniteGroup d3 = make_group("D3");
    FramedLink cancel = parse_link("1 -1", 2, {0, 0});
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> el(0, 5);
    for (int trial = 0; trial < 50; ++trial) {
        LabelState s = {{el(rng), el(rng)}, {el(rng), el(rng)}};
        CHECK(propagate(d3, cancel, s) == s);
    }
}

TEST_CASE("coloring counts on telephone cords and torus links") {
    FiniteGroup z3 = make_group("Z3"), z5 = make_group("Z5"), d3 = make_group("D3");
    FramedLink c3 = parse_link("", 1, {3});

    auto cols = enumerate_colorings(z3, c3);
    CHECK(cols.size() == 9);
    int mono = 0;
    for (const auto& c : cols)
        if (classify(c3, c)[0]) ++mono;
    CHECK(mono == 3);  // n monocolorings and n(n-1) bicolorings

    CHECK(enumerate_colorings(z5, c3).size() == 5);
    CHECK(enumerate_colorings(d3, parse_link("1 1", 2, {0, 0})).size() == 36);
}

TEST_CASE("classification flags") {
    FiniteGroup z2 = make_group("Z2");
    FramedLink c2 = parse_link("", 1, {2});
    bool saw_bicolored = false;
    for (const auto& c : enumerate_colorings(z2, c2)) {
        auto flags = classify(c2, c);
        if (c.top[0].p == 0 && c.top[0].q == 1) {
            CHECK(!flags[0]);
            saw_bicolored = true;
        }
        if (c.top[0].p == c.top[0].q) CHECK(flags[0]);
    }
    CHECK(saw_bicolored);

    // a mixed link coloring: monochromatic first component, bicolored second
    FiniteGroup d3 = make_group("D3");
    FramedLink link = parse_link("1 1 1 1", 2, {0, 2});
    bool saw_mixed = false;
    for (const auto& c : enumerate_colorings(d3, link)) {
        auto flags = classify(link, c);
        if (flags[0] != flags[1]) saw_mixed = true;
    }
    CHECK(saw_mixed);
}

TEST_CASE("monochromatic over-arcs do not change under-arc colors") {
    FiniteGroup d3 = make_group("D3");
    FramedLink link = parse_link("1", 2, {0});
    std::vector<CrossingSite> sites = crossing_sites(link);
    for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q)
            for (int c = 0; c < 6; ++c) {
                LabelState s = {{p, q}, {c, c}};
                std::vector<SiteRecord> recs;
                propagate(d3, link, s, &sites, &recs);
                CHECK(recs[0].under_out == recs[0].under_in);
            }
}

TEST_CASE("monochromatic colorings of a framed knot number |X|") {
    FiniteGroup d3 = make_group("D3");
    for (const auto& link : {parse_link("1 1 1", 2, {2}), parse_link("", 1, {4})}) {
        long mono = 0;
        for (const auto& c : enumerate_colorings(d3, link))
            if (classify(link, c)[0]) ++mono;
        CHECK(mono == d3.order);
    }
}

TEST_CASE("coloring sets transform along braid moves") {
    FiniteGroup z6 = make_group("Z6");
    // conjugation: rotating the word preserves the count
    FramedLink base = parse_link("1 2 -1 2", 3, {0});
    FramedLink rot = parse_link("2 -1 2 1", 3, {0});
    CHECK(enumerate_colorings(z6, base).size() == enumerate_colorings(z6, rot).size());
    // insertion of sigma sigma^-1
    FramedLink ins = parse_link("1 2 2 -2 -1 2", 3, {0});
    CHECK(enumerate_colorings(z6, base).size() == enumerate_colorings(z6, ins).size());
    // braid relation
    FramedLink lhs = parse_link("1 2 1", 3, {0, 0});
    FramedLink rhs = parse_link("2 1 2", 3, {0, 0});
    CHECK(enumerate_colorings(z6, lhs).size() == enumerate_colorings(z6, rhs).size());
}

TEST_CASE("enumeration is independent of the worker count") {
    FiniteGroup d3 = make_group("D3");
    FramedLink link = parse_link("1 1 1 1", 2, {1, -1});
    auto a = enumerate_colorings(d3, link, 1);
    auto b = enumerate_colorings(d3, link, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].top == b[i].top);
}

TEST_CASE("state budget guard") {
    FiniteGroup d3 = make_group("D3");
    FramedLink wide = parse_link("", 8, {0, 0, 0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(enumerate_colorings(d3, wide), std::runtime_error);
}

TEST_CASE("wirtinger images and conjugation relation") {
    FiniteGroup d3 = make_group("D3");
    FramedLink t24 = parse_link("1 1 1 1", 2, {0, 0});
    auto cols = enumerate_colorings(d3, t24);
    REQUIRE(!cols.empty());
    for (const auto& c : cols) {
        WirtingerCheck w = wirtinger_images(d3, c);
        CHECK(w.ok);
        REQUIRE(w.meridians.size() == 4);
        bool mono_all = classify(t24, c)[0] && classify(t24, c)[1];
        if (mono_all)
            for (int m : w.meridians) CHECK(m == d3.identity);
    }
}
