#include <catch2/catch_amalgamated.hpp>

#include <heapknot/coloring.hpp>
#include <heapknot/presentation.hpp>

#include <random>

using namespace heapknot;

namespace {

// Number of group homomorphisms out of the presented group, by brute force
// over generator images. Independent of the symbolic machinery apart from
// free-word evaluation.
long hom_count(const Presentation& p, const FiniteGroup& G) {
    const long n = static_cast<long>(p.gens.size());
    long long total = 1;
    for (long i = 0; i < n; ++i) total *= G.order;
    std::vector<int> img(n);
    long count = 0;
    for (long long idx = 0; idx < total; ++idx) {
        long long rest = idx;
        for (long i = 0; i < n; ++i) {
            img[i] = static_cast<int>(rest % G.order);
            rest /= G.order;
        }
        bool ok = true;
        for (const auto& r : p.relators) {
            int v = G.identity;
            for (const auto& [s, e] : r.runs) {
                int g = e > 0 ? img[s] : G.inv[img[s]];
                for (long j = 0; j < std::labs(e); ++j) v = G.op(v, g);
            }
            if (v != G.identity) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    }
    return count;
}

int eval_word(const FreeWord& w, const FiniteGroup& G, const std::vector<int>& img) {
    int v = G.identity;
    for (const auto& [s, e] : w.runs) {
        int g = e > 0 ? img[s] : G.inv[img[s]];
        for (long j = 0; j < std::labs(e); ++j) v = G.op(v, g);
    }
    return v;
}

}  // namespace

TEST_CASE("free word arithmetic") {
    FreeWord a = FreeWord::gen(0), b = FreeWord::gen(1);
    FreeWord w = a * b * b.inverse() * a.inverse();
    CHECK(w.empty());
    CHECK((a * b).pow(2).length() == 4);
    CHECK((a * b).pow(-1) == b.inverse() * a.inverse());
    CHECK(same_relator(a * b * a.inverse(), b));
    CHECK(same_relator(a * b, (b * a).inverse().inverse() * FreeWord()));
    CHECK(!same_relator(a * b, a * b.inverse()));
    FreeWord conj = a.pow(2) * b * a.pow(-2);
    CHECK(conj.cyclically_reduced() == b);
}

TEST_CASE("symbolic propagation matches the closed forms for sigma_1^n") {
    // top pairs (x, y) x (u, v) with symbols 0..3
    FreeWord x = FreeWord::gen(0), y = FreeWord::gen(1);
    FreeWord u = FreeWord::gen(2), v = FreeWord::gen(3);
    FreeWord alpha = x.inverse() * y, beta = u.inverse() * v;
    for (int n = 1; n <= 8; ++n) {
        FramedLink link = parse_link([n] {
            std::string w;
            for (int i = 0; i < n; ++i) w += "1 ";
            return w;
        }(), 2, n % 2 ? std::vector<long>{0} : std::vector<long>{0, 0});
        SymbolicState top;
        top.pairs = {{x, y}, {u, v}};
        SymbolicState bot = symbolic_propagate(link, top);
        int k = n / 2;
        if (n % 2 == 0) {
            FreeWord tail_l = alpha.pow(-k) * (alpha * beta).pow(k);
            FreeWord tail_r = beta.pow(-k) * (alpha * beta).pow(k);
            CHECK(bot.pairs[0].first == x * tail_l);
            CHECK(bot.pairs[0].second == y * tail_l);
            CHECK(bot.pairs[1].first == u * tail_r);
            CHECK(bot.pairs[1].second == v * tail_r);
        } else {
            FreeWord tail_l = beta.pow(-k) * (alpha * beta).pow(k);
            FreeWord tail_r = alpha.pow(-(k + 1)) * (alpha * beta).pow(k + 1);
            CHECK(bot.pairs[0].first == u * tail_l);
            CHECK(bot.pairs[0].second == v * tail_l);
            CHECK(bot.pairs[1].first == x * tail_r);
            CHECK(bot.pairs[1].second == y * tail_r);
        }
    }
    // negative parity: sigma_1^-2 undoes sigma_1^2
    FramedLink two = parse_link("1 1 -1 -1", 2, {0, 0});
    SymbolicState top;
    top.pairs = {{x, y}, {u, v}};
    SymbolicState bot = symbolic_propagate(two, top);
    CHECK(bot.pairs[0].first == x);
    CHECK(bot.pairs[1].second == v);
}

TEST_CASE("kinks produce the telephone cord words") {
    FreeWord x = FreeWord::gen(0), y = FreeWord::gen(1);
    for (long n = 1; n <= 5; ++n) {
        FramedLink link = parse_link("", 1, {n});
        SymbolicState top;
        top.pairs = {{x, y}};
        SymbolicState bot = symbolic_propagate(link, top);
        FreeWord tail = (x.inverse() * y).pow(n);
        CHECK(bot.pairs[0].first == x * tail);
        CHECK(bot.pairs[0].second == y * tail);
    }
}

TEST_CASE("symbolic propagation specializes to coloring propagation") {
    FiniteGroup d3 = make_group("D3");
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> el(0, 5);
    for (const char* word : {"1 1 1", "1 -2 1 2", "-1 -1 2"}) {
        int strands = std::string(word).find('2') == std::string::npos ? 2 : 3;
        std::vector<int> perm = parse_braid_word(word, strands).permutation();
        std::vector<char> seen(strands, 0);
        int comps = 0;
        for (int s = 0; s < strands; ++s)
            if (!seen[s]) {
                ++comps;
                for (int t = s; !seen[t]; t = perm[t]) seen[t] = 1;
            }
        std::vector<long> fr(comps, 1);
        FramedLink link = parse_link(word, strands, fr);
        SymbolicState bot = symbolic_propagate(link, top_generators(strands));
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> img(2 * strands);
            for (auto& e : img) e = el(rng);
            LabelState top(strands);
            for (int i = 0; i < strands; ++i) top[i] = {img[2 * i], img[2 * i + 1]};
            LabelState direct = propagate(d3, link, top);
            for (int i = 0; i < strands; ++i) {
                CHECK(direct[i].p == eval_word(bot.pairs[i].first, d3, img));
                CHECK(direct[i].q == eval_word(bot.pairs[i].second, d3, img));
            }
        }
    }
}

TEST_CASE("presentation shape") {
    FramedLink t23 = parse_link("1 1 1", 2, {0});
    Presentation p = presentation(t23);
    CHECK(p.gens.size() == 4);
    CHECK(p.relators.size() <= 4);  // two per strand position

    Presentation a = alpha_form(p);
    // free rank equals the component count: one x-generator kept
    int xcount = 0;
    for (const auto& g : a.gens)
        if (g[0] == 'x') ++xcount;
    CHECK(xcount == 1);
    for (const auto& r : a.relators) CHECK(!r.contains(a.gen_index("x1")));
}

TEST_CASE("alpha form of torus closures") {
    // even: exactly the two framed-torus relators
    Presentation p4 = alpha_form(presentation(parse_link("1 1 1 1", 2, {0, 0})));
    REQUIRE(p4.relators.size() == 2);
    FreeWord a = FreeWord::gen(p4.gen_index("a1")), b = FreeWord::gen(p4.gen_index("a2"));
    FreeWord r1 = a.pow(-2) * (a * b).pow(2), r2 = b.pow(-2) * (a * b).pow(2);
    CHECK((same_relator(p4.relators[0], r1) || same_relator(p4.relators[1], r1)));
    CHECK((same_relator(p4.relators[0], r2) || same_relator(p4.relators[1], r2)));

    // odd: the closed-form relator appears among the emitted set
    Presentation p5 = alpha_form(presentation(parse_link("1 1 1 1 1", 2, {0})));
    FreeWord a5 = FreeWord::gen(p5.gen_index("a1")), b5 = FreeWord::gen(p5.gen_index("a2"));
    FreeWord w = a5.pow(-3) * (a5 * b5).pow(3) * b5.pow(-2) * (a5 * b5).pow(2);
    bool found = false;
    for (const auto& r : p5.relators) found = found || same_relator(r, w);
    CHECK(found);
}

TEST_CASE("cord closures give free products with one torsion relator") {
    for (long n = 1; n <= 5; ++n) {
        Presentation p = alpha_form(presentation(parse_link("", 1, {n})));
        REQUIRE(p.relators.size() == 1);
        CHECK(same_relator(p.relators[0], FreeWord::gen(p.gen_index("a1"), n)));
    }
}

TEST_CASE("pretzel presentation agrees with a braid closure of the same link") {
    // P(2,2,2) is the 3-component necklace, also the closure of
    // s1^2 s2^2 (s2 s1^2 s2^-1); homomorphism counts into small groups must agree
    Presentation pret = pretzel_presentation({2, 2, 2});
    FramedLink neck = parse_link("1 1 2 2 2 1 1 -2", 3, {0, 0, 0});
    for (const char* spec : {"Z2", "Z3", "Z4"}) {
        FiniteGroup g = make_group(spec);
        CHECK(hom_count(pret, g) ==
              static_cast<long>(enumerate_colorings(g, neck).size()));
    }
}

TEST_CASE("pretzel alpha relators for P(2,2,2)") {
    Presentation p = alpha_form(pretzel_presentation({2, 2, 2}));
    REQUIRE(p.relators.size() == 3);
    int xcount = 0;
    for (const auto& g : p.gens)
        if (g[0] == 'x') ++xcount;
    CHECK(xcount == 3);
    auto A = [&](int i) { return FreeWord::gen(p.gen_index("a" + std::to_string(i + 1))); };
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, l = (i + 2) % 3;
        FreeWord theta = A(j).pow(2) * (A(i) * A(j).inverse()) * (A(j) * A(l).inverse()).inverse();
        CHECK(std::any_of(p.relators.begin(), p.relators.end(),
                          [&](const FreeWord& r) { return same_relator(r, theta); }));
    }
}

TEST_CASE("tietze simplification") {
    Presentation p;
    p.gens = {"alpha", "gamma"};
    p.add_relator(FreeWord::gen(1, 2) * FreeWord::gen(0));
    Presentation q = tietze_simplify(p);
    CHECK(q.gens == std::vector<std::string>{"gamma"});
    CHECK(q.relators.empty());

    Presentation free2;
    free2.gens = {"x", "y"};
    Presentation f = tietze_simplify(free2);
    CHECK(f.gens.size() == 2);
    CHECK(f.relators.empty());

    Presentation ident;
    ident.gens = {"a", "b"};
    ident.add_relator(FreeWord::gen(0) * FreeWord::gen(1, -1));
    Presentation i = tietze_simplify(ident);
    CHECK(i.gens.size() == 1);
    CHECK(i.relators.empty());

    // T(2,2) collapses to the free group on the two strand generators
    Presentation hopf = tietze_simplify(alpha_form(presentation(parse_link("1 1", 2, {0, 0}))));
    CHECK(hopf.gens.size() == 2);
    CHECK(hopf.relators.empty());
}

TEST_CASE("tietze passes preserve the abelianization") {
    std::vector<Presentation> inputs;
    inputs.push_back(alpha_form(presentation(parse_link("1 1 1", 2, {2}))));
    inputs.push_back(alpha_form(presentation(parse_link("1 1 1 1 1 1", 2, {1, -2}))));
    inputs.push_back(alpha_form(pretzel_presentation({2, 4})));
    for (const auto& p : inputs) {
        auto before = abelianization(p);
        auto after = abelianization(tietze_simplify(p));
        CHECK(before == after);
    }
}

TEST_CASE("abelianization golden values") {
    Presentation de2;
    de2.gens = {"a", "b"};
    FreeWord a = FreeWord::gen(0), b = FreeWord::gen(1);
    de2.add_relator(a.pow(-2) * (a * b).pow(2));
    de2.add_relator(b.pow(-2) * (a * b).pow(2));
    CHECK(abelianization(de2) == AbelianInvariants{0, {2, 2}});

    Presentation zn;
    zn.gens = {"a"};
    zn.add_relator(FreeWord::gen(0, 5));
    CHECK(abelianization(zn) == AbelianInvariants{0, {5}});

    Presentation f2;
    f2.gens = {"x", "y"};
    CHECK(abelianization(f2) == AbelianInvariants{2, {}});
}

TEST_CASE("abelianization of the torus alpha presentations") {
    // the non-free part of h(T(2,2k)) abelianizes to Z_k + Z_k
    for (int k = 1; k <= 4; ++k) {
        std::string w;
        for (int i = 0; i < 2 * k; ++i) w += "1 ";
        Presentation p = alpha_form(presentation(parse_link(w, 2, {0, 0})));
        Presentation core;
        std::vector<int> remap(p.gens.size(), -1);
        for (size_t g = 0; g < p.gens.size(); ++g) {
            bool used = false;
            for (const auto& r : p.relators) used = used || r.contains(static_cast<int>(g));
            if (used) {
                remap[g] = static_cast<int>(core.gens.size());
                core.gens.push_back(p.gens[g]);
            }
        }
        for (const auto& r : p.relators) {
            FreeWord wv;
            for (const auto& [s, e] : r.runs) wv.push(remap[s], e);
            core.add_relator(wv);
        }
        AbelianInvariants expect;
        if (k > 1) expect.torsion = {k, k};
        CHECK(abelianization(core) == expect);
    }
}

TEST_CASE("homomorphism checks") {
    // finite target
    Presentation p = alpha_form(presentation(parse_link("1 1 1 1", 2, {0, 0})));
    FiniteGroup klein = make_group("Z2xZ2");
    TargetGroupSpec t;
    t.finite = &klein;
    t.finite_images.assign(p.gens.size(), klein.identity);
    t.finite_images[p.gen_index("a1")] = klein.name_to_index("(1,0)");
    t.finite_images[p.gen_index("a2")] = klein.name_to_index("(0,1)");
    HomCheck hc = check_homomorphism(p, t);
    CHECK(hc.ok);
    CHECK(hc.surjective);

    // a non-homomorphism is detected
    t.finite_images[p.gen_index("a1")] = klein.identity;
    t.finite_images[p.gen_index("a2")] = klein.identity;
    FiniteGroup z4 = make_group("Z4");
    TargetGroupSpec bad;
    bad.finite = &z4;
    bad.finite_images.assign(p.gens.size(), 0);
    bad.finite_images[p.gen_index("a1")] = 1;
    CHECK(!check_homomorphism(p, bad).ok);

    // power-relator target: the odd torus relator in V(k), k = 3
    Presentation torus;
    torus.gens = {"alpha", "beta"};
    FreeWord a = FreeWord::gen(0), b = FreeWord::gen(1);
    torus.add_relator(a.pow(-4) * (a * b).pow(4) * b.pow(-3) * (a * b).pow(3));
    TargetGroupSpec vin;
    vin.target_gens = 2;
    vin.gen_orders = {3, 2};
    vin.word_laws = {{FreeWord::gen(0) * FreeWord::gen(1), 3}};
    vin.images = {FreeWord::gen(0), FreeWord::gen(1)};
    CHECK(check_homomorphism(torus, vin).ok);

    // missing images
    TargetGroupSpec incomplete;
    incomplete.target_gens = 2;
    incomplete.gen_orders = {0, 0};
    incomplete.images = {FreeWord::gen(0)};
    CHECK_THROWS_AS(check_homomorphism(torus, incomplete), std::invalid_argument);
}

TEST_CASE("hom counts from presentations match coloring counts") {
    // the presentation presents the same group the colorings enumerate
    FiniteGroup d3 = make_group("D3");
    for (const char* word : {"1 1 1", "1 1"}) {
        int comps = std::string(word) == "1 1" ? 2 : 1;
        FramedLink link = parse_link(word, 2, std::vector<long>(comps, 0));
        Presentation p = presentation(link);
        CHECK(hom_count(p, d3) == static_cast<long>(enumerate_colorings(d3, link).size()));
    }
}
