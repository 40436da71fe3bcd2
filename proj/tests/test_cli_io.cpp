#include <catch2/catch_amalgamated.hpp>

#include <heapknot/json_io.hpp>

using namespace heapknot;

TEST_CASE("group json export") {
    FiniteGroup z3 = make_group("Z3");
    ordered_json j = group_json(z3);
    CHECK(j["order"] == 3);
    CHECK(j["names"][2] == "2");
    CHECK(j["mul_table"][1][2] == 0);
}

TEST_CASE("cohomology json matches the CLI example") {
    // `heapknot cohomology --group Z2 --coeff Z3 --variant full`
    FiniteGroup z2 = make_group("Z2");
    auto r = second_cohomology(z2, Coeff::Zm(3), ComplexVariant::full());
    ordered_json j = cohomology_json(r);
    CHECK(j["rank"] == 0);
    CHECK(j["torsion"] == std::vector<std::string>{"3", "3"});
    CHECK(j["basis"].size() == 2);
}

TEST_CASE("color count matches the CLI example") {
    // `heapknot color --group Z3 --strands 1 --braid "" --framings 3`
    FiniteGroup z3 = make_group("Z3");
    CHECK(enumerate_colorings(z3, parse_link("", 1, {3})).size() == 9);
}

TEST_CASE("fundheap json matches the CLI example") {
    // `heapknot fundheap --strands 2 --braid "1 1 1 1" --framings 0 0`
    Presentation p = alpha_form(presentation(parse_link("1 1 1 1", 2, {0, 0})));
    ordered_json j = presentation_json(p);
    REQUIRE(j["relators"].size() == 2);
    // relators as symbol/exponent runs
    CHECK(j["relators"][0][0].size() == 2);
}

TEST_CASE("invariant json is byte stable across worker counts") {
    FiniteGroup d3 = make_group("D3");
    FramedLink link = parse_link("1 1 1 1", 2, {1, 0});
    Cochain2 psi = psi_dihedral(3, 1).cochain;
    std::string a = invariant_json(invariant(d3, link, psi, 1)).dump();
    std::string b = invariant_json(invariant(d3, link, psi, 3)).dump();
    CHECK(a == b);
}

TEST_CASE("cohomology json is stable across repeated runs") {
    FiniteGroup d3 = make_group("D3");
    Subgroup g = generated_subgroup(d3, {d3.name_to_index("ar0")});
    auto run = [&] {
        return cohomology_json(
                   second_cohomology(d3, Coeff::Z(), ComplexVariant::relative_to(g)))
            .dump();
    };
    CHECK(run() == run());
}

TEST_CASE("crossing site json") {
    FramedLink link = parse_link("1", 2, {-2});
    ordered_json j = crossing_sites_json(link);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["kind"] == "letter");
    CHECK(j[1]["kind"] == "kink");
    CHECK(j[1]["sign"] == -1);
}
