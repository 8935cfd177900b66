#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pidom/errors.hpp"
#include "pidom/families.hpp"
#include "pidom/family_spec.hpp"
#include "pidom/solver.hpp"
#include "test_support.hpp"

using namespace pidom;

namespace {

FamilySpec grid(int n) {
    return FamilySpec::product(FamilySpec::path(2), FamilySpec::path(n));
}

FamilySpec complete_product(int m, int n) {
    return FamilySpec::product(FamilySpec::complete(m), FamilySpec::complete(n));
}

void check_witness_against_formula(const FamilySpec& spec) {
    CAPTURE(to_string(spec));
    FormulaResult formula = pid_formula(spec);
    Labeling witness = pid_witness(spec);
    Graph g = generate(spec);
    CHECK(witness.weight() == formula.value);
    CHECK(is_valid(g, witness, DominationVariant::PerfectItalian));
}

} // namespace

TEST_CASE("closed-form values") {
    CHECK(pid_formula(FamilySpec::path(7)).value == 4);
    CHECK(pid_formula(FamilySpec::path(7)).source == "path");
    CHECK(pid_formula(FamilySpec::path(1)).value == 1);
    CHECK(pid_formula(FamilySpec::cycle(5)).value == 3);
    CHECK(pid_formula(FamilySpec::cycle(4)).value == 2);
    CHECK(pid_formula(FamilySpec::complete(1)).value == 1);
    CHECK(pid_formula(FamilySpec::complete(7)).value == 2);
    CHECK(pid_formula(FamilySpec::empty(6)).value == 6);
    CHECK(pid_formula(FamilySpec::star(4)).value == 2);

    CHECK(pid_formula(FamilySpec::complete_multipartite({3, 3})).value == 4);
    CHECK(pid_formula(FamilySpec::complete_multipartite({3, 3, 3, 3})).value == 12);
    CHECK(pid_formula(FamilySpec::complete_multipartite({1, 4, 4})).value == 2);
    CHECK(pid_formula(FamilySpec::complete_multipartite({2, 3, 3, 3})).value == 2);
    CHECK(pid_formula(FamilySpec::complete_multipartite({4, 4, 4})).value == 3);
    CHECK(pid_formula(FamilySpec::complete_multipartite({5})).value == 5);

    CHECK(pid_formula(complete_product(2, 3)).value == 4);
    CHECK(pid_formula(complete_product(3, 3)).value == 3);
    CHECK(pid_formula(complete_product(1, 1)).value == 1);
    CHECK(pid_formula(grid(5)).value == 6);
    CHECK(pid_formula(grid(4)).value == 4);
    CHECK(pid_formula(grid(1)).value == 2);
}

TEST_CASE("no closed form for unsupported shapes") {
    CHECK_THROWS_AS(pid_formula(FamilySpec::product(FamilySpec::path(3), FamilySpec::path(3))),
                    UnsupportedError);
    CHECK_THROWS_AS(pid_witness(FamilySpec::product(FamilySpec::cycle(3), FamilySpec::path(2))),
                    UnsupportedError);
}

TEST_CASE("named witness patterns") {
    CHECK(pid_witness(FamilySpec::path(5)).to_csv() == "1,0,1,0,1");
    CHECK(pid_witness(FamilySpec::path(4)).to_csv() == "1,0,1,1");
    // Ones exactly on the diagonal of the 3x3 rook graph.
    CHECK(pid_witness(complete_product(3, 3)).to_csv() == "1,0,0,0,1,0,0,0,1");
    // First column of 2s when the first factor is smaller.
    CHECK(pid_witness(complete_product(2, 3)).to_csv() == "2,0,0,2,0,0");
    CHECK(pid_witness(complete_product(3, 2)).to_csv() == "2,2,0,0,0,0");
}

TEST_CASE("witnesses are valid with the formula weight across the families") {
    for (int n = 1; n <= 14; ++n) check_witness_against_formula(FamilySpec::path(n));
    for (int n = 3; n <= 14; ++n) check_witness_against_formula(FamilySpec::cycle(n));
    for (int n = 1; n <= 6; ++n) check_witness_against_formula(FamilySpec::complete(n));
    for (int n = 1; n <= 6; ++n) check_witness_against_formula(FamilySpec::empty(n));
    for (int n = 1; n <= 6; ++n) check_witness_against_formula(FamilySpec::star(n));
    for (int n = 1; n <= 13; ++n) check_witness_against_formula(grid(n));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) check_witness_against_formula(complete_product(m, n));

    std::vector<std::vector<int>> part_lists{{1, 1},   {1, 5},    {2, 2},       {2, 5},
                                             {3, 3},   {3, 5},    {1, 1, 1},    {2, 3, 4},
                                             {3, 3, 3}, {1, 3, 3, 3}, {3, 3, 3, 3}};
    for (const auto& parts : part_lists)
        check_witness_against_formula(FamilySpec::complete_multipartite(parts));
}

TEST_CASE("formulas agree with the solver on small instances") {
    std::vector<FamilySpec> specs;
    for (int n = 1; n <= 10; ++n) specs.push_back(FamilySpec::path(n));
    for (int n = 3; n <= 10; ++n) specs.push_back(FamilySpec::cycle(n));
    for (int n = 1; n <= 6; ++n) specs.push_back(FamilySpec::complete(n));
    for (int n = 1; n <= 6; ++n) specs.push_back(FamilySpec::empty(n));
    for (int n = 1; n <= 5; ++n) specs.push_back(FamilySpec::star(n));
    for (int n = 1; n <= 6; ++n) specs.push_back(grid(n));
    for (int m = 1; m <= 3; ++m)
        for (int n = m; n <= 3; ++n) specs.push_back(complete_product(m, n));
    specs.push_back(FamilySpec::complete_multipartite({1, 2, 3}));
    specs.push_back(FamilySpec::complete_multipartite({2, 2}));
    specs.push_back(FamilySpec::complete_multipartite({3, 4}));
    specs.push_back(FamilySpec::complete_multipartite({3, 3, 3}));
    for (const auto& spec : specs) {
        CAPTURE(to_string(spec));
        CHECK(pid_formula(spec).value ==
              solve(generate(spec), DominationVariant::PerfectItalian).optimum);
    }
}

TEST_CASE("product upper bound: strict and tight named examples") {
    Graph p4 = path_graph(4);
    Graph p2 = path_graph(2);
    ProductBound loose = product_upper_bound(p4, p2, 3, 2);
    CHECK(loose.bound == 6);
    Graph p4xp2 = cartesian_product(p4, p2);
    CHECK(is_valid(p4xp2, loose.witness, DominationVariant::PerfectItalian));
    CHECK(loose.witness.weight() == 6);
    CHECK(solve(p4xp2, DominationVariant::PerfectItalian).optimum == 4); // strictly less

    Graph star3 = star_graph(3);
    Graph p3 = path_graph(3);
    ProductBound tight = product_upper_bound(star3, p3, 2, 2);
    CHECK(tight.bound == 6);
    CHECK(solve(cartesian_product(star3, p3), DominationVariant::PerfectItalian).optimum == 6);

    Graph k1 = complete_graph(1);
    CHECK(product_upper_bound(k1, k1, 1, 1).bound == 1);

    CHECK_THROWS_AS(product_upper_bound(p4, p2, 2, 2), std::invalid_argument);
}

TEST_CASE("product upper bound holds on random pairs") {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> size(1, 4);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = testsupport::random_connected_graph(rng, size(rng), 0.3);
        Graph h = testsupport::random_connected_graph(rng, size(rng), 0.3);
        int g_pid = solve(g, DominationVariant::PerfectItalian).optimum;
        int h_pid = solve(h, DominationVariant::PerfectItalian).optimum;
        ProductBound bound = product_upper_bound(g, h, g_pid, h_pid);
        Graph gh = cartesian_product(g, h);
        CHECK(is_valid(gh, bound.witness, DominationVariant::PerfectItalian));
        CHECK(bound.witness.weight() == bound.bound);
        CHECK(solve(gh, DominationVariant::PerfectItalian).optimum <= bound.bound);
    }
}

TEST_CASE("cited Italian grid values") {
    CHECK(italian_formula_p2pn(1) == 1);
    CHECK(italian_formula_p2pn(4) == 4);
    CHECK(italian_formula_p2pn(7) == 7);
    CHECK_THROWS_AS(italian_formula_p2pn(0), std::invalid_argument);
    // The cited closed form overshoots reality at n = 1: the 2x1 grid is a
    // single edge and its Italian domination number is 2.
    CHECK(solve(generate(grid(1)), DominationVariant::Italian).optimum == 2);
    for (int n = 2; n <= 6; ++n)
        CHECK(solve(generate(grid(n)), DominationVariant::Italian).optimum ==
              italian_formula_p2pn(n));
}

TEST_CASE("optimum structure of paths and cycles") {
    // Paths of every other length admit no optimal labeling using a 2; the
    // 3- and 6-paths admit both kinds.
    for (int n = 4; n <= 10; ++n) {
        if (n == 6) continue;
        EnumerationResult result =
            enumerate_optima(path_graph(n), DominationVariant::PerfectItalian, 100000);
        REQUIRE_FALSE(result.truncated);
        for (const auto& f : result.optima) CHECK(f.vertices_with(2).empty());
    }
    for (int n : {3, 6}) {
        EnumerationResult result =
            enumerate_optima(path_graph(n), DominationVariant::PerfectItalian, 100000);
        REQUIRE_FALSE(result.truncated);
        bool some_with_two = false;
        bool some_without_two = false;
        for (const auto& f : result.optima) {
            (f.vertices_with(2).empty() ? some_without_two : some_with_two) = true;
        }
        CHECK(some_with_two);
        CHECK(some_without_two);
    }
    for (int n = 4; n <= 10; ++n) {
        EnumerationResult result =
            enumerate_optima(cycle_graph(n), DominationVariant::PerfectItalian, 100000);
        REQUIRE_FALSE(result.truncated);
        for (const auto& f : result.optima) CHECK(f.vertices_with(2).empty());
    }
}
