#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "pidom/errors.hpp"
#include "pidom/family_spec.hpp"
#include "pidom/realize.hpp"
#include "pidom/solver.hpp"
#include "test_support.hpp"

using namespace pidom;

namespace {

int pid_of(const Graph& g) { return solve(g, DominationVariant::PerfectItalian).optimum; }
int roman_of(const Graph& g) { return solve(g, DominationVariant::Roman).optimum; }

} // namespace

TEST_CASE("induced realization: path case") {
    InducedRealization r = realize_induced(4, 3);
    CHECK(r.graph == path_graph(7));
    CHECK(r.h_vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(pid_of(r.graph) == 4);
    CHECK(pid_of(induced_subgraph(r.graph, r.h_vertices)) == 3);

    InducedRealization same = realize_induced(3, 3);
    CHECK(same.graph == path_graph(5));
    CHECK(same.h_vertices.size() == 5);
}

TEST_CASE("induced realization: augmented case") {
    InducedRealization r = realize_induced(3, 4);
    CHECK(r.graph.vertex_count() == 9); // 7 path vertices plus u and v
    CHECK(pid_of(r.graph) == 3);
    Graph h = induced_subgraph(r.graph, r.h_vertices);
    CHECK(h == path_graph(7));
    CHECK(pid_of(h) == 4);
}

TEST_CASE("induced realization sweep") {
    for (int a = 3; a <= 5; ++a)
        for (int b = 3; b <= 5; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            InducedRealization r = realize_induced(a, b);
            CHECK(pid_of(r.graph) == a);
            CHECK(pid_of(induced_subgraph(r.graph, r.h_vertices)) == b);
        }
    CHECK_THROWS_AS(realize_induced(2, 4), std::invalid_argument);
}

TEST_CASE("chain gadgets hit their targets across the isolated-side sweep") {
    // (roman, pid) target pairs with every p in {2,3,4}.
    const std::pair<int, int> pairs[] = {{3, 4}, {3, 5}, {5, 6}, {5, 7},
                                         {4, 5}, {4, 6}, {6, 7}};
    for (auto [a, b] : pairs)
        for (int p = 2; p <= 4; ++p) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(p);
            Graph g = realize_roman_vs_pid(a, b, p);
            CHECK(roman_of(g) == a);
            CHECK(pid_of(g) == b);
        }
}

TEST_CASE("small isolated sides stop being sufficient as the gap grows") {
    // With only two isolated vertices the forcing argument breaks for
    // target (3,6): labeling both of them 1 frees the hub, and the solver
    // finds a cheaper labeling. Three are enough again.
    Graph starved = realize_roman_vs_pid(3, 6, 2);
    CHECK(pid_of(starved) == 5);
    Graph fed = realize_roman_vs_pid(3, 6, 3);
    CHECK(roman_of(fed) == 3);
    CHECK(pid_of(fed) == 6);
}

TEST_CASE("longer chains keep adding two to both parameters") {
    for (int p = 3; p <= 4; ++p) {
        Graph g = realize_roman_vs_pid(7, 8, p); // two chained blocks
        CHECK(roman_of(g) == 7);
        CHECK(pid_of(g) == 8);
    }
    // Two isolated vertices are too few once the chain is this long:
    // alternating ones down the chain undercut the intended labeling.
    CHECK(pid_of(realize_roman_vs_pid(7, 8, 2)) == 7);
}

TEST_CASE("equal odd targets via the hub gadget") {
    for (int a : {3, 5, 7}) {
        CAPTURE(a);
        Graph g = roman_pid_equal_odd_gadget(a);
        CHECK(g.vertex_count() == 2 * a);
        CHECK(roman_of(g) == a);
        CHECK(pid_of(g) == a);
    }
    CHECK(realize_roman_vs_pid(5, 5) == roman_pid_equal_odd_gadget(5));
}

TEST_CASE("pair gadget: perfect Italian value stays b") {
    for (int b = 3; b <= 5; ++b)
        for (int deleted = 0; deleted <= b - 2; ++deleted) {
            CAPTURE(b);
            CAPTURE(deleted);
            Graph g = roman_pid_pair_gadget(b, deleted);
            CHECK(g.vertex_count() == b + b * (b - 1) / 2 - deleted);
            CHECK(pid_of(g) == b);
        }
}

TEST_CASE("pair gadget Roman values") {
    // One pair vertex labeled 2 covers two of the independents at once, so
    // the undeleted gadget sits at 2b-2, not 2b-1; the first deletion
    // leaves it unchanged and later ones shave one each.
    CHECK(roman_of(roman_pid_pair_gadget(3, 0)) == 4);
    CHECK(roman_of(roman_pid_pair_gadget(3, 1)) == 4);
    CHECK(roman_of(roman_pid_pair_gadget(4, 0)) == 6);
    CHECK(roman_of(roman_pid_pair_gadget(4, 1)) == 6);
    CHECK(roman_of(roman_pid_pair_gadget(4, 2)) == 5);
}

TEST_CASE("plan dispatch") {
    ConstructionSpec odd = plan_roman_vs_pid(5, 6, 3);
    CHECK(odd.kind == ConstructionKind::OddChainGadget);
    CHECK(odd.k == 1);
    CHECK(odd.base_b == 4);

    ConstructionSpec even = plan_roman_vs_pid(4, 6, 3);
    CHECK(even.kind == ConstructionKind::EvenChainGadget);
    CHECK(even.k == 0);
    CHECK(even.base_b == 6);

    ConstructionSpec equal = plan_roman_vs_pid(7, 7, 3);
    CHECK(equal.kind == ConstructionKind::EqualOddGadget);

    ConstructionSpec pair = plan_roman_vs_pid(6, 4, 3);
    CHECK(pair.kind == ConstructionKind::PairGadget);
    CHECK(pair.deleted == 1);
    Graph g = build_construction(pair);
    CHECK(roman_of(g) == 6);
    CHECK(pid_of(g) == 4);
}

TEST_CASE("unsupported target pairs") {
    CHECK_THROWS_AS(realize_roman_vs_pid(4, 4), UnsupportedError);
    CHECK_THROWS_AS(realize_roman_vs_pid(6, 6), UnsupportedError);
    CHECK_THROWS_AS(realize_roman_vs_pid(8, 4), UnsupportedError); // a > 2b-1
    CHECK_THROWS_AS(realize_roman_vs_pid(2, 3), UnsupportedError);
    CHECK_THROWS_AS(roman_pid_equal_odd_gadget(4), UnsupportedError);
    CHECK_THROWS_AS(roman_pid_pair_gadget(4, 3), UnsupportedError);
    CHECK_THROWS_AS(roman_pid_odd_gadget(3, 3, 0), UnsupportedError);
}

TEST_CASE("gadgets satisfy the Roman-versus-perfect-Italian bound") {
    std::vector<Graph> gadgets;
    for (auto [a, b] : {std::pair{3, 4}, {4, 5}, {5, 5}, {6, 4}, {7, 4}})
        gadgets.push_back(realize_roman_vs_pid(a, b, 3));
    for (const auto& g : gadgets) CHECK(roman_of(g) <= 2 * pid_of(g) - 1);
}

TEST_CASE("gadget vertices carry names in the edge-list output") {
    Graph g = realize_roman_vs_pid(5, 5);
    CHECK(g.has_names());
    std::string text = serialize_edge_list(g);
    CHECK(text.find("# name 0 v_1") != std::string::npos);
    CHECK(text.find("u") != std::string::npos);
    CHECK(parse_edge_list(text) == g); // comments are ignored on the way in
}

TEST_CASE("two-coverable structure recognizer") {
    CHECK(has_universal_vertex_or_pair(star_graph(4)));
    CHECK(has_universal_vertex_or_pair(
        complete_multipartite_graph(std::vector<int>{2, 5})));
    CHECK_FALSE(has_universal_vertex_or_pair(cycle_graph(5)));
    CHECK(pid_of(cycle_graph(5)) == 3);
    // Nonadjacent pair: the two-side of K_{2,2}.
    CHECK(has_universal_vertex_or_pair(cycle_graph(4)));
}

TEST_CASE("recognizer matches value exactly 2 on random graphs") {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> size(2, 8);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testsupport::random_graph(rng, size(rng), 0.45);
        int value = pid_of(g);
        if (value < 2) continue; // single-vertex graphs only
        CAPTURE(serialize_edge_list(g));
        CHECK(has_universal_vertex_or_pair(g) == (value == 2));
    }
}
