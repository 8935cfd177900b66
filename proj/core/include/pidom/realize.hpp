#pragma once

#include <vector>

#include "pidom/graph.hpp"

namespace pidom {

/// A graph together with a vertex set inducing the companion subgraph.
struct InducedRealization {
    Graph graph;
    std::vector<int> h_vertices;
};

/// For targets a, b >= 3, builds a graph G with perfect Italian domination
/// number a containing an induced subgraph (on `h_vertices`) with perfect
/// Italian domination number b.
///
/// b <= a: G is the path on 2a-1 vertices and the subgraph its first 2b-1
/// vertices. b > a: G is the path v_1..v_{2b-1} plus two vertices u and v
/// adjacent to v_{2a-3}..v_{2b-1}, with v_{2a-4} adjacent to v alone; the
/// subgraph is the path.
InducedRealization realize_induced(int a, int b);

enum class ConstructionKind {
    InducedPair,
    OddChainGadget,   // u joined to p isolated vertices and a path, pendant
                      // tail, k chained 3-vertex blocks: Roman 3+2k
    EvenChainGadget,  // same base with a triangle-pair tail: Roman 4+2k
    EqualOddGadget,   // odd path plus a hub vertex: Roman = PID = a
    PairGadget,       // b independent vertices plus one degree-2 vertex per
                      // pair, minus `deleted` of them
};

/// Resolved plan for a realization gadget. `base_b` is the PID value of the
/// chainless base for the chain gadgets; each chained block adds 2 to both
/// parameters.
struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::EqualOddGadget;
    int a = 0;
    int b = 0;
    int p = 0;       // isolated-side size of the chain gadgets
    int k = 0;       // number of chained 3-vertex blocks
    int base_b = 0;  // chain gadgets only
    int deleted = 0; // pair gadget only

    /// Throws UnsupportedError when the parameters fall outside the ranges
    /// the constructions cover.
    void validate() const;
};

/// Chooses the construction for Roman domination number a and perfect
/// Italian domination number b (a, b >= 3, a <= 2b-1). Throws
/// UnsupportedError for pairs no construction covers (a = b even).
ConstructionSpec plan_roman_vs_pid(int a, int b, int p = 3);

/// Builds the planned gadget (InducedPair plans build the host graph).
Graph build_construction(const ConstructionSpec& spec);

/// plan + build in one step.
Graph realize_roman_vs_pid(int a, int b, int p = 3);

// Direct builders behind plan/build, usable on their own.
Graph roman_pid_odd_gadget(int base_b, int p, int k);   // base_b >= 4
Graph roman_pid_even_gadget(int base_b, int p, int k);  // base_b >= 5
Graph roman_pid_equal_odd_gadget(int a);                // a odd, >= 3
Graph roman_pid_pair_gadget(int b, int deleted);        // b >= 3, 0..b-2

/// True iff some vertex is adjacent to all others, or some vertex pair
/// (adjacent or not) is adjacent to every other vertex. For graphs with at
/// least two vertices this holds exactly when the perfect Italian
/// domination number is 2.
bool has_universal_vertex_or_pair(const Graph& g);

} // namespace pidom
