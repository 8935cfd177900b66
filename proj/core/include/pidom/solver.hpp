#pragma once

#include <cstdint>
#include <vector>

#include "pidom/graph.hpp"
#include "pidom/labeling.hpp"

namespace pidom {

struct SolveOptions {
    /// Exhaustive search is refused above this vertex count. Raise it
    /// explicitly to solve larger graphs.
    int max_vertices = 24;
};

struct SolveResult {
    /// Exact minimum weight of a valid labeling for the chosen variant.
    int optimum = 0;
    /// The lexicographically smallest optimal labeling (vertex order 0..n-1,
    /// value order 0 < 1 < 2).
    Labeling witness;
    /// Search-tree nodes visited (diagnostics; deterministic per input).
    std::uint64_t nodes_explored = 0;
};

/// Exact minimum over all valid labelings by depth-first branch and bound.
/// Vertices are assigned in identifier order, values in increasing order;
/// a branch is cut once its partial weight cannot beat the incumbent or a
/// 0-labeled vertex can no longer meet the variant's condition.
/// Throws std::invalid_argument on an empty graph and SizeGuardError above
/// options.max_vertices.
SolveResult solve(const Graph& g, DominationVariant variant,
                  const SolveOptions& options = {});

struct EnumerationResult {
    int optimum = 0;
    /// Valid labelings of weight exactly `optimum`, lexicographic order.
    std::vector<Labeling> optima;
    /// True when the list was cut off at `cap`; the enumeration is complete
    /// iff this is false.
    bool truncated = false;
};

/// All optimal labelings, found by a second bounded search at the optimal
/// weight, truncated at `cap`.
EnumerationResult enumerate_optima(const Graph& g, DominationVariant variant,
                                   std::size_t cap,
                                   const SolveOptions& options = {});

} // namespace pidom
