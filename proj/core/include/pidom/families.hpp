#pragma once

#include <string>

#include "pidom/family_spec.hpp"
#include "pidom/graph.hpp"
#include "pidom/labeling.hpp"

namespace pidom {

struct FormulaResult {
    int value = 0;
    /// Which dispatch rule produced the value (e.g. "path", "grid-2xn").
    std::string source;
};

/// Closed-form perfect Italian domination number for the supported specs:
/// paths, cycles, complete graphs, edgeless graphs, stars, complete
/// multipartite graphs, product(path:2, path:n) grids and
/// product(complete:m, complete:n). Throws UnsupportedError ("no closed
/// form") for anything else; use solve() there instead.
FormulaResult pid_formula(const FamilySpec& spec);

/// A labeling that is valid under the PerfectItalian variant with weight
/// equal to pid_formula(spec).value, built from fixed per-family patterns.
Labeling pid_witness(const FamilySpec& spec);

struct ProductBound {
    int bound = 0;
    /// Valid PerfectItalian labeling of g box h whose weight equals `bound`:
    /// the cheaper factor's optimal labeling replicated across every copy.
    Labeling witness;
};

/// Upper bound min{|V(h)| * g_pid, |V(g)| * h_pid} for the Cartesian
/// product, with the replicated witness. `g_pid` / `h_pid` must be the
/// perfect Italian domination numbers of g and h (checked; obtained here
/// internally for the replicated side's labeling).
ProductBound product_upper_bound(const Graph& g, const Graph& h, int g_pid, int h_pid);

/// Italian domination number of the 2 x n grid as cited from the
/// literature: n. Used as a cross-check oracle against solve(.., Italian).
int italian_formula_p2pn(int n);

} // namespace pidom
