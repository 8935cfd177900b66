#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pidom {

/// Immutable finite simple undirected graph. Vertices are 0..n-1.
/// Gadget builders may attach human-readable vertex names; names are
/// annotations only and never affect structure or comparisons.
class Graph {
public:
    /// Edgeless graph on n vertices (n >= 0).
    explicit Graph(int n = 0);

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
    int edge_count() const noexcept { return edge_count_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Sorted neighbor list.
    const std::vector<int>& neighbors(int v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool has_names() const noexcept { return !names_.empty(); }
    /// Name of vertex v; empty string when unnamed.
    const std::string& name(int v) const;

    /// Structural equality: vertex count and edge set (names ignored).
    bool operator==(const Graph& other) const;

private:
    friend class GraphBuilder;

    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_; // empty, or one entry per vertex
    int edge_count_ = 0;

    void check_vertex(int v) const;
};

/// Mutable construction buffer; `build()` validates and freezes into a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    /// Start from an existing graph (copies edges and names).
    explicit GraphBuilder(const Graph& g);

    int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }

    /// Appends a vertex, returns its identifier.
    int add_vertex(std::string name = "");

    /// Adds an undirected edge. Self-loops, duplicates and out-of-range
    /// endpoints throw std::invalid_argument.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    void set_name(int v, std::string name);

    Graph build();

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> names_;
    int edge_count_ = 0;
};

/// Cartesian product: vertex (u, v) -> u * |V(h)| + v; (u1,v1) ~ (u2,v2) iff
/// equal in one coordinate and adjacent in the other. Both factors nonempty.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Join: disjoint union plus every cross edge. Both graphs nonempty.
Graph join(const Graph& g, const Graph& h);

/// Disjoint union; h's vertices are shifted by |V(g)|.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced by `vertices` (nonempty, all in range, no duplicates),
/// renumbered 0..k-1 preserving relative order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Parses the edge-list text format:
///   optional '#' comment lines, first non-comment line "n",
///   then one edge "u v" per line (0-based).
/// Throws ParseError naming the offending line.
Graph parse_edge_list(const std::string& text);

/// Serializes to the edge-list format: name comments (if any vertex is
/// named), the vertex count, then edges sorted lexicographically, one per
/// line, '\n' terminated, no trailing spaces.
std::string serialize_edge_list(const Graph& g);

} // namespace pidom
