#include "pidom/realize.hpp"

#include <stdexcept>
#include <string>

#include "pidom/errors.hpp"
#include "pidom/family_spec.hpp"

namespace pidom {

namespace {

std::string sub(const char* base, int index) {
    return std::string(base) + "_" + std::to_string(index);
}

// Path v_1..v_length appended to the builder; returns the first identifier.
int add_named_path(GraphBuilder& b, int length) {
    int first = -1;
    for (int i = 1; i <= length; ++i) {
        int v = b.add_vertex(sub("v", i));
        if (i == 1) first = v;
        else b.add_edge(v - 1, v);
    }
    return first;
}

// k chained 3-vertex blocks c1-c2-c3, the first hung from `anchor` by one
// edge, each later block hung from the previous block's last vertex.
void add_chain_blocks(GraphBuilder& b, int anchor, int k) {
    int attach = anchor;
    for (int t = 0; t < k; ++t) {
        int c1 = b.add_vertex(sub("c", 3 * t + 1));
        int c2 = b.add_vertex(sub("c", 3 * t + 2));
        int c3 = b.add_vertex(sub("c", 3 * t + 3));
        b.add_edge(c1, c2);
        b.add_edge(c2, c3);
        b.add_edge(attach, c1);
        attach = c3;
    }
}

// Common base of the chain gadgets: p isolated vertices w_1..w_p and a path
// x_1..x_m, with u adjacent to every one of them. Returns (u, last path
// vertex).
std::pair<int, int> add_chain_base(GraphBuilder& b, int p, int m) {
    std::vector<int> base;
    for (int i = 1; i <= p; ++i) base.push_back(b.add_vertex(sub("w", i)));
    int first_path = -1;
    for (int i = 1; i <= m; ++i) {
        int x = b.add_vertex(sub("x", i));
        if (i == 1) first_path = x;
        else b.add_edge(x - 1, x);
        base.push_back(x);
    }
    int u = b.add_vertex("u");
    for (int w : base) b.add_edge(u, w);
    return {u, first_path + m - 1};
}

} // namespace

InducedRealization realize_induced(int a, int b) {
    if (a < 3 || b < 3)
        throw std::invalid_argument("realize_induced needs a, b >= 3");
    InducedRealization result;
    if (b <= a) {
        GraphBuilder builder(0);
        add_named_path(builder, 2 * a - 1);
        result.graph = builder.build();
        result.h_vertices.resize(static_cast<std::size_t>(2 * b - 1));
        for (int i = 0; i < 2 * b - 1; ++i) result.h_vertices[static_cast<std::size_t>(i)] = i;
        return result;
    }
    // Path v_1..v_{2b-1}; u and v adjacent to v_{2a-3}..v_{2b-1}; v_{2a-4}
    // adjacent to v alone.
    GraphBuilder builder(0);
    add_named_path(builder, 2 * b - 1);
    int u = builder.add_vertex("u");
    int v = builder.add_vertex("v");
    for (int i = 2 * a - 3; i <= 2 * b - 1; ++i) {
        builder.add_edge(u, i - 1); // v_i has identifier i-1
        builder.add_edge(v, i - 1);
    }
    builder.add_edge(v, 2 * a - 4 - 1);
    result.graph = builder.build();
    result.h_vertices.resize(static_cast<std::size_t>(2 * b - 1));
    for (int i = 0; i < 2 * b - 1; ++i) result.h_vertices[static_cast<std::size_t>(i)] = i;
    return result;
}

Graph roman_pid_odd_gadget(int base_b, int p, int k) {
    if (base_b < 4) throw UnsupportedError("odd chain gadget needs base >= 4");
    if (p < 1 || k < 0) throw std::invalid_argument("need p >= 1 and k >= 0");
    GraphBuilder b(0);
    auto [u, path_end] = add_chain_base(b, p, base_b - 3);
    int v = b.add_vertex("v");
    b.add_edge(v, path_end);
    add_chain_blocks(b, u, k);
    return b.build();
}

Graph roman_pid_even_gadget(int base_b, int p, int k) {
    if (base_b < 5) throw UnsupportedError("even chain gadget needs base >= 5");
    if (p < 1 || k < 0) throw std::invalid_argument("need p >= 1 and k >= 0");
    GraphBuilder b(0);
    auto [u, path_end] = add_chain_base(b, p, base_b - 3);
    int s = b.add_vertex("s");
    int t = b.add_vertex("t");
    b.add_edge(s, t);
    b.add_edge(s, path_end);
    b.add_edge(t, path_end);
    add_chain_blocks(b, u, k);
    return b.build();
}

Graph roman_pid_equal_odd_gadget(int a) {
    if (a < 3 || a % 2 == 0)
        throw UnsupportedError("equal-values gadget exists only for odd a >= 3");
    GraphBuilder b(0);
    add_named_path(b, 2 * a - 1);
    int u = b.add_vertex("u");
    b.add_edge(u, 0);          // v_1
    b.add_edge(u, 2 * a - 2);  // v_{2a-1}
    for (int i = 2; i <= 2 * a - 2; i += 2) b.add_edge(u, i - 1); // v_2, v_4, ...
    return b.build();
}

Graph roman_pid_pair_gadget(int b, int deleted) {
    if (b < 3) throw UnsupportedError("pair gadget needs b >= 3");
    if (deleted < 0 || deleted > b - 2)
        throw UnsupportedError("pair gadget supports 0.." + std::to_string(b - 2) +
                               " deletions for b = " + std::to_string(b));
    GraphBuilder builder(0);
    for (int i = 1; i <= b; ++i) builder.add_vertex(sub("v", i));
    int skip = deleted; // pair vertices removed in lexicographic (i, j) order
    for (int i = 1; i <= b; ++i)
        for (int j = i + 1; j <= b; ++j) {
            if (skip > 0) {
                --skip;
                continue;
            }
            int uij = builder.add_vertex("u_" + std::to_string(i) + std::to_string(j));
            builder.add_edge(uij, i - 1);
            builder.add_edge(uij, j - 1);
        }
    return builder.build();
}

void ConstructionSpec::validate() const {
    switch (kind) {
    case ConstructionKind::InducedPair:
        if (a < 3 || b < 3) throw UnsupportedError("induced pair needs a, b >= 3");
        return;
    case ConstructionKind::OddChainGadget:
        if (a < 3 || a % 2 == 0 || b < a + 1)
            throw UnsupportedError("odd chain gadget needs odd a >= 3 and b > a");
        if (a != 3 + 2 * k || base_b != b - 2 * k || base_b < 4 || p < 1)
            throw UnsupportedError("inconsistent odd chain gadget parameters");
        return;
    case ConstructionKind::EvenChainGadget:
        if (a < 4 || a % 2 == 1 || b < a + 1)
            throw UnsupportedError("even chain gadget needs even a >= 4 and b > a");
        if (a != 4 + 2 * k || base_b != b - 2 * k || base_b < 5 || p < 1)
            throw UnsupportedError("inconsistent even chain gadget parameters");
        return;
    case ConstructionKind::EqualOddGadget:
        if (a < 3 || a % 2 == 0 || a != b)
            throw UnsupportedError("equal-values gadget needs odd a = b >= 3");
        return;
    case ConstructionKind::PairGadget:
        if (b < 3 || a <= b || a > 2 * b - 1)
            throw UnsupportedError("pair gadget needs b < a <= 2b-1");
        if (deleted != 2 * b - 1 - a)
            throw UnsupportedError("inconsistent pair gadget deletion count");
        return;
    }
    throw UnsupportedError("unknown construction kind");
}

ConstructionSpec plan_roman_vs_pid(int a, int b, int p) {
    if (a < 3 || b < 3)
        throw UnsupportedError("both target values must be at least 3");
    if (a > 2 * b - 1)
        throw UnsupportedError("no graph exists with Roman value " + std::to_string(a) +
                               " above twice the perfect Italian value minus one");
    ConstructionSpec spec;
    spec.a = a;
    spec.b = b;
    if (a < b) {
        spec.p = p;
        if (a % 2 == 1) {
            spec.kind = ConstructionKind::OddChainGadget;
            spec.k = (a - 3) / 2;
        } else {
            spec.kind = ConstructionKind::EvenChainGadget;
            spec.k = (a - 4) / 2;
        }
        spec.base_b = b - 2 * spec.k;
    } else if (a == b) {
        if (a % 2 == 0)
            throw UnsupportedError("no known construction for equal even values a = b = " +
                                   std::to_string(a));
        spec.kind = ConstructionKind::EqualOddGadget;
    } else {
        spec.kind = ConstructionKind::PairGadget;
        spec.deleted = 2 * b - 1 - a;
    }
    spec.validate();
    return spec;
}

Graph build_construction(const ConstructionSpec& spec) {
    spec.validate();
    switch (spec.kind) {
    case ConstructionKind::InducedPair: return realize_induced(spec.a, spec.b).graph;
    case ConstructionKind::OddChainGadget:
        return roman_pid_odd_gadget(spec.base_b, spec.p, spec.k);
    case ConstructionKind::EvenChainGadget:
        return roman_pid_even_gadget(spec.base_b, spec.p, spec.k);
    case ConstructionKind::EqualOddGadget: return roman_pid_equal_odd_gadget(spec.a);
    case ConstructionKind::PairGadget: return roman_pid_pair_gadget(spec.b, spec.deleted);
    }
    throw UnsupportedError("unknown construction kind");
}

Graph realize_roman_vs_pid(int a, int b, int p) {
    return build_construction(plan_roman_vs_pid(a, b, p));
}

bool has_universal_vertex_or_pair(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            bool dominating = true;
            for (int x = 0; x < n && dominating; ++x) {
                if (x == v || x == w) continue;
                dominating = g.has_edge(x, v) && g.has_edge(x, w);
            }
            if (dominating) return true;
        }
    return false;
}

} // namespace pidom
