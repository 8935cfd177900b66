#include "pidom/graph.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "pidom/errors.hpp"

namespace pidom {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) result.emplace_back(u, v);
    return result; // adjacency lists are sorted, so this is lexicographic
}

const std::string& Graph::name(int v) const {
    check_vertex(v);
    static const std::string empty;
    if (names_.empty()) return empty;
    return names_[static_cast<std::size_t>(v)];
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_;
}

GraphBuilder::GraphBuilder(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<std::size_t>(n));
}

GraphBuilder::GraphBuilder(const Graph& g)
    : adj_(g.adj_), names_(g.names_), edge_count_(g.edge_count_) {
    names_.resize(adj_.size());
}

int GraphBuilder::add_vertex(std::string name) {
    adj_.emplace_back();
    if (!name.empty() || !names_.empty()) {
        names_.resize(adj_.size());
        names_.back() = std::move(name);
    }
    return static_cast<int>(adj_.size()) - 1;
}

bool GraphBuilder::has_edge(int u, int v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
    const auto& nu = adj_[static_cast<std::size_t>(u)];
    return std::find(nu.begin(), nu.end(), v) != nu.end();
}

void GraphBuilder::add_edge(int u, int v) {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
    ++edge_count_;
}

void GraphBuilder::set_name(int v, std::string name) {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    names_.resize(adj_.size());
    names_[static_cast<std::size_t>(v)] = std::move(name);
}

Graph GraphBuilder::build() {
    Graph g(vertex_count());
    g.adj_ = adj_;
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    bool any_name = std::any_of(names_.begin(), names_.end(),
                                [](const std::string& s) { return !s.empty(); });
    if (any_name) {
        g.names_ = names_;
        g.names_.resize(adj_.size());
    }
    g.edge_count_ = edge_count_;
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("cartesian product requires nonempty factors");
    const int nh = h.vertex_count();
    GraphBuilder b(g.vertex_count() * nh);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (auto [v1, v2] : h.edges()) b.add_edge(u * nh + v1, u * nh + v2);
    for (auto [u1, u2] : g.edges())
        for (int v = 0; v < nh; ++v) b.add_edge(u1 * nh + v, u2 * nh + v);
    return b.build();
}

Graph join(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("join requires nonempty operands");
    const int ng = g.vertex_count();
    GraphBuilder b(ng + h.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < h.vertex_count(); ++v) b.add_edge(u, ng + v);
    return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    GraphBuilder b(ng + h.vertex_count());
    for (auto [u, v] : g.edges()) b.add_edge(u, v);
    for (auto [u, v] : h.edges()) b.add_edge(ng + u, ng + v);
    return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    if (vertices.empty())
        throw std::invalid_argument("induced subgraph of an empty vertex set");
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
        if (index[static_cast<std::size_t>(v)] != -1)
            throw std::invalid_argument("duplicate vertex " + std::to_string(v));
        index[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    GraphBuilder b(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) b.add_edge(static_cast<int>(i), j);
        }
    return b.build();
}

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true; // blank
}

int parse_int_token(std::istringstream& in, const char* what, int line_no) {
    long long value = 0;
    if (!(in >> value))
        throw ParseError(std::string("expected ") + what, line_no);
    return static_cast<int>(value);
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::unique_ptr<GraphBuilder> builder;
    while (std::getline(input, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        std::istringstream fields(line);
        if (n < 0) {
            n = parse_int_token(fields, "vertex count", line_no);
            if (n < 0) throw ParseError("vertex count must be nonnegative", line_no);
            std::string rest;
            if (fields >> rest) throw ParseError("trailing data after vertex count", line_no);
            builder = std::make_unique<GraphBuilder>(n);
            continue;
        }
        int u = parse_int_token(fields, "edge endpoint", line_no);
        int v = parse_int_token(fields, "edge endpoint", line_no);
        std::string rest;
        if (fields >> rest) throw ParseError("trailing data after edge", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge endpoint out of range", line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        if (builder->has_edge(u, v)) throw ParseError("duplicate edge", line_no);
        builder->add_edge(u, v);
    }
    if (n < 0) throw ParseError("missing vertex count");
    return builder->build();
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    if (g.has_names()) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.name(v).empty()) out << "# name " << v << ' ' << g.name(v) << '\n';
    }
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace pidom
