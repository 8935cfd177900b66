#include "pidom/solver.hpp"

#include <stdexcept>

#include "pidom/errors.hpp"

namespace pidom {

namespace {

// One depth-first search, reused for both optimization and enumeration.
//
// Vertices are assigned in identifier order, so when vertex v is being
// assigned, exactly its neighbors with smaller identifiers carry values.
// Per-vertex running state (assigned-neighbor sum, count of two/one labels,
// unassigned-neighbor count) makes each assignment O(deg).
class Search {
public:
    Search(const Graph& g, DominationVariant variant)
        : g_(g),
          variant_(variant),
          n_(g.vertex_count()),
          max_value_(variant == DominationVariant::Domination ? 1 : 2),
          value_(static_cast<std::size_t>(n_), 0),
          nbr_sum_(static_cast<std::size_t>(n_), 0),
          nbr_twos_(static_cast<std::size_t>(n_), 0),
          nbr_ones_(static_cast<std::size_t>(n_), 0),
          unassigned_nbrs_(static_cast<std::size_t>(n_), 0) {
        for (int v = 0; v < n_; ++v)
            unassigned_nbrs_[static_cast<std::size_t>(v)] = g.degree(v);
    }

    // Minimum weight and lexicographically least optimal witness.
    // `bound` is an exclusive upper bound known to be beatable (n+1 works:
    // the all-ones labeling is valid for every variant).
    void minimize(int bound) {
        best_weight_ = bound;
        enumerating_ = false;
        run(0);
    }

    // Collects every valid labeling of weight exactly `target` in
    // lexicographic order, stopping once `cap` + 1 have been seen.
    void enumerate(int target, std::size_t cap) {
        best_weight_ = target;
        enumerating_ = true;
        cap_ = cap;
        truncated_ = false;
        run(0);
    }

    int best_weight() const { return best_weight_; }
    const std::vector<std::uint8_t>& witness() const { return witness_; }
    std::vector<Labeling> take_optima() { return std::move(optima_); }
    bool truncated() const { return truncated_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    const Graph& g_;
    DominationVariant variant_;
    int n_;
    int max_value_;

    std::vector<std::uint8_t> value_;
    std::vector<int> nbr_sum_;        // sum over assigned neighbors
    std::vector<int> nbr_twos_;       // assigned neighbors labeled 2
    std::vector<int> nbr_ones_;       // assigned neighbors labeled 1
    std::vector<int> unassigned_nbrs_;
    int partial_weight_ = 0;
    std::uint64_t nodes_ = 0;

    int best_weight_ = 0;
    std::vector<std::uint8_t> witness_;

    bool enumerating_ = false;
    std::size_t cap_ = 0;
    bool truncated_ = false;
    std::vector<Labeling> optima_;

    bool zero_vertex_ok(int v) const {
        const auto i = static_cast<std::size_t>(v);
        switch (variant_) {
        case DominationVariant::PerfectItalian: return nbr_sum_[i] == 2;
        case DominationVariant::Italian: return nbr_sum_[i] >= 2;
        case DominationVariant::Roman: return nbr_twos_[i] > 0;
        case DominationVariant::Domination: return nbr_ones_[i] > 0;
        }
        return false;
    }

    void apply(int v, int x) {
        value_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(x);
        partial_weight_ += x;
        for (int u : g_.neighbors(v)) {
            const auto j = static_cast<std::size_t>(u);
            nbr_sum_[j] += x;
            nbr_twos_[j] += x == 2;
            nbr_ones_[j] += x == 1;
            --unassigned_nbrs_[j];
        }
    }

    void undo(int v, int x) {
        partial_weight_ -= x;
        for (int u : g_.neighbors(v)) {
            const auto j = static_cast<std::size_t>(u);
            nbr_sum_[j] -= x;
            nbr_twos_[j] -= x == 2;
            nbr_ones_[j] -= x == 1;
            ++unassigned_nbrs_[j];
        }
    }

    // Checks the conditions that assigning x to v has just made decidable.
    bool consistent(int v, int x) const {
        if (x == 0) {
            const auto i = static_cast<std::size_t>(v);
            if (variant_ == DominationVariant::PerfectItalian && nbr_sum_[i] > 2)
                return false;
            if (unassigned_nbrs_[i] == 0 && !zero_vertex_ok(v)) return false;
        }
        for (int u : g_.neighbors(v)) {
            if (u > v || value_[static_cast<std::size_t>(u)] != 0) continue;
            const auto j = static_cast<std::size_t>(u);
            if (variant_ == DominationVariant::PerfectItalian && nbr_sum_[j] > 2)
                return false;
            if (unassigned_nbrs_[j] == 0 && !zero_vertex_ok(u)) return false;
        }
        return true;
    }

    // Returns false to abort the whole search (enumeration cap hit).
    bool run(int v) {
        if (v == n_) {
            if (enumerating_) {
                if (optima_.size() == cap_) {
                    truncated_ = true;
                    return false;
                }
                optima_.emplace_back(value_);
            } else {
                best_weight_ = partial_weight_;
                witness_ = value_;
            }
            return true;
        }
        for (int x = 0; x <= max_value_; ++x) {
            if (enumerating_) {
                if (partial_weight_ + x > best_weight_) break;
            } else {
                if (partial_weight_ + x >= best_weight_) break;
            }
            ++nodes_;
            apply(v, x);
            bool keep_going = true;
            if (consistent(v, x)) keep_going = run(v + 1);
            undo(v, x);
            if (!keep_going) return false;
        }
        return true;
    }
};

void check_solvable(const Graph& g, const SolveOptions& options) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("cannot solve the empty graph");
    if (g.vertex_count() > options.max_vertices)
        throw SizeGuardError("graph has " + std::to_string(g.vertex_count()) +
                             " vertices, above the size guard of " +
                             std::to_string(options.max_vertices) +
                             " (raise max_vertices to override)");
}

} // namespace

SolveResult solve(const Graph& g, DominationVariant variant, const SolveOptions& options) {
    check_solvable(g, options);
    Search search(g, variant);
    // The all-ones labeling is valid for every variant, so weight n is
    // always attainable and n+1 is a safe exclusive bound.
    search.minimize(g.vertex_count() + 1);
    SolveResult result;
    result.optimum = search.best_weight();
    result.witness = Labeling(search.witness());
    result.nodes_explored = search.nodes();
    return result;
}

EnumerationResult enumerate_optima(const Graph& g, DominationVariant variant,
                                   std::size_t cap, const SolveOptions& options) {
    SolveResult solved = solve(g, variant, options);
    Search search(g, variant);
    search.enumerate(solved.optimum, cap);
    EnumerationResult result;
    result.optimum = solved.optimum;
    result.optima = search.take_optima();
    result.truncated = search.truncated();
    return result;
}

} // namespace pidom
