#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pidom/graph.hpp"

namespace pidom {

/// Which validity predicate a {0,1,2}-labeling must satisfy.
///
/// A vertex labeled 0 needs, over its open neighborhood:
///   PerfectItalian  label sum exactly 2
///   Italian         label sum >= 2
///   Roman           some neighbor labeled 2
///   Domination      some neighbor labeled 1 (labels restricted to {0,1})
/// Vertices labeled >= 1 impose no condition.
enum class DominationVariant { PerfectItalian, Italian, Roman, Domination };

std::string to_string(DominationVariant variant);
/// Accepts "pid", "italian", "roman", "domination".
std::optional<DominationVariant> variant_from_string(std::string_view name);

/// Total map from vertex identifiers to {0,1,2}.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<std::uint8_t> values);

    /// Parses "1,0,2"; throws ParseError on malformed input or values > 2.
    static Labeling parse_csv(const std::string& text);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    int value(int v) const { return values_.at(static_cast<std::size_t>(v)); }
    const std::vector<std::uint8_t>& values() const noexcept { return values_; }

    /// Sum of all labels.
    int weight() const;

    /// Vertices labeled exactly `label` (the V_0/V_1/V_2 classes).
    std::vector<int> vertices_with(int label) const;

    std::string to_csv() const;

    bool operator==(const Labeling&) const = default;
    /// Lexicographic by vertex order with value order 0 < 1 < 2.
    std::strong_ordering operator<=>(const Labeling& other) const {
        return values_ <=> other.values_;
    }

private:
    std::vector<std::uint8_t> values_;
};

struct Violation {
    int vertex;
    int neighbor_sum;
    bool operator==(const Violation&) const = default;
};

/// True iff every vertex labeled 0 meets the variant's neighbor condition.
/// Throws std::invalid_argument on a size mismatch, or when a label 2 is
/// used under the Domination variant.
bool is_valid(const Graph& g, const Labeling& f, DominationVariant variant);

/// The 0-labeled vertices failing the condition, ascending by identifier,
/// each with its neighbor label sum. Empty iff is_valid.
std::vector<Violation> violations(const Graph& g, const Labeling& f,
                                  DominationVariant variant);

} // namespace pidom
