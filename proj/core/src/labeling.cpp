#include "pidom/labeling.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pidom/errors.hpp"

namespace pidom {

std::string to_string(DominationVariant variant) {
    switch (variant) {
    case DominationVariant::PerfectItalian: return "pid";
    case DominationVariant::Italian: return "italian";
    case DominationVariant::Roman: return "roman";
    case DominationVariant::Domination: return "domination";
    }
    return "?";
}

std::optional<DominationVariant> variant_from_string(std::string_view name) {
    if (name == "pid") return DominationVariant::PerfectItalian;
    if (name == "italian") return DominationVariant::Italian;
    if (name == "roman") return DominationVariant::Roman;
    if (name == "domination") return DominationVariant::Domination;
    return std::nullopt;
}

Labeling::Labeling(std::vector<std::uint8_t> values) : values_(std::move(values)) {
    for (auto v : values_)
        if (v > 2) throw std::invalid_argument("labels must be 0, 1 or 2");
}

Labeling Labeling::parse_csv(const std::string& text) {
    std::vector<std::uint8_t> values;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) {
        std::size_t start = field.find_first_not_of(" \t\r\n");
        std::size_t end = field.find_last_not_of(" \t\r\n");
        if (start == std::string::npos) throw ParseError("empty labeling field");
        std::string token = field.substr(start, end - start + 1);
        if (token != "0" && token != "1" && token != "2")
            throw ParseError("labeling value '" + token + "' is not 0, 1 or 2");
        values.push_back(static_cast<std::uint8_t>(token[0] - '0'));
    }
    if (values.empty()) throw ParseError("empty labeling");
    return Labeling(std::move(values));
}

int Labeling::weight() const {
    return std::accumulate(values_.begin(), values_.end(), 0);
}

std::vector<int> Labeling::vertices_with(int label) const {
    std::vector<int> result;
    for (int v = 0; v < size(); ++v)
        if (value(v) == label) result.push_back(v);
    return result;
}

std::string Labeling::to_csv() const {
    std::ostringstream out;
    for (int v = 0; v < size(); ++v) {
        if (v) out << ',';
        out << value(v);
    }
    return out.str();
}

namespace {

void check_inputs(const Graph& g, const Labeling& f, DominationVariant variant) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument("labeling size " + std::to_string(f.size()) +
                                    " does not match vertex count " +
                                    std::to_string(g.vertex_count()));
    if (variant == DominationVariant::Domination)
        for (int v = 0; v < f.size(); ++v)
            if (f.value(v) == 2)
                throw std::invalid_argument("label 2 is not allowed under plain domination");
}

bool vertex_ok(const Graph& g, const Labeling& f, DominationVariant variant, int v,
               int& neighbor_sum) {
    neighbor_sum = 0;
    bool has_two = false;
    bool has_one = false;
    for (int u : g.neighbors(v)) {
        int value = f.value(u);
        neighbor_sum += value;
        has_two |= value == 2;
        has_one |= value == 1;
    }
    switch (variant) {
    case DominationVariant::PerfectItalian: return neighbor_sum == 2;
    case DominationVariant::Italian: return neighbor_sum >= 2;
    case DominationVariant::Roman: return has_two;
    case DominationVariant::Domination: return has_one;
    }
    return false;
}

} // namespace

bool is_valid(const Graph& g, const Labeling& f, DominationVariant variant) {
    check_inputs(g, f, variant);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f.value(v) != 0) continue;
        int sum = 0;
        if (!vertex_ok(g, f, variant, v, sum)) return false;
    }
    return true;
}

std::vector<Violation> violations(const Graph& g, const Labeling& f,
                                  DominationVariant variant) {
    check_inputs(g, f, variant);
    std::vector<Violation> result;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f.value(v) != 0) continue;
        int sum = 0;
        if (!vertex_ok(g, f, variant, v, sum)) result.push_back({v, sum});
    }
    return result;
}

} // namespace pidom
