// Command-line front end: solve / verify / generate / formula / realize /
// table over the edge-list and labeling text formats.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pidom/errors.hpp"
#include "pidom/families.hpp"
#include "pidom/family_spec.hpp"
#include "pidom/graph.hpp"
#include "pidom/labeling.hpp"
#include "pidom/realize.hpp"
#include "pidom/solver.hpp"

namespace {

constexpr int kExitInvalidInput = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitSizeGuard = 3;

using nlohmann::json;

std::string read_stream(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

pidom::Graph read_graph(const std::string& path) {
    if (path == "-") return pidom::parse_edge_list(read_stream(std::cin));
    std::ifstream file(path);
    if (!file) throw pidom::ParseError("cannot open '" + path + "'");
    return pidom::parse_edge_list(read_stream(file));
}

pidom::DominationVariant parse_variant(const std::string& name) {
    auto variant = pidom::variant_from_string(name);
    if (!variant)
        throw pidom::ParseError("unknown variant '" + name +
                                "' (expected pid, italian, roman or domination)");
    return *variant;
}

// Family spec from either the compact string form ("path:7",
// "product(path:2,path:5)") or a bare name plus --n / --m / --parts flags.
pidom::FamilySpec resolve_family(const std::string& family, std::optional<int> n,
                                 std::optional<int> m, const std::vector<int>& parts) {
    if (family.find(':') != std::string::npos || family.find('(') != std::string::npos)
        return pidom::parse_family_spec(family);
    auto need_n = [&]() {
        if (!n) throw pidom::ParseError("family '" + family + "' needs --n");
        return *n;
    };
    if (family == "path") return pidom::FamilySpec::path(need_n());
    if (family == "cycle") return pidom::FamilySpec::cycle(need_n());
    if (family == "complete") return pidom::FamilySpec::complete(need_n());
    if (family == "empty") return pidom::FamilySpec::empty(need_n());
    if (family == "star") return pidom::FamilySpec::star(need_n());
    if (family == "multipartite") {
        if (parts.empty()) throw pidom::ParseError("family 'multipartite' needs --parts");
        return pidom::FamilySpec::complete_multipartite(parts);
    }
    if (family == "p2pn")
        return pidom::FamilySpec::product(pidom::FamilySpec::path(2),
                                          pidom::FamilySpec::path(need_n()));
    if (family == "kmkn") {
        if (!m || !n) throw pidom::ParseError("family 'kmkn' needs --m and --n");
        return pidom::FamilySpec::product(pidom::FamilySpec::complete(*m),
                                          pidom::FamilySpec::complete(*n));
    }
    throw pidom::ParseError("unknown family '" + family + "'");
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(path);
    if (!file) throw pidom::ParseError("cannot open '" + path + "' for writing");
    file << text;
}

int run_solve(const std::string& input, const std::string& variant_name, bool as_json,
              int max_vertices) {
    pidom::Graph g = read_graph(input);
    auto variant = parse_variant(variant_name);
    pidom::SolveResult result = pidom::solve(g, variant, {max_vertices});
    if (as_json) {
        json out{{"schema", 1},
                 {"variant", pidom::to_string(variant)},
                 {"optimum", result.optimum},
                 {"witness", result.witness.values()},
                 {"nodes_explored", result.nodes_explored}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "variant=" << pidom::to_string(variant) << " optimum=" << result.optimum
                  << '\n'
                  << "witness=" << result.witness.to_csv() << '\n';
    }
    return 0;
}

int run_verify(const std::string& input, const std::string& variant_name,
               const std::string& labeling_text, bool as_json) {
    pidom::Graph g = read_graph(input);
    auto variant = parse_variant(variant_name);
    pidom::Labeling f = pidom::Labeling::parse_csv(labeling_text);
    if (f.size() != g.vertex_count())
        throw pidom::ParseError("labeling has " + std::to_string(f.size()) +
                                " values but the graph has " +
                                std::to_string(g.vertex_count()) + " vertices");
    auto faults = pidom::violations(g, f, variant);
    if (as_json) {
        json list = json::array();
        for (const auto& fault : faults)
            list.push_back({{"vertex", fault.vertex}, {"neighbor_sum", fault.neighbor_sum}});
        json out{{"schema", 1},
                 {"variant", pidom::to_string(variant)},
                 {"valid", faults.empty()},
                 {"weight", f.weight()},
                 {"violations", list}};
        std::cout << out.dump() << '\n';
    } else if (faults.empty()) {
        std::cout << "VALID weight=" << f.weight() << '\n';
    } else {
        std::cout << "INVALID\n";
        for (const auto& fault : faults)
            std::cout << "vertex " << fault.vertex << " neighbor_sum=" << fault.neighbor_sum
                      << '\n';
    }
    return faults.empty() ? 0 : kExitInvalidInput;
}

int run_formula(const pidom::FamilySpec& spec, bool as_json) {
    pidom::FormulaResult result = pidom::pid_formula(spec);
    if (as_json) {
        json out{{"schema", 1},
                 {"family", pidom::to_string(spec)},
                 {"value", result.value},
                 {"source", result.source}};
        std::cout << out.dump() << '\n';
    } else {
        std::cout << "value=" << result.value << " source=" << result.source << '\n';
    }
    return 0;
}

struct TableRow {
    std::string label;
    int formula;
    int solver;
};

int run_table(const std::string& sweep, int max, int max_vertices) {
    std::vector<TableRow> rows;
    auto add_row = [&](const pidom::FamilySpec& spec) {
        int expected = pidom::pid_formula(spec).value;
        pidom::Graph g = pidom::generate(spec);
        int actual = pidom::solve(g, pidom::DominationVariant::PerfectItalian,
                                  {std::max(max_vertices, g.vertex_count())})
                         .optimum;
        rows.push_back({pidom::to_string(spec), expected, actual});
    };
    if (sweep == "paths") {
        for (int n = 1; n <= max; ++n) add_row(pidom::FamilySpec::path(n));
    } else if (sweep == "cycles") {
        for (int n = 3; n <= max; ++n) add_row(pidom::FamilySpec::cycle(n));
    } else if (sweep == "p2pn") {
        for (int n = 1; n <= max; ++n)
            add_row(pidom::FamilySpec::product(pidom::FamilySpec::path(2),
                                               pidom::FamilySpec::path(n)));
    } else if (sweep == "kmkn") {
        for (int m = 1; m <= max; ++m)
            for (int n = m; n <= max; ++n)
                add_row(pidom::FamilySpec::product(pidom::FamilySpec::complete(m),
                                                   pidom::FamilySpec::complete(n)));
    } else {
        throw pidom::ParseError("unknown sweep '" + sweep +
                                "' (expected paths, cycles, p2pn or kmkn)");
    }
    std::size_t width = 6;
    for (const auto& row : rows) width = std::max(width, row.label.size());
    std::cout << "family";
    std::cout << std::string(width - 6 + 2, ' ') << "formula  solver  status\n";
    int failures = 0;
    for (const auto& row : rows) {
        bool ok = row.formula == row.solver;
        failures += !ok;
        std::cout << row.label << std::string(width - row.label.size() + 2, ' ')
                  << row.formula << std::string(9 - std::to_string(row.formula).size(), ' ')
                  << row.solver << std::string(8 - std::to_string(row.solver).size(), ' ')
                  << (ok ? "PASS" : "FAIL") << '\n';
    }
    std::cout << rows.size() - static_cast<std::size_t>(failures) << "/" << rows.size()
              << " agree\n";
    return failures == 0 ? 0 : kExitInvalidInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact perfect Italian / Italian / Roman / plain domination numbers "
                 "of small graphs: exhaustive solver, closed-form family values, and "
                 "realization gadget builders"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output;
    std::string variant = "pid";
    std::string labeling_text;
    std::string family;
    std::string sweep;
    std::string kind;
    std::vector<int> parts;
    std::optional<int> n_flag;
    std::optional<int> m_flag;
    int a = 0;
    int b = 0;
    int p = 3;
    int max = 0;
    int max_vertices = 24;
    bool as_json = false;

    auto* solve_cmd = app.add_subcommand("solve", "Exact optimum and witness labeling");
    solve_cmd->add_option("-i,--input", input, "Edge-list file, or '-' for stdin");
    solve_cmd->add_option("-v,--variant", variant, "pid | italian | roman | domination");
    solve_cmd->add_flag("--json", as_json, "Emit JSON");
    solve_cmd->add_option("--max-vertices", max_vertices, "Exhaustive-search size guard");

    auto* verify_cmd = app.add_subcommand("verify", "Check a labeling against a graph");
    verify_cmd->add_option("-i,--input", input, "Edge-list file, or '-' for stdin");
    verify_cmd->add_option("-v,--variant", variant, "pid | italian | roman | domination");
    verify_cmd->add_option("-l,--labeling", labeling_text, "Comma-separated labels")
        ->required();
    verify_cmd->add_flag("--json", as_json, "Emit JSON");

    auto* generate_cmd = app.add_subcommand("generate", "Write a family graph's edge list");
    generate_cmd->add_option("-f,--family", family, "Family name or spec string")->required();
    generate_cmd->add_option("-n,--n", n_flag, "Size parameter");
    generate_cmd->add_option("-m,--m", m_flag, "First size of kmkn");
    generate_cmd->add_option("--parts", parts, "Multipartite part sizes (nondecreasing)");
    generate_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* formula_cmd = app.add_subcommand("formula", "Closed-form perfect Italian value");
    formula_cmd->add_option("-f,--family", family, "Family name or spec string")->required();
    formula_cmd->add_option("-n,--n", n_flag, "Size parameter");
    formula_cmd->add_option("-m,--m", m_flag, "First size of kmkn");
    formula_cmd->add_option("--parts", parts, "Multipartite part sizes (nondecreasing)");
    formula_cmd->add_flag("--json", as_json, "Emit JSON");

    auto* realize_cmd =
        app.add_subcommand("realize", "Build a realization gadget's edge list");
    realize_cmd
        ->add_option("-k,--kind", kind,
                     "induced (PID pair on host and induced subgraph) or roman-pid "
                     "(Roman value a, PID value b)")
        ->required();
    realize_cmd->add_option("-a,--a", a, "First target value")->required();
    realize_cmd->add_option("-b,--b", b, "Second target value")->required();
    realize_cmd->add_option("-p,--p", p, "Isolated-side size for chain gadgets");
    realize_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    auto* table_cmd = app.add_subcommand("table", "Formula-vs-solver sweep");
    table_cmd->add_option("-s,--sweep", sweep, "paths | cycles | p2pn | kmkn")->required();
    table_cmd->add_option("--max", max, "Sweep bound (default per sweep)");
    table_cmd->add_option("--max-vertices", max_vertices, "Exhaustive-search size guard");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) return run_solve(input, variant, as_json, max_vertices);
        if (verify_cmd->parsed()) return run_verify(input, variant, labeling_text, as_json);
        if (generate_cmd->parsed()) {
            auto spec = resolve_family(family, n_flag, m_flag, parts);
            write_output(output, pidom::serialize_edge_list(pidom::generate(spec)));
            return 0;
        }
        if (formula_cmd->parsed())
            return run_formula(resolve_family(family, n_flag, m_flag, parts), as_json);
        if (realize_cmd->parsed()) {
            if (kind == "induced") {
                auto realization = pidom::realize_induced(a, b);
                std::ostringstream text;
                text << "# induced";
                for (int v : realization.h_vertices) text << ' ' << v;
                text << '\n' << pidom::serialize_edge_list(realization.graph);
                write_output(output, text.str());
            } else if (kind == "roman-pid") {
                write_output(output,
                             pidom::serialize_edge_list(pidom::realize_roman_vs_pid(a, b, p)));
            } else {
                throw pidom::ParseError("unknown kind '" + kind +
                                        "' (expected induced or roman-pid)");
            }
            return 0;
        }
        if (table_cmd->parsed()) {
            if (max == 0) max = sweep == "p2pn" ? 8 : (sweep == "kmkn" ? 4 : 14);
            return run_table(sweep, max, max_vertices);
        }
    } catch (const pidom::SizeGuardError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSizeGuard;
    } catch (const pidom::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
    return 0;
}
