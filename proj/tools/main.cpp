#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clustercolor/bounds.hpp"
#include "clustercolor/generators.hpp"
#include "clustercolor/io.hpp"
#include "clustercolor/oracle.hpp"
#include "clustercolor/three_coloring.hpp"
#include "clustercolor/verify.hpp"

namespace cc = clustercolor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExhausted = 3;

std::uint64_t seed_or_env(std::optional<std::uint64_t> seed_flag) {
    if (seed_flag) return *seed_flag;
    if (const char* env = std::getenv("CLUSTERCOLOR_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw cc::GraphError(cc::ErrorCode::InvalidInput,
                                 "CLUSTERCOLOR_SEED is not an integer");
        }
    }
    return 0;
}

// Undirected adjacency from a raw rotation table (symmetrized, deduplicated).
std::vector<std::vector<int>> to_adjacency(const cc::io::RawGraph& raw) {
    std::vector<std::vector<int>> adj(raw.n);
    for (int u = 0; u < raw.n; ++u)
        for (int v : raw.rotations[u]) {
            cc::require(v >= 0 && v < raw.n, cc::ErrorCode::InvalidInput,
                        "neighbor id out of range");
            if (u != v) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
    for (auto& nbrs : adj) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return adj;
}

int run_gen(const std::string& family, int k, int n, std::uint64_t seed, double rate,
            const std::string& out, const std::string& dot) {
    cc::PlaneGraph g;
    if (family == "tri-grid") {
        g = cc::generators::triangular_grid(k);
    } else if (family == "gk") {
        g = cc::generators::gk_family(k);
    } else if (family == "triangle-free") {
        g = cc::generators::triangle_free_family(k);
    } else if (family == "random-near-tri") {
        g = cc::generators::random_near_triangulation(n, seed);
    } else if (family == "random-plane") {
        g = cc::generators::random_plane_graph(n, seed, rate);
    } else {
        throw cc::GraphError(cc::ErrorCode::InvalidInput,
                             "unknown family " + family);
    }
    if (!out.empty()) cc::io::write_graph_file(out, g);
    if (!dot.empty()) cc::io::write_text_file(dot, cc::io::to_dot(g, nullptr));
    std::cout << "generated " << family << ": " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges, max degree " << g.max_degree() << "\n";
    return kExitOk;
}

int run_color(const std::string& in, const std::string& out, const std::string& dot,
              bool verify_levels) {
    cc::io::RawGraph raw = cc::io::read_graph_file(in);
    auto parts = cc::split_plane_components(raw.n, raw.rotations, raw.outer);
    cc::Coloring colors(raw.n, 0);
    cc::ColorOptions opts;
    opts.verify_levels = verify_levels;
    for (auto& [piece, vm] : parts) {
        cc::Coloring sub = cc::color_planar(piece, opts);
        for (int v = 0; v < piece.vertex_count(); ++v)
            colors[vm.origin[v].front()] = sub[v];
    }
    if (!out.empty()) cc::io::write_coloring_file(out, colors);
    if (!dot.empty()) cc::io::write_text_file(dot, cc::io::to_dot(raw, &colors));

    auto census = cc::component_census(to_adjacency(raw), colors);
    std::cout << "colored " << raw.n << " vertices in " << parts.size()
              << " component(s); max monochromatic component "
              << census.overall_max() << "\n";
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path,
               std::optional<int> delta_flag, bool layers, bool case2,
               std::vector<int> case3, const std::string& out) {
    cc::io::RawGraph raw = cc::io::read_graph_file(graph_path);
    cc::Coloring colors = cc::io::read_coloring_file(coloring_path, raw.n);
    auto parts = cc::split_plane_components(raw.n, raw.rotations, raw.outer);

    int delta = 1;
    for (const auto& [piece, vm] : parts)
        delta = std::max(delta, piece.max_degree());
    if (delta_flag) {
        cc::require(*delta_flag >= delta, cc::ErrorCode::InvalidInput,
                    "--delta below the actual maximum degree");
        delta = *delta_flag;
    }

    std::vector<cc::PropertyReport> reports;
    std::vector<cc::ComponentReport> censuses;
    bool pass = true;
    for (auto& [piece, vm] : parts) {
        cc::Coloring sub(piece.vertex_count(), 0);
        for (int v = 0; v < piece.vertex_count(); ++v)
            sub[v] = colors[vm.origin[v].front()];
        cc::PropertyReport report = cc::check_planar_properties(piece, sub, delta);
        if (layers || case2 || !case3.empty()) {
            cc::LayerCheckOptions topts;
            topts.case2 = case2;
            if (!case3.empty()) {
                cc::require(case3.size() == 4, cc::ErrorCode::InvalidInput,
                            "--case3 expects U V PHI_U PHI_V");
                topts.case3 = true;
                topts.case3_u = vm.forward[case3[0]];
                topts.case3_v = vm.forward[case3[1]];
                topts.case3_phi_u = case3[2];
                topts.case3_phi_v = case3[3];
            }
            cc::PropertyReport extra =
                cc::check_layer_properties(piece, sub, delta, topts);
            report.checks.insert(report.checks.end(), extra.checks.begin(),
                                 extra.checks.end());
        }
        pass = pass && report.pass();
        censuses.push_back(cc::monochromatic_components(piece, sub));
        reports.push_back(std::move(report));
    }

    for (std::size_t i = 0; i < reports.size(); ++i)
        for (const auto& c : reports[i].checks)
            std::cout << (c.pass ? "[pass] " : (c.asserted ? "[FAIL] " : "[info] "))
                      << c.name
                      << (c.bound.empty() ? "" : " (cap " + c.bound + ")") << "\n";
    if (!out.empty())
        cc::io::write_text_file(out, cc::io::report_to_json(reports, censuses, pass));
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitVerifyFailed;
}

int run_oracle(const std::string& graph_path, int colors, std::optional<int> bound,
               bool minimize, std::uint64_t node_limit, double time_limit, int jobs,
               const std::string& out) {
    cc::io::RawGraph raw = cc::io::read_graph_file(graph_path);
    auto adjacency = to_adjacency(raw);
    cc::oracle::SearchBudget budget;
    budget.max_nodes = node_limit;
    budget.max_seconds = time_limit;

    std::string status;
    cc::Coloring witness;
    std::uint64_t nodes = 0;
    int value = -1;
    if (minimize) {
        auto res = cc::oracle::min_max_component(adjacency, colors, budget, jobs);
        nodes = res.nodes;
        witness = res.witness;
        value = res.value;
        status = res.status == cc::oracle::Feasibility::Feasible ? "feasible"
                 : res.status == cc::oracle::Feasibility::Infeasible ? "infeasible"
                                                                     : "unknown";
        if (res.status == cc::oracle::Feasibility::Feasible)
            std::cout << "min-max component = " << value << " (nodes " << nodes
                      << ")\n";
    } else {
        cc::require(bound.has_value(), cc::ErrorCode::InvalidInput,
                    "oracle needs --bound or --minimize");
        auto res = cc::oracle::feasible(adjacency, colors, *bound, budget, jobs);
        nodes = res.nodes;
        witness = res.witness;
        status = res.status == cc::oracle::Feasibility::Feasible ? "feasible"
                 : res.status == cc::oracle::Feasibility::Infeasible ? "infeasible"
                                                                     : "unknown";
        std::cout << status << " (colors " << colors << ", bound " << *bound
                  << ", nodes " << nodes << ")\n";
    }

    if (!out.empty()) {
        std::string body = "{\n  \"status\": \"" + status + "\",\n  \"colors\": " +
                           std::to_string(colors) + ",\n";
        if (bound) body += "  \"bound\": " + std::to_string(*bound) + ",\n";
        if (minimize && status == "feasible")
            body += "  \"min_max\": " + std::to_string(value) + ",\n";
        if (!witness.empty()) {
            body += "  \"witness\": [";
            for (std::size_t i = 0; i < witness.size(); ++i)
                body += (i ? "," : "") + std::to_string(witness[i]);
            body += "],\n";
        }
        body += "  \"nodes\": " + std::to_string(nodes) + "\n}\n";
        cc::io::write_text_file(out, body);
    }
    return status == "unknown" ? kExitBudgetExhausted : kExitOk;
}

int run_bounds(int delta, std::optional<int> small_d) {
    using namespace cc::bounds;
    std::uint64_t d = static_cast<std::uint64_t>(delta);
    auto [f1_bar, f2_bar] = barred_bounds(d);
    auto [f1_rec, f2_rec] = recursive_barred_bounds(d);
    std::cout << "delta = " << delta << "\n";
    std::cout << "f1(delta)                      = " << f1(d).str() << "\n";
    std::cout << "f2(delta, delta*f1(delta))     = " << f2(d, d * (2 * d + 5)).str()
              << "\n";
    std::cout << "barred f1                      = " << f1_bar.str() << "\n";
    std::cout << "barred f2                      = " << f2_bar.str() << "\n";
    std::cout << "barred f2 (recursion-held)     = " << f2_rec.str() << "\n";
    std::cout << "whole-graph cap 6*delta^2*f2r  = "
              << (6 * cc::BigCount(d) * d * f2_rec).str() << "\n";
    std::cout << "final = (15*delta)^(32*delta+8) = " << final_bound(d).str() << "\n";
    if (small_d) {
        std::uint64_t dd = static_cast<std::uint64_t>(*small_d);
        std::cout << "f1(d)                          = " << f1(dd).str() << "\n";
        std::cout << "f2(d, delta)                   = " << f2(dd, d).str() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-coloring of plane graphs with small monochromatic components"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph family instance");
    std::string family, gen_out, gen_dot;
    int gen_k = 3, gen_n = 10;
    double gen_rate = 0.0;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--family", family,
                    "tri-grid | gk | triangle-free | random-near-tri | random-plane")
        ->required();
    gen->add_option("--k", gen_k, "family size parameter");
    gen->add_option("--n", gen_n, "vertex count for random families");
    gen->add_option("--seed", gen_seed, "PRNG seed (default: CLUSTERCOLOR_SEED or 0)");
    gen->add_option("--rate", gen_rate, "edge deletion rate for random-plane");
    gen->add_option("-o,--output", gen_out, "graph JSON output path");
    gen->add_option("--dot", gen_dot, "Graphviz output path");

    // color
    auto* color = app.add_subcommand("color", "3-color a plane graph");
    std::string color_in, color_out, color_dot;
    bool color_verify_levels = false;
    color->add_option("input", color_in, "graph JSON")->required();
    color->add_option("-o,--output", color_out, "coloring JSON output path");
    color->add_option("--dot", color_dot, "Graphviz output path");
    color->add_flag("--verify-levels", color_verify_levels,
                    "re-verify guarantees at every recursion level");

    // verify
    auto* verify = app.add_subcommand("verify", "check a coloring's guarantees");
    std::string verify_graph, verify_coloring, verify_out;
    std::optional<int> verify_delta;
    bool verify_layers = false, verify_case2 = false;
    std::vector<int> verify_case3;
    verify->add_option("graph", verify_graph, "graph JSON")->required();
    verify->add_option("coloring", verify_coloring, "coloring JSON")->required();
    verify->add_option("--delta", verify_delta, "degree parameter (>= max degree)");
    verify->add_flag("--layers", verify_layers,
                     "also check the inductive layer guarantees");
    verify->add_flag("--case2", verify_case2,
                     "also check the chordless-cycle strengthening");
    verify->add_option("--case3", verify_case3,
                       "U V PHI_U PHI_V: check the triangulated-skeleton strengthening")
        ->expected(4);
    verify->add_option("-o,--output", verify_out, "report JSON output path");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact small-instance search");
    std::string oracle_graph, oracle_out;
    int oracle_colors = 3, oracle_jobs = 1;
    std::optional<int> oracle_bound;
    bool oracle_minimize = false;
    std::uint64_t oracle_nodes = std::numeric_limits<std::uint64_t>::max();
    double oracle_time = std::numeric_limits<double>::infinity();
    oracle_cmd->add_option("graph", oracle_graph, "graph JSON")->required();
    oracle_cmd->add_option("--colors", oracle_colors, "number of colors")->required();
    oracle_cmd->add_option("--bound", oracle_bound, "component size bound");
    oracle_cmd->add_flag("--minimize", oracle_minimize,
                         "find the least feasible bound");
    oracle_cmd->add_option("--node-limit", oracle_nodes, "search node budget");
    oracle_cmd->add_option("--time-limit", oracle_time, "wall-clock budget (seconds)");
    oracle_cmd->add_option("--jobs", oracle_jobs, "parallel root branches");
    oracle_cmd->add_option("-o,--output", oracle_out, "report JSON output path");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "print the bound functions");
    int bounds_delta = 3;
    std::optional<int> bounds_d;
    bounds_cmd->add_option("--delta", bounds_delta, "degree parameter")->required();
    bounds_cmd->add_option("--d", bounds_d, "also evaluate at this cycle degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (gen->parsed())
            return run_gen(family, gen_k, gen_n, seed_or_env(gen_seed), gen_rate,
                           gen_out, gen_dot);
        if (color->parsed())
            return run_color(color_in, color_out, color_dot, color_verify_levels);
        if (verify->parsed())
            return run_verify(verify_graph, verify_coloring, verify_delta,
                              verify_layers, verify_case2, verify_case3, verify_out);
        if (oracle_cmd->parsed())
            return run_oracle(oracle_graph, oracle_colors, oracle_bound,
                              oracle_minimize, oracle_nodes, oracle_time, oracle_jobs,
                              oracle_out);
        if (bounds_cmd->parsed()) return run_bounds(bounds_delta, bounds_d);
    } catch (const cc::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}
