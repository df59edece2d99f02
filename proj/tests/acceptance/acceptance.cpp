// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.  Usage:
//   acceptance_tests [criterion] [path-to-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "clustercolor/bounds.hpp"
#include "clustercolor/generators.hpp"
#include "clustercolor/io.hpp"
#include "clustercolor/oracle.hpp"
#include "clustercolor/three_coloring.hpp"
#include "clustercolor/triangulate.hpp"
#include "clustercolor/two_coloring.hpp"
#include "clustercolor/verify.hpp"
#include "support/brute.hpp"
#include "support/instances.hpp"

namespace cc = clustercolor;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli_path;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int run_cli(const std::string& args) {
    std::string cmd = g_cli_path + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return status < 0 ? status : WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) return {};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    std::fclose(f);
    return out;
}

struct Criterion {
    int number;
    std::string summary;
    std::function<bool(std::string&)> run;  // fills a failure note
};

// 1. End-to-end soundness over seeded instances and grids, through the CLI.
bool criterion_end_to_end(std::string& note) {
    const std::string dir = "/tmp/clustercolor_acceptance";
    std::system(("mkdir -p " + dir).c_str());
    const std::string graph = dir + "/g.json";
    const std::string coloring = dir + "/c.json";

    auto one_instance = [&](const cc::PlaneGraph& g, const std::string& label) {
        Clock::time_point start = Clock::now();
        cc::io::write_graph_file(graph, g);
        if (run_cli("color " + graph + " -o " + coloring) != 0) {
            note = label + ": color exited nonzero";
            return false;
        }
        int delta = std::max(1, g.max_degree());
        if (run_cli("verify " + graph + " " + coloring + " --delta " +
                    std::to_string(delta)) != 0) {
            note = label + ": verify exited nonzero";
            return false;
        }
        cc::Coloring colors = cc::io::read_coloring_file(coloring, g.vertex_count());
        cc::PropertyReport report = cc::check_planar_properties(g, colors, delta);
        if (!report.pass()) {
            note = label + ": whole-graph properties failed";
            return false;
        }
        if (seconds_since(start) > 5.0) {
            note = label + ": exceeded 5 s";
            return false;
        }
        return true;
    };

    for (int i = 0; i < 200; ++i) {
        int n = 10 + (i * 97) % 291;  // up to 300
        auto g = cc::generators::random_near_triangulation(n, 1000 + i);
        if (!one_instance(g, "near-triangulation " + std::to_string(i))) return false;
    }
    for (int i = 0; i < 100; ++i) {
        int n = 10 + (i * 53) % 191;  // up to 200
        auto g = cc::generators::random_plane_graph(n, 2000 + i, 0.3);
        if (!one_instance(g, "plane graph " + std::to_string(i))) return false;
    }
    for (int k = 3; k <= 10; ++k) {
        auto g = cc::generators::triangular_grid(k);
        if (!one_instance(g, "grid " + std::to_string(k))) return false;
    }
    return true;
}

// 2. Path-instance suite: 500 seeded instances, |P| <= 40.
bool criterion_path_suite(std::string& note) {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        cc::PathInstance inst = testsupport::random_path_instance(seed, 40);
        cc::Coloring colors = cc::color_path_instance(inst);
        for (int v : inst.stable)
            if (colors[v] != 2) {
                note = "stable vertex not colored 2 at seed " + std::to_string(seed);
                return false;
            }
        if (colors[inst.path.front()] != 2 || colors[inst.path.back()] != 2) {
            note = "path endpoint not colored 2 at seed " + std::to_string(seed);
            return false;
        }
        cc::PropertyReport report = cc::check_two_coloring_postconditions(inst, colors);
        if (!report.pass()) {
            note = "postconditions failed at seed " + std::to_string(seed);
            return false;
        }
    }
    return true;
}

// 3. Cycle-instance suite: 500 seeded instances with exact replay/reverse.
bool criterion_cycle_suite(std::string& note) {
    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        cc::CycleInstance inst = testsupport::random_cycle_instance(seed, 40);
        auto [path_inst, plan] = cc::normalize_cycle_instance(inst);
        cc::PathInstance replayed = cc::replay_normalization(inst, plan);
        if (replayed.graph.rotations() != path_inst.graph.rotations() ||
            replayed.graph.outer_dart() != path_inst.graph.outer_dart() ||
            replayed.path != path_inst.path) {
            note = "replay diverged at seed " + std::to_string(seed);
            return false;
        }
        cc::PlaneGraph restored = cc::reverse_normalization(path_inst, plan);
        if (restored.rotations() != inst.graph.rotations() ||
            restored.outer_dart() != inst.graph.outer_dart()) {
            note = "reverse diverged at seed " + std::to_string(seed);
            return false;
        }
        cc::Coloring colors = cc::color_cycle_instance(inst);
        for (int v : inst.stable)
            if (colors[v] != 2) {
                note = "stable vertex not colored 2 at seed " + std::to_string(seed);
                return false;
            }
        if (!cc::check_two_coloring_postconditions(inst, colors).pass()) {
            note = "postconditions failed at seed " + std::to_string(seed);
            return false;
        }
    }
    return true;
}

// 4. Grid 2-coloring lower bounds via the exact search.
bool criterion_grid_lower_bound(std::string& note) {
    {
        cc::oracle::SearchBudget budget;
        budget.max_seconds = 10.0;
        auto g = cc::generators::triangular_grid(3);
        auto res = cc::oracle::min_max_component(g.rotations(), 2, budget);
        if (res.status != cc::oracle::Feasibility::Feasible) {
            note = "3x3 search did not finish";
            return false;
        }
        std::cout << "    [derived] min over 2-colorings of max component, 3x3 grid: "
                  << res.value << "\n";
        if (res.value < 3) {
            note = "3x3 minimum below 3";
            return false;
        }
    }
    {
        cc::oracle::SearchBudget budget;
        budget.max_seconds = 120.0;
        auto g = cc::generators::triangular_grid(4);
        auto res = cc::oracle::min_max_component(g.rotations(), 2, budget);
        if (res.status != cc::oracle::Feasibility::Feasible) {
            note = "4x4 search did not finish";
            return false;
        }
        std::cout << "    [derived] min over 2-colorings of max component, 4x4 grid: "
                  << res.value << "\n";
        if (res.value < 4) {
            note = "4x4 minimum below 4";
            return false;
        }
    }
    return true;
}

// 5. Anchored-fan family: no 3-coloring with components of size at most 2.
bool criterion_fan_lower_bound(std::string& note) {
    cc::oracle::SearchBudget budget;
    budget.max_seconds = 120.0;
    auto g = cc::generators::gk_family(3);
    auto res = cc::oracle::feasible(g.rotations(), 3, 2, budget);
    if (res.status != cc::oracle::Feasibility::Infeasible) {
        note = res.status == cc::oracle::Feasibility::Unknown
                   ? "search exhausted its budget"
                   : "unexpected feasible coloring";
        return false;
    }
    return true;
}

// 6. Triangle-free family: exhaustive 2-coloring enumeration.
bool criterion_triangle_free_lower_bound(std::string& note) {
    Clock::time_point start = Clock::now();
    auto g = cc::generators::triangle_free_family(3);
    if (g.vertex_count() != 13) {
        note = "unexpected family size";
        return false;
    }
    int value = testsupport::brute_min_max(g.rotations(), 2);
    std::cout << "    [derived] min over 2-colorings of max component: " << value
              << "\n";
    if (value != 3) {
        note = "exhaustive minimum is " + std::to_string(value) + ", expected 3";
        return false;
    }
    if (seconds_since(start) > 5.0) {
        note = "enumeration exceeded 5 s";
        return false;
    }
    return true;
}

// 7. Search agreement with plain enumeration on random graphs, n <= 7.
bool criterion_oracle_agreement(std::string& note) {
    for (int i = 0; i < 100; ++i) {
        int n = 1 + i % 7;
        auto adjacency = testsupport::random_graph(n, 0.2 + 0.06 * (i % 9),
                                                   9000 + i);
        for (int colors = 1; colors <= 3; ++colors) {
            int expect = testsupport::brute_min_max(adjacency, colors);
            auto res = cc::oracle::min_max_component(adjacency, colors);
            if (res.status != cc::oracle::Feasibility::Feasible ||
                res.value != expect) {
                note = "disagreement at instance " + std::to_string(i) + ", colors " +
                       std::to_string(colors);
                return false;
            }
        }
    }
    return true;
}

// 8. Near-triangulation guarantees on random plane graphs.
bool criterion_near_triangulation(std::string& note) {
    for (int i = 0; i < 100; ++i) {
        int n = 5 + (i * 41) % 96;
        auto g = cc::generators::random_plane_graph(n, 500 + i, 0.3);
        cc::Augmentation aug = cc::near_triangulate(g);
        if (!aug.graph.near_triangulated()) {
            note = "non-triangular face left at instance " + std::to_string(i);
            return false;
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int nb : g.neighbors(v))
                if (!aug.graph.has_edge(v, nb)) {
                    note = "input edge lost at instance " + std::to_string(i);
                    return false;
                }
        if (aug.graph.max_degree() > std::max(6, 3 * g.max_degree())) {
            note = "degree bound exceeded at instance " + std::to_string(i);
            return false;
        }
        for (int v : aug.added)
            if (aug.graph.degree(v) > 6) {
                note = "ring vertex above degree 6 at instance " + std::to_string(i);
                return false;
            }
    }
    return true;
}

// 9. Bound functions against an independent route, plus monotonicity.
bool criterion_bounds(std::string& note) {
    using namespace cc::bounds;
    if (f1(3) != 11 || f2(1, 1) != 7776) {
        note = "pinned bound values wrong";
        return false;
    }
    if (final_bound(3) != power_by_repeated_multiply(cc::BigCount(45), 104)) {
        note = "exponentiation routes disagree on the final bound";
        return false;
    }
    cc::SplitMix64 rng(777);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t d = 1 + rng.below(40);
        std::uint64_t delta = 1 + rng.below(40);
        bool ok = f1(d) < f1(d + 1) && f2(d, delta) < f2(d + 1, delta) &&
                  f2(d, delta) < f2(d, delta + 1) &&
                  barred_bounds(delta).second < barred_bounds(delta + 1).second &&
                  final_bound(delta) < final_bound(delta + 1);
        if (!ok) {
            note = "monotonicity failed at sample " + std::to_string(i);
            return false;
        }
    }
    return true;
}

// 10. Byte-identical reruns of the full pipeline.
bool criterion_determinism(std::string& note) {
    const std::string dir = "/tmp/clustercolor_acceptance";
    std::system(("mkdir -p " + dir).c_str());
    auto files_equal = [&](const std::string& a, const std::string& b) {
        std::string sa = slurp(a), sb = slurp(b);
        return !sa.empty() && sa == sb;
    };

    for (const std::string gen_args :
         {std::string("--family random-plane --n 60 --seed 7 --rate 0.3"),
          std::string("--family tri-grid --k 5"),
          std::string("--family gk --k 3")}) {
        for (int round = 1; round <= 2; ++round) {
            std::string tag = dir + "/r" + std::to_string(round);
            if (run_cli("gen " + gen_args + " -o " + tag + "_g.json") != 0 ||
                run_cli("color " + tag + "_g.json -o " + tag + "_c.json") != 0 ||
                run_cli("verify " + tag + "_g.json " + tag + "_c.json -o " + tag +
                        "_report.json") != 0) {
                note = "pipeline exited nonzero";
                return false;
            }
        }
        for (const std::string suffix : {std::string("_g.json"),
                                         std::string("_c.json"),
                                         std::string("_report.json")}) {
            if (!files_equal(dir + "/r1" + suffix, dir + "/r2" + suffix)) {
                note = "reruns differ in " + suffix + " for gen " + gen_args;
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    if (argc > 2) g_cli_path = argv[2];
    if (g_cli_path.empty()) {
        const char* env = std::getenv("CLUSTERCOLOR_CLI");
        g_cli_path = env ? env : "./build/tools/clustercolor";
    }

    std::vector<Criterion> criteria = {
        {1, "end-to-end coloring and verification over seeded instances",
         criterion_end_to_end},
        {2, "path-instance 2-coloring suite (500 instances)", criterion_path_suite},
        {3, "cycle-instance 2-coloring suite (500 instances)", criterion_cycle_suite},
        {4, "grid 2-coloring lower bounds (3x3 and 4x4)", criterion_grid_lower_bound},
        {5, "anchored-fan family infeasible at 3 colors, bound 2",
         criterion_fan_lower_bound},
        {6, "triangle-free family exhaustive 2-coloring minimum",
         criterion_triangle_free_lower_bound},
        {7, "exact search agrees with plain enumeration", criterion_oracle_agreement},
        {8, "near-triangulation structural guarantees", criterion_near_triangulation},
        {9, "bound functions: pinned values, independent route, monotonicity",
         criterion_bounds},
        {10, "byte-identical pipeline reruns", criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (only != 0 && criterion.number != only) continue;
        std::string note;
        Clock::time_point start = Clock::now();
        bool ok = false;
        try {
            ok = criterion.run(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.summary.c_str(),
                    seconds_since(start), note.empty() ? "" : " -- ",
                    note.c_str());
        if (!ok) ++failures;
    }
    return failures;
}
