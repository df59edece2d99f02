#include <doctest.h>

#include "clustercolor/generators.hpp"
#include "clustercolor/oracle.hpp"
#include "support/brute.hpp"

using namespace clustercolor;
using oracle::Feasibility;

namespace {

std::vector<std::vector<int>> complete_graph(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) adj[u].push_back(v);
    return adj;
}

std::vector<std::vector<int>> cycle(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) adj[i] = {(i + n - 1) % n, (i + 1) % n};
    return adj;
}

}  // namespace

TEST_CASE("small closed forms") {
    CHECK(oracle::feasible(complete_graph(3), 3, 1).status == Feasibility::Feasible);
    CHECK(oracle::feasible(complete_graph(3), 2, 1).status == Feasibility::Infeasible);

    auto k3_mono = oracle::min_max_component(complete_graph(3), 1);
    CHECK(k3_mono.status == Feasibility::Feasible);
    CHECK(k3_mono.value == 3);

    auto c5 = oracle::min_max_component(cycle(5), 2);
    CHECK(c5.status == Feasibility::Feasible);
    CHECK(c5.value == 2);
    CHECK(c5.value == testsupport::brute_min_max(cycle(5), 2));
}

TEST_CASE("grid lower bound at the smallest size") {
    auto g = generators::triangular_grid(3);
    auto res = oracle::min_max_component(g.rotations(), 2);
    CHECK(res.status == Feasibility::Feasible);
    CHECK(res.value >= 3);
    CHECK(res.value == testsupport::brute_min_max(g.rotations(), 2));
}

TEST_CASE("pruned search agrees with plain enumeration") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        int n = 2 + static_cast<int>(seed % 6);
        auto adjacency = testsupport::random_graph(n, 0.45, seed * 31);
        for (int colors = 1; colors <= 3; ++colors) {
            int expect = testsupport::brute_min_max(adjacency, colors);
            auto res = oracle::min_max_component(adjacency, colors);
            REQUIRE(res.status == Feasibility::Feasible);
            CHECK(res.value == expect);
            for (int b = 1; b <= n; ++b) {
                bool brute = testsupport::brute_feasible(adjacency, colors, b);
                auto fast = oracle::feasible(adjacency, colors, b);
                REQUIRE(fast.status != Feasibility::Unknown);
                CHECK((fast.status == Feasibility::Feasible) == brute);
            }
        }
    }
}

TEST_CASE("feasibility is monotone in the bound") {
    for (std::uint64_t seed = 50; seed <= 58; ++seed) {
        auto adjacency = testsupport::random_graph(6, 0.5, seed);
        bool seen_feasible = false;
        for (int b = 1; b <= 6; ++b) {
            auto res = oracle::feasible(adjacency, 2, b);
            REQUIRE(res.status != Feasibility::Unknown);
            if (seen_feasible) CHECK(res.status == Feasibility::Feasible);
            if (res.status == Feasibility::Feasible) seen_feasible = true;
        }
        CHECK(seen_feasible);
    }
}

TEST_CASE("witnesses satisfy the bound they claim") {
    auto g = generators::triangular_grid(3);
    auto res = oracle::feasible(g.rotations(), 3, 1);
    REQUIRE(res.status == Feasibility::Feasible);
    CHECK(testsupport::max_component_union_find(g.rotations(), res.witness) <= 1);
}

TEST_CASE("budgets yield unknown rather than wrong answers") {
    auto g = generators::triangular_grid(4);
    oracle::SearchBudget tiny;
    tiny.max_nodes = 5;
    auto res = oracle::min_max_component(g.rotations(), 2, tiny);
    CHECK(res.status == Feasibility::Unknown);
}

TEST_CASE("parallel mode matches sequential answers and witnesses") {
    for (std::uint64_t seed = 3; seed <= 9; ++seed) {
        auto adjacency = testsupport::random_graph(7, 0.5, seed * 13);
        for (int b = 1; b <= 4; ++b) {
            auto seq = oracle::feasible(adjacency, 3, b);
            auto par = oracle::feasible(adjacency, 3, b, {}, 4);
            CHECK(seq.status == par.status);
            if (seq.status == Feasibility::Feasible) CHECK(seq.witness == par.witness);
        }
    }
}
