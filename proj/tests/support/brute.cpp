#include "support/brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "clustercolor/generators.hpp"

namespace testsupport {

int max_component_union_find(const std::vector<std::vector<int>>& adjacency,
                             const std::vector<int>& coloring) {
    int n = static_cast<int>(adjacency.size());
    std::vector<int> parent(n), size(n, 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u]) {
            if (v < u || coloring[u] != coloring[v]) continue;
            int ra = find(u), rb = find(v);
            if (ra != rb) {
                parent[ra] = rb;
                size[rb] += size[ra];
            }
        }
    int best = 0;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) best = std::max(best, size[v]);
    return best;
}

namespace {

template <typename Fn>
void for_each_coloring(int n, int colors, Fn&& fn) {
    std::vector<int> coloring(n, 1);
    while (true) {
        fn(coloring);
        int i = 0;
        while (i < n && coloring[i] == colors) coloring[i++] = 1;
        if (i == n) return;
        ++coloring[i];
    }
}

}  // namespace

bool brute_feasible(const std::vector<std::vector<int>>& adjacency, int colors,
                    int bound) {
    bool found = false;
    for_each_coloring(static_cast<int>(adjacency.size()), colors,
                      [&](const std::vector<int>& coloring) {
                          if (found) return;
                          if (max_component_union_find(adjacency, coloring) <= bound)
                              found = true;
                      });
    return found;
}

int brute_min_max(const std::vector<std::vector<int>>& adjacency, int colors) {
    int best = static_cast<int>(adjacency.size());
    for_each_coloring(static_cast<int>(adjacency.size()), colors,
                      [&](const std::vector<int>& coloring) {
                          best = std::min(best,
                                          max_component_union_find(adjacency, coloring));
                      });
    return best;
}

std::vector<std::vector<int>> random_graph(int n, double edge_probability,
                                           std::uint64_t seed) {
    clustercolor::SplitMix64 rng(seed);
    std::vector<std::vector<int>> adjacency(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_probability)) {
                adjacency[u].push_back(v);
                adjacency[v].push_back(u);
            }
    return adjacency;
}

}  // namespace testsupport
