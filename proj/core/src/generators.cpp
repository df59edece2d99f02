#include "clustercolor/generators.hpp"

#include <algorithm>

namespace clustercolor {
namespace generators {

PlaneGraph triangular_grid(int k) {
    require(k >= 2, ErrorCode::InvalidInput, "grid size must be at least 2");
    int n = k * k;
    auto id = [k](int i, int j) { return i * k + j; };
    auto inside = [k](int i, int j) { return i >= 0 && i < k && j >= 0 && j < k; };

    // Clockwise order of the six possible grid directions around (i, j):
    // down, down-right diagonal, right, up, up-left diagonal, left.
    const int di[6] = {1, 1, 0, -1, -1, 0};
    const int dj[6] = {0, 1, 1, 0, -1, -1};

    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int dir = 0; dir < 6; ++dir)
                if (inside(i + di[dir], j + dj[dir]))
                    rot[id(i, j)].push_back(id(i + di[dir], j + dj[dir]));

    return PlaneGraph::build(n, std::move(rot), Dart{id(0, 1), id(0, 0)});
}

PlaneGraph gk_family(int k) {
    require(k >= 3, ErrorCode::InvalidInput, "family parameter must be at least 3");
    int m = k * (2 * k - 3);  // fan size
    int n = k + (k - 1) * m;
    auto fan_vertex = [&](int i, int j) {
        // Fan i sits between anchors i-2 and i-1 (0-based anchor ids);
        // fans are numbered i in [2, k], pages j in [1, m].
        return k + (i - 2) * m + (j - 1);
    };

    std::vector<std::vector<int>> rot(n);
    // Anchors v_1..v_k are ids 0..k-1 along a horizontal path; fan i is a
    // stack of pages nested above the segment (v_{i-1}, v_i).  Clockwise at
    // an anchor: previous anchor, left fan pages bottom-up, right fan pages
    // top-down, next anchor.
    for (int a = 0; a < k; ++a) {
        if (a > 0) rot[a].push_back(a - 1);
        if (a >= 1) {
            int fan = a + 1;  // fan between v_a and v_{a+1} in 1-based terms
            for (int j = 1; j <= m; ++j) rot[a].push_back(fan_vertex(fan, j));
        }
        if (a + 1 < k) {
            int fan = a + 2;
            for (int j = m; j >= 1; --j) rot[a].push_back(fan_vertex(fan, j));
        }
        if (a + 1 < k) rot[a].push_back(a + 1);
    }
    for (int i = 2; i <= k; ++i) {
        for (int j = 1; j <= m; ++j) {
            int p = fan_vertex(i, j);
            if (j < m) rot[p].push_back(fan_vertex(i, j + 1));
            rot[p].push_back(i - 1);  // right anchor v_i
            if (j > 1) rot[p].push_back(fan_vertex(i, j - 1));
            rot[p].push_back(i - 2);  // left anchor v_{i-1}
        }
    }
    return PlaneGraph::build(n, std::move(rot), Dart{1, 0});
}

PlaneGraph triangle_free_family(int k) {
    require(k >= 2, ErrorCode::InvalidInput, "family parameter must be at least 2");
    int s = 2 * k - 3;
    int n = k + k * s + 1;
    int hub = n - 1;
    auto pendant = [&](int i, int j) { return k + i * s + j; };  // i, j 0-based

    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < k; ++i) {
        if (i > 0) rot[i].push_back(i - 1);
        for (int j = 0; j < s; ++j) rot[i].push_back(pendant(i, j));
        if (i + 1 < k) rot[i].push_back(i + 1);
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < s; ++j) rot[pendant(i, j)] = {i, hub};
    // Hub sits above everything; clockwise it sees pendants right to left.
    for (int i = k - 1; i >= 0; --i)
        for (int j = s - 1; j >= 0; --j) rot[hub].push_back(pendant(i, j));

    return PlaneGraph::build(n, std::move(rot), Dart{1, 0});
}

PlaneGraph random_near_triangulation(int n, std::uint64_t seed) {
    require(n >= 3, ErrorCode::InvalidInput, "need at least 3 vertices");
    SplitMix64 rng(seed);
    PlaneGraph g = PlaneGraph::build(
        3, {{2, 1}, {0, 2}, {1, 0}}, Dart{1, 0});
    while (g.vertex_count() < n) {
        std::vector<int> bounded;
        for (int f = 0; f < g.faces().count(); ++f)
            if (f != g.faces().outer) bounded.push_back(f);
        int f = bounded[rng.below(bounded.size())];
        std::vector<int> corners;
        for (const Dart& d : g.faces().walks[f]) corners.push_back(d.first);
        g = add_apex_in_face(g, f, corners);
    }
    return g;
}

PlaneGraph random_plane_graph(int n, std::uint64_t seed, double deletion_rate) {
    require(deletion_rate >= 0.0 && deletion_rate < 1.0, ErrorCode::InvalidInput,
            "deletion rate must be in [0, 1)");
    PlaneGraph g = random_near_triangulation(n, seed);
    SplitMix64 rng(seed ^ 0x5851f42d4c957f2dULL);
    int target = static_cast<int>(deletion_rate * g.edge_count());
    for (int step = 0; step < target; ++step) {
        // Candidates: edges off the outer face whose two sides are distinct
        // faces (an edge is a bridge exactly when both darts lie on the same
        // walk, and deleting a non-bridge keeps the graph connected).
        std::vector<Dart> candidates;
        for (int u = 0; u < g.vertex_count(); ++u) {
            std::vector<int> nbrs = g.neighbors(u);
            std::sort(nbrs.begin(), nbrs.end());
            for (int v : nbrs) {
                if (u > v) continue;
                int fl = g.face_left_of({u, v});
                int fr = g.face_left_of({v, u});
                if (fl == fr) continue;
                if (fl == g.faces().outer || fr == g.faces().outer) continue;
                candidates.push_back({u, v});
            }
        }
        if (candidates.empty()) break;
        auto [u, v] = candidates[rng.below(candidates.size())];
        std::vector<std::vector<int>> rot = g.rotations();
        rot[u].erase(std::find(rot[u].begin(), rot[u].end(), v));
        rot[v].erase(std::find(rot[v].begin(), rot[v].end(), u));
        g = PlaneGraph::build(g.vertex_count(), std::move(rot), g.outer_dart());
    }
    return g;
}

}  // namespace generators
}  // namespace clustercolor
