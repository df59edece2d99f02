#include "clustercolor/triangulate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace clustercolor {

namespace {

// Chords u_a - u_b fanned across a cycle u_1..u_k (1-based, k >= 4):
// for i in [1, ceil(k/2) - 1], the pairs (i, k-i) and (i, k-i+1), skipping
// pairs that are cycle edges.
std::set<std::pair<int, int>> zigzag_chords(int k) {
    std::set<std::pair<int, int>> chords;
    auto cycle_edge = [k](int a, int b) {
        int d = std::abs(a - b);
        return d == 1 || d == k - 1;
    };
    for (int i = 1; i <= (k + 1) / 2 - 1; ++i) {
        for (int b : {k - i, k - i + 1}) {
            if (b > k) continue;
            int lo = std::min(i, b), hi = std::max(i, b);
            if (lo == hi || cycle_edge(lo, hi)) continue;
            chords.insert({lo, hi});
        }
    }
    return chords;
}

}  // namespace

Augmentation near_triangulate(const PlaneGraph& g) {
    const FaceSet& fs = g.faces();

    int next_id = g.vertex_count();
    std::vector<int> added, face_of;
    // Insertions into original rotations, keyed by (vertex, neighbor the
    // inserted block follows).  Each key is a dart and belongs to exactly one
    // face corner, so the blocks never collide.
    std::map<Dart, std::vector<int>> corner_insertions;
    std::vector<std::vector<int>> new_rotations;  // aligned with `added`

    for (int f = 0; f < fs.count(); ++f) {
        if (f == fs.outer) continue;
        int k = static_cast<int>(fs.walks[f].size());
        if (k == 3) continue;  // already a triangle

        // Walk vertices x_1..x_k (1-based); x[0] aliases x_k.
        const auto& walk = fs.walks[f];
        auto x = [&](int i) { return walk[((i - 1) % k + k) % k].first; };
        auto u = [&](int i) { return next_id + ((i - 1) % k + k) % k; };

        auto chords = zigzag_chords(k);
        auto has_chord = [&](int a, int b) {
            return chords.count({std::min(a, b), std::max(a, b)}) > 0;
        };

        // Ring vertex u_i sits by the walk edge x_{i-1} -> x_i.  Clockwise:
        // outward pair, previous ring vertex, chords sweeping backward
        // around the cycle, next ring vertex, outward again.
        for (int i = 1; i <= k; ++i) {
            std::vector<int> rot;
            rot.push_back(x(i - 1));
            rot.push_back(u(i - 1));
            for (int off = 2; off <= k - 2; ++off) {
                int j = ((i - off - 1) % k + k) % k + 1;
                if (has_chord(i, j)) rot.push_back(u(j));
            }
            rot.push_back(u(i + 1));
            rot.push_back(x(i));
            new_rotations.push_back(std::move(rot));
            added.push_back(u(i));
            face_of.push_back(f);
        }

        // Stitch u_i, u_{i+1} into x_i's corner, right after the incoming
        // walk neighbor x_{i-1}.
        for (int i = 1; i <= k; ++i)
            corner_insertions[{x(i), x(i - 1)}] = {u(i), u(i + 1)};

        next_id += k;
    }

    std::vector<std::vector<int>> rot(next_id);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (int nb : g.neighbors(v)) {
            rot[v].push_back(nb);
            auto it = corner_insertions.find({v, nb});
            if (it != corner_insertions.end())
                rot[v].insert(rot[v].end(), it->second.begin(), it->second.end());
        }
    }
    for (std::size_t i = 0; i < added.size(); ++i) rot[added[i]] = new_rotations[i];

    Augmentation aug{PlaneGraph::build(next_id, std::move(rot), g.outer_dart()),
                     std::move(added), std::move(face_of)};

    require(aug.graph.near_triangulated(), ErrorCode::InternalInvariantViolation,
            "augmented graph has a non-triangular bounded face");
    for (int v : aug.added)
        require(aug.graph.degree(v) <= 6, ErrorCode::InternalInvariantViolation,
                "ring vertex exceeds degree 6");
    for (int v = 0; v < g.vertex_count(); ++v)
        require(aug.graph.degree(v) <= 3 * g.degree(v),
                ErrorCode::InternalInvariantViolation,
                "original vertex degree grew past the allowed factor");
    return aug;
}

}  // namespace clustercolor
