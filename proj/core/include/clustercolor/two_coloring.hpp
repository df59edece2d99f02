#pragma once

#include <array>
#include <map>
#include <vector>

#include "clustercolor/plane_graph.hpp"

namespace clustercolor {

/// A plane graph partitioned into an induced horizontal path P (x first,
/// y last) and a stable set S with a distinguished vertex r of degree 2
/// adjacent to exactly the endpoints of P, the outer face bounded by the
/// chordless cycle on V(P) + r.  Every S-vertex has degree >= 2, degree-2
/// S-vertices have non-adjacent neighbors, and every two consecutive path
/// vertices share a neighbor in S.  `make` validates all of this.
struct PathInstance {
    PlaneGraph graph;
    std::vector<int> path;    // left to right
    std::vector<int> stable;  // ascending, includes root_vertex
    int root_vertex = -1;
    int path_degree = 0;      // max degree over P
    int max_degree = 0;

    static PathInstance make(PlaneGraph graph, std::vector<int> path, int root_vertex);

    int path_position(int v) const;  // -1 when v not on the path

private:
    std::vector<int> path_pos_;
    friend struct FaceTree;
};

/// Rooted tree over the bounded faces of a PathInstance.  Each face carries
/// the triplet (a, s, b), its residual stable set, corners, pivots with
/// their stable anchors, and an isolated flag per pivot.
struct FaceTree {
    struct Node {
        int face = -1;    // face id in graph.faces()
        int parent = -1;  // node index, -1 at the root
        int depth = 0;
        int s = -1;       // shared stable vertex with the parent (r at the root)
        int a = -1, b = -1;
        std::vector<int> stable_set;          // S(f), ascending
        std::vector<int> corners;             // ascending path order
        std::vector<int> pivots;              // ascending path order
        std::map<int, int> psi;               // pivot -> anchor in S(f)
        std::vector<int> isolated_pivots;     // subset of pivots
        std::vector<int> children;            // node indices in traversal order
    };

    int root = -1;
    std::vector<Node> nodes;
    std::vector<int> node_of_face;  // face id -> node index, -1 for outer
};

/// A plane graph partitioned into a chordless cycle C bounding the outer
/// face and a stable set S.  `make` validates the shape.
struct CycleInstance {
    PlaneGraph graph;
    std::vector<int> cycle;   // outer-walk order
    std::vector<int> stable;  // ascending
    int cycle_degree = 0;     // max degree over C
    int max_degree = 0;

    static CycleInstance make(PlaneGraph graph);

    int cycle_position(int v) const;

private:
    std::vector<int> cycle_pos_;
};

/// Record of the surgery that turns a CycleInstance into a PathInstance:
/// pruned stable vertices (degree <= 1, or degree 2 with adjacent
/// neighbors), apexes planted over bare cycle stretches, stitching edges,
/// and the split of the chosen cycle edge.  Carries enough to replay the
/// construction exactly and to reverse it back to the original graph.
struct NormalizationPlan {
    int original_n = 0;
    Dart original_outer{-1, -1};
    std::vector<int> removed;                          // pruned ids, ascending
    std::vector<std::vector<int>> removed_rotations;   // their original rotations
    std::vector<std::vector<int>> removed_positions;   // index of v in each neighbor's rotation
    VertexMap strip_map;                               // original -> stripped ids
    std::vector<std::array<int, 3>> apex_attach;       // stripped-id triples, walk order
    std::vector<Dart> added_edges;                     // stitching edges (s, v)
    int split_x = -1, split_y = -1, split_r = -1;
};

// ── Operations ──────────────────────────────────────────────────────

/// Endpoint-preserving near-proper 2-coloring of a chain with k interior
/// vertices: returns the full color sequence (a, x_1..x_k, b).  With one
/// interior vertex it gets 2 exactly when both endpoints are 1; otherwise
/// the first and last interior vertices oppose their endpoints and the rest
/// alternate.  No three consecutive entries ever agree, and an endpoint of
/// color 2 always meets an interior 1.
std::vector<int> alternate_coloring(int k, int color_a, int color_b);

FaceTree build_face_tree(const PathInstance& inst);

/// 2-coloring of a PathInstance: endpoints and all of S get color 2, every
/// 1-component has at most 2d+1 vertices and every 2-component at most
/// (3*Delta)^(3d-4).
Coloring color_path_instance(const PathInstance& inst);

/// Reduce a CycleInstance to a PathInstance (prune, plant apexes, stitch,
/// split) together with the plan describing the surgery.
std::pair<PathInstance, NormalizationPlan>
normalize_cycle_instance(const CycleInstance& cyc);

/// Re-run a recorded plan against the original instance.
PathInstance replay_normalization(const CycleInstance& cyc,
                                  const NormalizationPlan& plan);

/// Reconstruct the original graph from the normalized one.
PlaneGraph reverse_normalization(const PathInstance& inst,
                                 const NormalizationPlan& plan);

/// 2-coloring of a CycleInstance: all of S gets color 2, 1-components have
/// at most 2d+5 vertices and 2-components at most d*(6*Delta)^(3d+2).
Coloring color_cycle_instance(const CycleInstance& cyc);

}  // namespace clustercolor
