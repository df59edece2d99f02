#pragma once

#include <array>
#include <optional>
#include <vector>

#include "clustercolor/plane_graph.hpp"

namespace clustercolor {

/// Permutation of the three colors; recursive calls return canonical-frame
/// colorings and each caller applies the shift exactly once.
struct ColorFrame {
    std::array<int, 4> perm{0, 1, 2, 3};

    /// The frame used for one level of nesting: 1 -> 2, 2 -> 3, 3 -> 1.
    static ColorFrame shift() { return ColorFrame{{0, 2, 3, 1}}; }

    int operator()(int color) const { return perm[color]; }
    Coloring apply(const Coloring& coloring) const {
        Coloring out(coloring.size());
        for (std::size_t v = 0; v < coloring.size(); ++v) out[v] = perm[coloring[v]];
        return out;
    }
};

enum class CaseKind {
    Base,                  // single vertex
    DegreeOne,             // some vertex of degree 1
    ChordlessCycle,        // outer skeleton is a chordless cycle
    TriangulatedSkeleton,  // all bounded skeleton faces triangular
    Composite,             // anything else
};

struct CaseTag {
    CaseKind kind;
    std::optional<int> degree_one_vertex;
};

/// Rooted tree over the bounded faces of the outerplanar skeleton J.  Faces
/// are adjacent when their shared vertex set (one vertex, or two adjacent
/// vertices) separates their territories in G; attachments and good/bad
/// flags follow.  A face is bad exactly when it is triangular with a
/// two-vertex attachment.
struct OuterTree {
    struct Node {
        int face = -1;                // face id in J's face set
        int parent = -1;              // node index, -1 at the root
        int depth = 0;
        std::vector<int> attachment;  // G-vertex ids, empty at the root
        bool good = true;
        std::vector<int> children;    // node indices, ascending face id
    };
    int root = -1;
    std::vector<Node> nodes;
    std::vector<int> node_of_face;
};

struct ColorOptions {
    /// Re-verify the inductive guarantees after every recursion level (the
    /// top-level caller always verifies regardless).
    bool verify_levels = false;
};

/// First applicable case in fixed order for a connected near-triangulated
/// plane graph.
CaseTag classify_case(const PlaneGraph& g);

/// Build the face tree of the skeleton J (given with its map back to G).
OuterTree build_outer_tree(const PlaneGraph& g, const PlaneGraph& skeleton,
                           const VertexMap& skeleton_map);

/// 3-coloring of a connected near-triangulated plane graph with the
/// canonical-frame guarantees: no 3 on the outer layer, no 1 on the second
/// layer, and degree-parameterized caps on component sizes.
Coloring color_near_triangulated(const PlaneGraph& g, int degree_cap,
                                 const ColorOptions& options = {});

/// The chordless-cycle case, with its strengthened outer-layer guarantees.
Coloring color_case2(const PlaneGraph& g, int degree_cap,
                     const ColorOptions& options = {});

/// The triangulated-skeleton case with a prescribed outer edge u-v and
/// colors for its endpoints (both in {1,2}).
Coloring color_case3(const PlaneGraph& g, int u, int v, int phi_u, int phi_v,
                     int degree_cap, const ColorOptions& options = {});

/// The composite case: split at a deepest good skeleton face.
Coloring color_case4(const PlaneGraph& g, int degree_cap,
                     const ColorOptions& options = {});

/// Whole-graph entry point for any connected plane graph: proper
/// 3-coloring when the maximum degree is at most 2, otherwise
/// near-triangulate, color with degree parameter 3*max_degree, restrict.
Coloring color_planar(const PlaneGraph& g, const ColorOptions& options = {});

}  // namespace clustercolor
