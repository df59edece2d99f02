#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clustercolor/errors.hpp"

namespace clustercolor {

/// A directed edge (u, v).  Each undirected edge yields two darts.
using Dart = std::pair<int, int>;

/// Total or partial color assignment; colors[v] in {1,2,3}, 0 = uncolored.
using Coloring = std::vector<int>;

/// Mapping between vertex ids of a graph and a derived graph.
struct VertexMap {
    std::vector<int> forward;               // old id -> new id, -1 if dropped
    std::vector<std::vector<int>> origin;   // new id -> sorted old ids

    int map(int old_id) const { return forward[old_id]; }
};

/// The faces of an embedded graph as closed dart walks.  Each walk starts at
/// its lexicographically smallest dart and faces are ordered by that dart, so
/// face ids are deterministic.
struct FaceSet {
    std::vector<std::vector<Dart>> walks;
    int outer = -1;

    int count() const { return static_cast<int>(walks.size()); }
    bool is_outer(int face) const { return face == outer; }

    /// Distinct vertices on the walk of `face`, ascending.
    std::vector<int> vertices_of(int face) const;
};

/// Connected simple plane graph given by a rotation system: for every vertex
/// a cyclic list of neighbors in clockwise order, plus a designated dart whose
/// left face is the outer face.  Immutable after construction; all surgery
/// operations return new graphs, each re-validated from scratch (symmetry,
/// simplicity, connectivity, and the genus-0 Euler relation V - E + F = 2).
class PlaneGraph {
public:
    /// Empty placeholder; only assignable.  Valid graphs come from `build`.
    PlaneGraph() = default;

    /// Validates all invariants and traces the face census once.
    /// `outer` may be absent only for the single-vertex graph.
    static PlaneGraph build(int n, std::vector<std::vector<int>> rotations,
                            std::optional<Dart> outer);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(rotations_[v].size()); }
    int max_degree() const { return max_degree_; }

    const std::vector<int>& neighbors(int v) const { return rotations_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    bool has_edge(int u, int v) const;
    std::optional<Dart> outer_dart() const { return outer_; }

    const FaceSet& faces() const { return faces_; }
    int face_left_of(Dart d) const;
    /// Bounded face ids incident to v, ascending.
    std::vector<int> bounded_faces_at(int v) const;
    bool near_triangulated() const;

    /// Position of v in u's rotation; -1 if absent.
    int rotation_index(int u, int v) const;

private:
    void validate_and_trace();

    int n_ = 0;
    int edge_count_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<int>> rotations_;
    std::optional<Dart> outer_;
    FaceSet faces_;
    std::vector<int> dart_offset_;   // prefix sums of degrees
    std::vector<int> face_of_dart_;  // dart slot -> face id

    int dart_slot(int u, int v) const;
};

// ── Construction and queries ────────────────────────────────────────

/// Validating constructor mirroring PlaneGraph::build.
PlaneGraph build_plane_graph(int n, std::vector<std::vector<int>> rotations,
                             std::optional<Dart> outer);

/// The cached face census of G (walks counterclockwise for bounded faces).
const FaceSet& trace_faces(const PlaneGraph& g);

/// O = vertices on the outer face walk; O2 = N(O) \ O.  Both ascending.
std::pair<std::vector<int>, std::vector<int>> boundary_layers(const PlaneGraph& g);

/// Repeatedly strip the outer layer; returns the resulting partition of V.
std::vector<std::vector<int>> peel(const PlaneGraph& g);

// ── Embedding surgery ───────────────────────────────────────────────

/// One (subgraph, map) per connected component of G[keep], ordered by the
/// smallest contained old id.  Rotations are order-preserving restrictions;
/// each component's outer face is the face containing G's outer region.
std::vector<std::pair<PlaneGraph, VertexMap>>
induced_plane_subgraph(const PlaneGraph& g, const std::vector<int>& keep);

/// Contract the connected set X to a single vertex (placed last in the new
/// id space).  Parallel edges are merged, internal edges dropped.
std::pair<PlaneGraph, VertexMap>
contract_connected_set(const PlaneGraph& g, const std::vector<int>& x);

/// Embed a new vertex inside `face`, adjacent to exactly `attach` (which must
/// lie on the face walk in walk order).  Returns the new graph; the new
/// vertex gets id n.
PlaneGraph add_apex_in_face(const PlaneGraph& g, int face,
                            const std::vector<int>& attach);

/// Insert edge u-v inside `face`, splitting it.
PlaneGraph add_edge_in_face(const PlaneGraph& g, int face, int u, int v);

/// Replace edge u-v by the path u-r-v; returns (graph, r).
std::pair<PlaneGraph, int> subdivide_edge(const PlaneGraph& g, int u, int v);

// ── Raw input handling ──────────────────────────────────────────────

/// Split a possibly disconnected rotation system into one PlaneGraph per
/// component.  The component containing `outer` keeps it; other components
/// designate their lexicographically smallest dart.
std::vector<std::pair<PlaneGraph, VertexMap>>
split_plane_components(int n, const std::vector<std::vector<int>>& rotations,
                       std::optional<Dart> outer);

}  // namespace clustercolor
