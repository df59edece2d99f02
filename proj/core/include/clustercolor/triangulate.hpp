#pragma once

#include <vector>

#include "clustercolor/plane_graph.hpp"

namespace clustercolor {

/// Result of near-triangulating a plane graph.  Original vertices keep their
/// ids and the input is a subgraph of `graph`.
struct Augmentation {
    PlaneGraph graph;
    std::vector<int> added;    // new vertex ids, ascending
    std::vector<int> face_of;  // aligned with `added`: source face id in the input
};

/// Make every bounded face a triangle by ringing each non-triangular face
/// with a cycle of new vertices stitched to the walk and fanning chords
/// across the new cycle.  Triangular faces are left untouched.  Every new
/// vertex has degree at most 6 and original degrees at most triple, so the
/// maximum degree of the result is at most max(6, 3 * max_degree(input)).
Augmentation near_triangulate(const PlaneGraph& g);

}  // namespace clustercolor
