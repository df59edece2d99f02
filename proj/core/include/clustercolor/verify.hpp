#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clustercolor/bounds.hpp"
#include "clustercolor/plane_graph.hpp"

namespace clustercolor {

/// Census of one color class: component count, size histogram, maximum size,
/// and the vertex sets of the components attaining the maximum.
struct ColorCensus {
    int component_count = 0;
    std::map<int, int> size_histogram;
    int max_size = 0;
    std::vector<std::vector<int>> max_components;
};

/// Per-color census of monochromatic components.
struct ComponentReport {
    std::map<int, ColorCensus> per_color;  // keys 1..max color used

    int max_size(int color) const {
        auto it = per_color.find(color);
        return it == per_color.end() ? 0 : it->second.max_size;
    }
    int overall_max() const;
};

/// One named check with an optional witness.  `asserted` distinguishes the
/// checks that gate a report from informational rows.
struct PropertyCheck {
    std::string name;
    bool pass = true;
    bool asserted = true;
    std::string bound;  // decimal string, empty when not a size cap
    std::optional<int> witness_vertex;
    std::vector<int> witness_component;
    std::string detail;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (c.asserted && !c.pass) return false;
        return true;
    }
    const PropertyCheck* find(const std::string& name) const;
};

/// Strengthened check requests layered on top of the base properties.
struct LayerCheckOptions {
    bool case2 = false;  // outer-cycle case guarantees (a)-(c)
    bool case3 = false;  // triangulated-skeleton case guarantees (1)-(3)
    int case3_u = -1;
    int case3_v = -1;
    int case3_phi_u = 0;
    int case3_phi_v = 0;
};

// ── Component census ────────────────────────────────────────────────

/// Exact per-color component census of an arbitrary adjacency structure.
ComponentReport component_census(const std::vector<std::vector<int>>& adjacency,
                                 const Coloring& coloring);

/// Same census for a plane graph; requires a total coloring.
ComponentReport monochromatic_components(const PlaneGraph& g, const Coloring& coloring);

// ── Property checks ─────────────────────────────────────────────────

/// Evaluate the inductive 3-coloring guarantees against graph G with degree
/// parameter D >= max degree: no color 3 on the outer layer, no color 1 on
/// the second layer, and the component-size caps.  Size caps are asserted
/// against the recursion-consistent bounds (recursive_barred_bounds) and the
/// tighter printed pair is reported informationally.
PropertyReport check_layer_properties(const PlaneGraph& g, const Coloring& coloring,
                                        int degree_parameter,
                                        const LayerCheckOptions& opts = {});

/// Evaluate the whole-plane-graph guarantees: every component at most
/// final_bound(D), no color 3 on the outer face, and 1-components meeting the
/// outer face contained in it with size at most 6^4 D^3.
PropertyReport check_planar_properties(const PlaneGraph& g, const Coloring& coloring,
                                          int degree_parameter);

struct PathInstance;
struct CycleInstance;

/// Postconditions of the path 2-coloring: stable set and both path endpoints
/// colored 2, 1-paths and 1-components of size at most 2d+1, 2-components at
/// most (3*Delta)^(3d-4).
PropertyReport check_two_coloring_postconditions(const PathInstance& inst,
                                                 const Coloring& coloring);

/// Postconditions of the cycle 2-coloring: stable set colored 2,
/// 1-components at most 2d+5, 2-components at most d*(6*Delta)^(3d+2).
PropertyReport check_two_coloring_postconditions(const CycleInstance& inst,
                                                 const Coloring& coloring);

}  // namespace clustercolor
