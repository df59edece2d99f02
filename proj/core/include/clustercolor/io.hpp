#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clustercolor/plane_graph.hpp"
#include "clustercolor/verify.hpp"

namespace clustercolor {
namespace io {

/// An unvalidated rotation system as read from disk; may be disconnected.
struct RawGraph {
    int n = 0;
    std::vector<std::vector<int>> rotations;
    std::optional<Dart> outer;
};

// Graph files: {"n": int, "rotations": [[int, ...], ...], "outer": [u, v]}
// with clockwise rotations and the outer face on the left of u -> v
// ("outer" is null for an edgeless graph).  Coloring files:
// {"colors": [int, ...]} with entries in {1, 2, 3}.

RawGraph read_graph_file(const std::string& path);
std::string graph_to_json(const RawGraph& graph);
std::string graph_to_json(const PlaneGraph& graph);
void write_graph_file(const std::string& path, const PlaneGraph& graph);

Coloring read_coloring_file(const std::string& path, int expected_n);
std::string coloring_to_json(const Coloring& coloring);
void write_coloring_file(const std::string& path, const Coloring& coloring);

/// Verification report: one entry per check plus the component census.
std::string report_to_json(const std::vector<PropertyReport>& reports,
                           const std::vector<ComponentReport>& censuses,
                           bool pass);
void write_text_file(const std::string& path, const std::string& text);

/// Graphviz export; vertices are filled by color class when a coloring is
/// supplied.
std::string to_dot(const RawGraph& graph, const Coloring* coloring);
std::string to_dot(const PlaneGraph& graph, const Coloring* coloring);

}  // namespace io
}  // namespace clustercolor
