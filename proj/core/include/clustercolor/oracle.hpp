#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "clustercolor/plane_graph.hpp"

namespace clustercolor {
namespace oracle {

/// Limits for the exact search; exceeding either yields Unknown, never a
/// wrong answer.
struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

enum class Feasibility { Feasible, Infeasible, Unknown };

struct OracleResult {
    Feasibility status = Feasibility::Unknown;
    Coloring witness;  // empty unless Feasible
    std::uint64_t nodes = 0;
};

struct MinMaxResult {
    Feasibility status = Feasibility::Unknown;
    int value = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
};

/// Is there a coloring with `colors` colors whose monochromatic components
/// all have at most `bound` vertices?  Depth-first search over a fixed
/// vertex order (degree descending, then id) with rollback union-find
/// component tracking; the first vertex's color is pinned to break the color
/// permutation symmetry.  `jobs` > 1 explores disjoint root branches in
/// parallel; the answer, and the witness, stay deterministic.
OracleResult feasible(const std::vector<std::vector<int>>& adjacency, int colors,
                      int bound, const SearchBudget& budget = {}, int jobs = 1);

/// Least b such that feasible(..., b) holds, by upward linear search.
MinMaxResult min_max_component(const std::vector<std::vector<int>>& adjacency,
                               int colors, const SearchBudget& budget = {},
                               int jobs = 1);

}  // namespace oracle
}  // namespace clustercolor
