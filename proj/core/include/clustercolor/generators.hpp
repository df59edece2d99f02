#pragma once

#include <cstdint>

#include "clustercolor/plane_graph.hpp"

namespace clustercolor {

/// Deterministic 64-bit stream; identical output on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Bernoulli with probability p (clamped to [0,1]).
    bool chance(double p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

namespace generators {

/// k x k grid with one consistent diagonal per cell; vertex (i,j) has id i*k+j.
PlaneGraph triangular_grid(int k);

/// Path v_1..v_k with, for each i in [2,k], a fan path of k(2k-3) vertices all
/// adjacent to v_{i-1} and v_i.  Maximum degree 2k(2k-3)+2.
PlaneGraph gk_family(int k);

/// Path x_1..x_k, 2k-3 pendant vertices per x_i, and one vertex adjacent to
/// every pendant.  Triangle-free and planar.
PlaneGraph triangle_free_family(int k);

/// Stacked triangulation: start from a triangle, repeatedly insert a vertex
/// into a uniformly chosen bounded face joined to its three corners.
PlaneGraph random_near_triangulation(int n, std::uint64_t seed);

/// random_near_triangulation followed by random deletions of non-bridge,
/// non-outer edges (about deletion_rate * E of them), keeping connectivity.
PlaneGraph random_plane_graph(int n, std::uint64_t seed, double deletion_rate);

}  // namespace generators
}  // namespace clustercolor
