#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>

namespace clustercolor {

/// Exact non-negative integer; component-size caps overflow any fixed width.
using BigCount = boost::multiprecision::cpp_int;

namespace bounds {

/// Square-and-multiply exponentiation.
BigCount power(const BigCount& base, std::uint64_t exponent);

/// Plain repeated multiplication; kept as an independent route for
/// cross-checking `power`.
BigCount power_by_repeated_multiply(const BigCount& base, std::uint64_t exponent);

/// Cap on 1-component size in the cycle 2-coloring: 2d + 5.
BigCount f1(std::uint64_t d);

/// Cap on 2-component size in the cycle 2-coloring: d * (6D)^(3d+2).
BigCount f2(std::uint64_t d, std::uint64_t big_delta);

/// Outer-layer caps for the 3-coloring recursion as printed:
/// (16 D^2 f1(D),  16 D^2 f1(D) f2(D, D f1(D))).
std::pair<BigCount, BigCount> barred_bounds(std::uint64_t big_delta);

/// Same caps with the stable-set degree fed back through the first barred
/// bound, i.e. f2 evaluated at (D, D * barred_f1(D)).  This looser pair is
/// what the recursion actually maintains level to level; the verifier
/// asserts against it and reports the tighter pair above.
std::pair<BigCount, BigCount> recursive_barred_bounds(std::uint64_t big_delta);

/// Whole-graph cap for arbitrary plane inputs: (15D)^(32D+8).
BigCount final_bound(std::uint64_t big_delta);

/// Component growth after recoloring at most l vertices: l*D*k + l.
BigCount recolor_bound(std::uint64_t l, std::uint64_t big_delta, const BigCount& k);

/// Rounded form 2*l*D*k of the same estimate.
BigCount recolor_bound_doubled(std::uint64_t l, std::uint64_t big_delta,
                               const BigCount& k);

}  // namespace bounds
}  // namespace clustercolor
