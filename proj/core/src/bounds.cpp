#include "clustercolor/bounds.hpp"

namespace clustercolor {
namespace bounds {

BigCount power(const BigCount& base, std::uint64_t exponent) {
    BigCount result = 1;
    BigCount b = base;
    while (exponent > 0) {
        if (exponent & 1) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

BigCount power_by_repeated_multiply(const BigCount& base, std::uint64_t exponent) {
    BigCount result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

BigCount f1(std::uint64_t d) { return BigCount(2 * d + 5); }

BigCount f2(std::uint64_t d, std::uint64_t big_delta) {
    return BigCount(d) * power(BigCount(6 * big_delta), 3 * d + 2);
}

std::pair<BigCount, BigCount> barred_bounds(std::uint64_t big_delta) {
    BigCount prefix = 16 * BigCount(big_delta) * big_delta * f1(big_delta);
    std::uint64_t inner = big_delta * (2 * big_delta + 5);
    return {prefix, prefix * f2(big_delta, inner)};
}

std::pair<BigCount, BigCount> recursive_barred_bounds(std::uint64_t big_delta) {
    BigCount prefix = 16 * BigCount(big_delta) * big_delta * f1(big_delta);
    BigCount stable_degree = BigCount(big_delta) * prefix;
    BigCount base = 6 * stable_degree;
    return {prefix,
            prefix * BigCount(big_delta) * power(base, 3 * big_delta + 2)};
}

BigCount final_bound(std::uint64_t big_delta) {
    return power(BigCount(15 * big_delta), 32 * big_delta + 8);
}

BigCount recolor_bound(std::uint64_t l, std::uint64_t big_delta, const BigCount& k) {
    return BigCount(l) * big_delta * k + l;
}

BigCount recolor_bound_doubled(std::uint64_t l, std::uint64_t big_delta,
                               const BigCount& k) {
    return 2 * BigCount(l) * big_delta * k;
}

}  // namespace bounds
}  // namespace clustercolor
