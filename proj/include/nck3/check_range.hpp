#pragma once

#include "nck3/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace nck3 {

/// Extension degrees that must be inspected so that nonnegativity and growth
/// of a count sequence are decided for every n.
struct CheckRange {
    int nonneg_max = 0;                            // check n = 1..nonneg_max
    std::vector<std::pair<int, int>> growth_pairs;  // (n, m) with n | m, m > n
    int max_ext() const;
};

/// Range for counts bounded by lower(q^n) <= c_n <= upper(q^n), given as
/// integer polynomials in x = q^n (ascending coefficients, positive leading term).
CheckRange derive_check_range(std::uint64_t q, const std::vector<long>& lower, const std::vector<long>& upper);

/// K3-surface and K3-category counts 1 + x^2 + x p_n with |p_n| <= 22.
CheckRange k3_count_range(std::uint64_t q);
/// Cubic fourfold counts x^4 + x^3 + (p_n + 1) x^2 + x + 1.
CheckRange cubic_count_range(std::uint64_t q);
/// Hilbert-square counts; every n <= min_ext is also inspected.
CheckRange hilbert_count_range(std::uint64_t q, int min_ext = 8);

}  // namespace nck3
