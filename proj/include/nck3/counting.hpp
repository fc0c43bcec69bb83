#pragma once

#include "nck3/cubic.hpp"
#include "nck3/field.hpp"
#include "nck3/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace nck3 {

/// Default extension bound: q^n <= 64 (64^6 ~ 6.9e10 affine points).
inline constexpr std::uint64_t kDefaultMaxFieldSize = 64;

struct CountOptions {
    int workers = 0;  // <= 0: default_workers()
    bool allow_large = false;
    std::uint64_t max_field_size = kDefaultMaxFieldSize;
};

/// NCK3_WORKERS when set to a positive integer, else the OpenMP default.
int default_workers();

/// The extension field F_{p^n} used for counting, after enforcing the size cap.
FieldSpec counting_field(const CubicForm& form, int n, const CountOptions& opts = {});

/// Zeros of the form in F^6 (origin included).
///
/// Parallel kernel: the (x1, x2) plane is split across OpenMP threads; each task
/// specializes the form variable by variable and finishes with a root count of
/// the residual cubic in x6. The result does not depend on the worker count.
BigInt count_affine(const CubicForm& form, const FieldSpec& field, int workers = 0);
BigInt count_affine(const CubicForm& form, int n, const CountOptions& opts = {});

/// Serial reference: evaluates the full form at every point of F^6.
/// Kept to cross-check the parallel kernel.
BigInt count_affine_reference(const CubicForm& form, const FieldSpec& field);

/// Affine count restricted to points whose leading coordinates equal `prefix`.
/// Summing over all prefixes of a fixed length reproduces count_affine.
BigInt count_affine_with_prefix(const CubicForm& form, const FieldSpec& field,
                                std::span<const FieldElement> prefix);

/// (affine - 1) / (q - 1), asserting divisibility and the Ax congruence
/// N = 1 (mod q). Throws ConsistencyError when either fails.
BigInt projective_from_affine(const BigInt& affine, std::uint64_t q);

BigInt count_projective(const CubicForm& form, int n, const CountOptions& opts = {});

/// Projective counts over F_{p^n}, n = 1..n_max.
PointCountTable count_table(const CubicForm& form, int n_max, const CountOptions& opts = {});

using Point = std::array<FieldElement, kVariables>;

/// Value of a homogeneous polynomial (given by terms) at a point.
FieldElement evaluate(const FieldSpec& field, std::span<const CubicTerm> terms, const Point& x);

struct SingularPoint {
    int ext;  // the point is listed over F_{p^ext}
    Point coords;
};

/// Projective points over F_{p^n}, n <= n_max, where the form and all six
/// partials vanish. Coordinates are normalized (first nonzero entry = 1).
/// An empty result is necessary, not sufficient, evidence of smoothness.
std::vector<SingularPoint> singular_scan(const CubicForm& form, int n_max,
                                         std::size_t max_points = std::numeric_limits<std::size_t>::max(),
                                         const CountOptions& opts = {});

}  // namespace nck3
