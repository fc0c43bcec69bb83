#pragma once

#include "nck3/cubic.hpp"
#include "nck3/rational.hpp"
#include "nck3/verdict.hpp"
#include "nck3/weil.hpp"

#include <cstdint>
#include <map>

namespace nck3 {

/// Point counts |A(F_{q^n})| of the K3 category of a cubic fourfold.
struct NcK3Counts {
    std::uint64_t q = 2;
    std::map<int, BigInt> counts;

    const BigInt& at(int n) const;
    friend bool operator==(const NcK3Counts&, const NcK3Counts&) = default;
};

using RationalCounts = std::map<int, Rational>;

/// A_n = (X_n - 1 - q^{2n} - q^{4n}) / q^n. Throws AxCongruenceViolation when
/// the division is not exact.
NcK3Counts ack3_from_cubic(const PointCountTable& X);

/// X_n = 1 + q^n A_n + q^{2n} + q^{4n}.
PointCountTable cubic_from_ack3(const NcK3Counts& A);
RationalCounts cubic_from_ack3(std::uint64_t q, const RationalCounts& A);

/// H_n = C(A_n, 2) + (q^n + 1) A_n + (A_{2n} - A_n) / 2 for n = 1..n_max.
RationalCounts hilbert_square_counts(const NcK3Counts& A, int n_max);
RationalCounts hilbert_square_counts(std::uint64_t q, const RationalCounts& A, int n_max);

/// F_n = (X_n^2 - 2(1 + q^{4n}) X_n + X_{2n}) / (2 q^{2n}) for n = 1..n_max.
RationalCounts fano_counts(const PointCountTable& X, int n_max);
RationalCounts fano_counts(std::uint64_t q, const RationalCounts& X, int n_max);

/// Fano counts of X against Hilbert-square counts of its K3 category.
ConditionResult check_fano_hilbert(const PointCountTable& X, int n_max);
ConditionResult check_fano_hilbert(std::uint64_t q, const RationalCounts& X, int n_max);

/// (|X^[2]| - |P^4| |X|) / q^{2n} against the Hilbert-square counts of A.
ConditionResult grothendieck_identity_check(const PointCountTable& X, int n_max);
ConditionResult grothendieck_identity_check(std::uint64_t q, const RationalCounts& X, int n_max);

/// Z(T) = numerator / denominator = 1 / ((1 - T) L(qT) (1 - q^2 T)).
struct ZetaFunction {
    RatPoly numerator;
    RatPoly denominator;
    std::vector<Rational> log_coefficients;  // a_1, a_2, ... of log Z
};

/// Expands log Z to `terms` coefficients and checks n*a_n against counts_from_weil.
ZetaFunction zeta_assemble(const WeilPolynomial& w, int terms);

}  // namespace nck3
