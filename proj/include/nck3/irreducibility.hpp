#pragma once

#include "nck3/ratpoly.hpp"
#include "nck3/verdict.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nck3 {

/// The first `count` primes different from `exclude`.
std::vector<std::uint32_t> auxiliary_primes(std::uint32_t exclude, std::size_t count = 25);

/// Primitive integer polynomial proportional to P (positive leading coefficient).
std::vector<BigInt> primitive_integer_form(const RatPoly& P);

/// Ben-Or test over GF(ell) for the reduction of a primitive integer polynomial.
/// Returns nullopt when ell divides the leading coefficient.
std::optional<bool> irreducible_mod(const std::vector<BigInt>& f, std::uint32_t ell);

struct IrreducibilityCertificate {
    Verdict verdict = Verdict::Unknown;
    std::string witness;       // "mod=<ell>" on PASS, "factor_deg=<d>" on FAIL
    std::optional<RatPoly> factor;  // proper factor found on FAIL
};

/// Sound tri-state irreducibility over Q: PASS by irreducibility modulo an
/// auxiliary prime, FAIL only with an explicit proper factor.
IrreducibilityCertificate certify_irreducible(const RatPoly& Q, std::uint32_t p);

}  // namespace nck3
