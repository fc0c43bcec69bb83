#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nck3 {

/// An element of GF(p^k), encoded by the base-p digits of its coordinates in
/// the polynomial basis 1, x, ..., x^(k-1): index = sum a_i p^i.
struct FieldElement {
    std::uint32_t index = 0;
    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// GF(p^k) with p^k <= 2^16, backed by exponential/logarithm tables.
///
/// Immutable after construction; concurrent reads are safe.
class FieldSpec {
public:
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t k() const noexcept { return k_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic irreducible modulus, ascending coefficients, size k + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// Smallest-index generator of the multiplicative group.
    FieldElement generator() const noexcept { return {generator_}; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }
    /// Image of an integer under Z -> GF(p) -> GF(p^k).
    FieldElement from_int(long long c) const noexcept;

    FieldElement add(FieldElement a, FieldElement b) const noexcept;
    FieldElement sub(FieldElement a, FieldElement b) const noexcept;
    FieldElement neg(FieldElement a) const noexcept;
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        if (a.index == 0 || b.index == 0) return {0};
        return {exp_[log_[a.index] + log_[b.index]]};
    }
    /// Multiplicative inverse; a must be nonzero.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;
    std::uint64_t multiplicative_order(FieldElement a) const;

    /// Discrete logarithm to the generator base; -1 for zero.
    std::int32_t log(FieldElement a) const noexcept { return log_[a.index]; }
    FieldElement exp(std::uint32_t e) const noexcept { return {exp_[e % (q_ - 1)]}; }

    /// Human-readable element, e.g. "x^2+x+1" (p = 2) or "2x+1".
    std::string format(FieldElement a) const;
    std::string format_modulus() const;

    friend FieldSpec make_field(std::uint32_t p, std::uint32_t k);
    friend FieldSpec make_field(std::uint32_t p, std::span<const std::uint32_t> modulus);

private:
    FieldSpec() = default;
    void build_tables();

    std::uint32_t p_ = 2;
    std::uint32_t k_ = 1;
    std::uint32_t q_ = 2;
    std::uint32_t generator_ = 1;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
    std::vector<std::int32_t> log_;
};

/// GF(p^k) under the default modulus: the lexicographically smallest monic
/// irreducible of degree k over GF(p), comparing coefficients from x^(k-1)
/// down to the constant term. Throws UnsupportedField.
FieldSpec make_field(std::uint32_t p, std::uint32_t k);
/// GF(p^k) under an explicit monic irreducible modulus (ascending coefficients).
FieldSpec make_field(std::uint32_t p, std::span<const std::uint32_t> modulus);

/// The default modulus for (p, k), without building the field.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

/// Image of x under the fixed embedding GF(p^a) -> GF(p^b), a | b, which sends
/// the class of x in the small field to the smallest-index root of the small
/// field's modulus in the big field.
FieldElement embed(const FieldSpec& small, const FieldSpec& big, FieldElement x);

}  // namespace nck3
