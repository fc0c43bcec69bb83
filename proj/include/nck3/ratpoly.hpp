#pragma once

#include "nck3/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nck3 {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
///
/// Trailing zeros are always stripped, so the zero polynomial has an empty
/// coefficient list and degree -1.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, std::size_t degree);
    /// 1 - c*T
    static RatPoly linear_factor(const Rational& c);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_one() const;

    /// Coefficient of T^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
    RatPoly operator-() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};

DivMod divmod(const RatPoly& a, const RatPoly& b);
/// a / b, throwing ConsistencyError if b does not divide a.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
bool divides(const RatPoly& d, const RatPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);
RatPoly derivative(const RatPoly& p);
RatPoly pow(const RatPoly& p, unsigned exp);
RatPoly monic(const RatPoly& p);
/// P / P(0); requires P(0) != 0.
RatPoly normalize_constant(const RatPoly& p);
/// P(c*T)
RatPoly scale_argument(const RatPoly& p, const Rational& c);
/// T^d * P(1/T) for d = deg P.
RatPoly reversed(const RatPoly& p);

/// Largest m with F^m | P, together with P / F^m. F must be nonconstant.
std::pair<unsigned, RatPoly> strip_factor(const RatPoly& p, const RatPoly& f);

RatPoly squarefree_part(const RatPoly& p);

/// Yun decomposition: P = c * prod_i factors[i]^(i+1), each factor squarefree,
/// pairwise coprime, with constant term normalized to 1 when it is nonzero
/// and monic otherwise. Entries may be the constant polynomial 1.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

/// Newton identities: [p_1, ..., p_kmax] for the inverse roots of P, P(0) = 1.
std::vector<Rational> power_sums(const RatPoly& p, std::size_t k_max);

/// Inverse Newton identities: the unique P with P(0) = 1 and degree <= deg whose
/// first deg power sums are p[0..deg).
RatPoly poly_from_power_sums(std::span<const Rational> p, std::size_t deg);

/// prod over primitive n-th roots zeta of (1 - zeta*T). C_1 = 1 - T.
RatPoly cyclotomic(unsigned n);
unsigned euler_phi(unsigned n);
/// All n with phi(n) <= max_phi, ascending.
std::vector<unsigned> cyclotomic_indices(unsigned max_phi);

std::vector<RatPoly> sturm_sequence(const RatPoly& squarefree);
/// Number of distinct real roots of P in (a, b]; P nonzero, a < b.
int real_roots_in_interval(const RatPoly& p, const Rational& a, const Rational& b);

/// Comma-separated ascending coefficients, e.g. "1,-3/2,1".
std::string to_string(const RatPoly& p);
RatPoly parse_ratpoly(std::string_view text);

}  // namespace nck3
