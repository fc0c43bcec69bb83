#pragma once

#include "nck3/cubic.hpp"
#include "nck3/rational.hpp"
#include "nck3/ratpoly.hpp"
#include "nck3/verdict.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nck3 {

inline constexpr int kWeilDegree = 22;

/// L(T) = det(Id - phi*T) of degree 22 with L(0) = 1 over F_q.
struct WeilPolynomial {
    std::uint64_t q = 2;
    std::uint32_t p = 2;
    RatPoly L;

    friend bool operator==(const WeilPolynomial&, const WeilPolynomial&) = default;
};

/// Validates q (a prime power), deg L = 22 and L(0) = 1.
/// Throws MalformedPolynomial or UnsupportedField.
WeilPolynomial make_weil(std::uint64_t q, RatPoly L);

/// Base prime of a prime power, or nullopt.
std::optional<std::uint32_t> prime_of_power(std::uint64_t q);

/// Sign e with T^d L(1/T) = e L(T), d = 22 for Weil polynomials.
std::optional<int> is_self_inversive(const RatPoly& p, int degree);
std::optional<int> is_self_inversive(const WeilPolynomial& w);

/// Exact test that every complex root of P lies on |z| = 1. P(0) != 0.
bool roots_on_unit_circle(const RatPoly& p);
bool roots_on_unit_circle(const WeilPolynomial& w);

/// Formal counts 1 + q^{2n} + q^n p_n, n = 1..n_max.
struct CountSeries {
    std::uint64_t q = 2;
    std::map<int, Rational> counts;
    bool integral = true;  // false when some count is not an integer

    /// Integer table; throws ConsistencyError if a count is fractional.
    PointCountTable to_table() const;
};

/// Cross-checks every count against n*a_n from the zeta function's logarithm.
CountSeries counts_from_weil(const WeilPolynomial& w, int n_max);

/// Series coefficients b_n = n*a_n of log(1/D(T)), n = 1..n_max, for D(0) = 1.
std::vector<Rational> log_inverse_counts(const RatPoly& denominator, int n_max);

struct Reconstruction {
    std::vector<WeilPolynomial> candidates;  // sign +1 closure first
    bool ambiguous = false;
    std::string diagnostic;
};

/// Recovers L from counts n = 1..11 and the functional equation; a count at
/// n = 12, when present, disambiguates the two sign closures.
Reconstruction weil_from_counts(const PointCountTable& counts);

struct CyclotomicFactor {
    unsigned n;             // index of C_n
    unsigned multiplicity;
};

struct CyclotomicSplit {
    RatPoly L_alg;
    RatPoly L_trc;
    int rho = 0;      // multiplicity of 1 - T
    int rho_bar = 0;  // deg L_alg
    std::vector<CyclotomicFactor> factors;
};

CyclotomicSplit cyclotomic_split(const RatPoly& L);

struct NewtonPolygon {
    std::vector<std::pair<int, Rational>> vertices;
    std::vector<Rational> slopes;  // one entry per unit of length, nondecreasing

    /// Height of the polygon at integer abscissa x in [0, degree].
    Rational at(int x) const;
    int length() const { return vertices.empty() ? 0 : vertices.back().first; }
};

/// Lower convex hull of (i, v_p(c_i)) over nonzero coefficients, valuations
/// divided by `scale` (use log_p q to measure in q-adic units). P(0) != 0.
NewtonPolygon newton_polygon(const RatPoly& P, unsigned p, unsigned scale = 1);

/// Hodge polygon of a transcendental lattice of rank m: slopes -1, 0^(m-2), +1.
NewtonPolygon hodge_polygon(int m);

/// PASS iff the Newton polygon of L_trc lies on or above its Hodge polygon.
/// L_trc = 1 passes as supersingular.
ConditionResult newton_above_hodge(const CyclotomicSplit& split, unsigned p, unsigned scale = 1);

struct HeightInfo {
    std::optional<int> height;  // nullopt: infinite
    bool height_known = true;   // false when the least slope is not -1/h
    bool ordinary = false;
    bool supersingular = false;
    Rational least_slope;
};

HeightInfo height_and_ordinarity(const CyclotomicSplit& split, unsigned p, unsigned scale = 1);

struct PerfectPower {
    RatPoly Q;
    unsigned e = 0;
    Verdict status = Verdict::Unknown;  // Q irreducible and Q_{<0} irreducible
    Verdict irreducible = Verdict::Unknown;
    Verdict negative_part = Verdict::Unknown;
    std::string witness;
};

/// Decomposes L_trc = Q^e and certifies the irreducibility conditions.
PerfectPower perfect_power_and_irreducibility(const RatPoly& L_trc, unsigned p, unsigned scale = 1);

/// q*L(T)/(1 - T), the degree-21 integer form of a census list.
RatPoly ks_convert(const WeilPolynomial& w);
/// Inverse of ks_convert. The input must have degree 21 and constant term q.
WeilPolynomial ks_inverse(std::uint64_t q, const RatPoly& K);

/// "q=<q>; c0,c1,...,c22"; with ks = true the list is the degree-21 form.
WeilPolynomial parse_weil_line(std::string_view line, bool ks = false);
std::string format_weil_line(const WeilPolynomial& w);

struct WeilLine {
    int line = 0;
    std::optional<WeilPolynomial> poly;
    std::string error;  // set when poly is empty
};

/// Non-comment lines of a Weil file, malformed lines kept with their error.
std::vector<WeilLine> read_weil_lines(std::string_view text, bool ks = false);

}  // namespace nck3
