#include "nck3/error.hpp"
#include "nck3/irreducibility.hpp"
#include "nck3/weil.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <random>

using namespace nck3;
using namespace nck3::testing;

namespace {

const std::string kDataDir = NCK3_TEST_DATA_DIR;

WeilPolynomial f_t() {
    return parse_weil_line("q=2; 1,-1,1,-3/2,1,-3/2,3/2,-1,2,-2,3/2,-2,3/2,-2,2,-1,3/2,-3/2,1,-3/2,1,-1,1");
}

RatPoly quadratic(const Rational& r) { return RatPoly{1, -r, 1}; }

}  // namespace

TEST_CASE("Weil polynomial validation") {
    CHECK_NOTHROW(make_weil(2, pow(cyclotomic(1), 22)));
    CHECK_THROWS_AS(make_weil(6, pow(cyclotomic(1), 22)), UnsupportedField);
    CHECK_THROWS_AS(make_weil(2, pow(cyclotomic(1), 21)), MalformedPolynomial);
    CHECK_THROWS_AS(make_weil(2, 2 * pow(cyclotomic(1), 22)), MalformedPolynomial);
    CHECK(prime_of_power(81) == 3u);
    CHECK(prime_of_power(1024) == 2u);
    CHECK_FALSE(prime_of_power(12).has_value());
    CHECK_FALSE(prime_of_power(1).has_value());
}

TEST_CASE("unit-circle test against products of real quadratics") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        RatPoly P = RatPoly::constant(1);
        bool on_circle = true;
        for (int j = 0; j < 1 + trial % 11; ++j) {
            const Rational r = make_rational(num(rng), den(rng));
            on_circle = on_circle && abs(r) <= 2;
            P *= quadratic(r);
        }
        if (trial % 3 == 0) P *= RatPoly{1, 1} * RatPoly{1, -1};
        CHECK(roots_on_unit_circle(P) == on_circle);
    }
    CHECK(roots_on_unit_circle(pow(quadratic(make_rational(1, 2)), 5)));
    CHECK_FALSE(roots_on_unit_circle(RatPoly{1, -3, 1} * pow(quadratic(1), 10)));
    // Palindromic with all roots off the circle in conjugate quadruples.
    CHECK_FALSE(roots_on_unit_circle(RatPoly{1, 0, 3, 0, 1}));
    CHECK_FALSE(roots_on_unit_circle(RatPoly{1, 0, 0, 0, 4}));
    CHECK(roots_on_unit_circle(f_t()));
}

TEST_CASE("self-inversive sign") {
    CHECK(is_self_inversive(pow(cyclotomic(1), 22), 22) == 1);
    CHECK(is_self_inversive(cyclotomic(1) * cyclotomic(2) * pow(cyclotomic(3), 10), 22) == -1);
    CHECK_FALSE(is_self_inversive(RatPoly{1, 2, 3}, 2).has_value());
    CHECK(is_self_inversive(f_t()) == 1);
}

TEST_CASE("counts of the f(t) polynomial") {
    const CountSeries s = counts_from_weil(f_t(), 12);
    const std::vector<long> expected{7, 13, 85, 273, 1137, 4081, 16289, 64001, 264001, 1052673, 4196353, 16775937};
    for (int n = 1; n <= 12; ++n) CHECK(s.counts.at(n) == expected[n - 1]);
    CHECK(s.integral);
    const auto ps = power_sums(f_t().L, 2);
    CHECK(ps[0] == 1);
    CHECK(ps[1] == -1);
}

TEST_CASE("fractional counts are flagged") {
    const WeilPolynomial w = make_weil(2, pow(quadratic(make_rational(1, 2)), 11));
    const CountSeries s = counts_from_weil(w, 3);
    CHECK(s.counts.at(1) == 1 + 4 + 11);
    const WeilPolynomial odd = make_weil(3, pow(quadratic(make_rational(1, 2)), 11));
    CHECK_FALSE(counts_from_weil(odd, 3).integral);
    CHECK_THROWS_AS(counts_from_weil(odd, 3).to_table(), ConsistencyError);
}

TEST_CASE("reconstruction round-trip on cyclotomic products") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const WeilPolynomial w = make_weil(trial % 2 ? 2 : 3, random_cyclotomic_product(rng));
        const CountSeries s = counts_from_weil(w, 12);
        const Reconstruction r = weil_from_counts(s.to_table());
        CHECK(std::find(r.candidates.begin(), r.candidates.end(), w) != r.candidates.end());
        CHECK(r.ambiguous == (r.candidates.size() == 2));
        for (const auto& c : r.candidates) CHECK(counts_from_weil(c, 12).counts == s.counts);
    }
}

TEST_CASE("reconstruction round-trip on synthetic unit-circle inputs") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const WeilPolynomial w = make_weil(4, mixed_unit_circle(rng));
        const CountSeries s = counts_from_weil(w, 12);
        PointCountTable t;
        t.q = 4;
        bool integral = true;
        for (const auto& [n, c] : s.counts) integral = integral && is_integer(c);
        if (!integral) continue;
        for (const auto& [n, c] : s.counts) t.counts[n] = c.get_num();
        const Reconstruction r = weil_from_counts(t);
        CHECK(std::find(r.candidates.begin(), r.candidates.end(), w) != r.candidates.end());
    }
}

TEST_CASE("reconstruction without the disambiguating count") {
    // Both closures survive when c_11 = 0 and n = 12 is absent.
    const WeilPolynomial w = make_weil(2, pow(cyclotomic(4), 11));
    PointCountTable t = counts_from_weil(w, 11).to_table();
    const Reconstruction r = weil_from_counts(t);
    CHECK(std::find(r.candidates.begin(), r.candidates.end(), w) != r.candidates.end());
    t.counts.erase(11);
    CHECK_THROWS_AS(weil_from_counts(t), InsufficientData);
    PointCountTable huge;
    huge.q = 2;
    for (int n = 1; n <= 11; ++n) huge.counts[n] = ipow(std::uint64_t{2}, 3 * n);
    CHECK_THROWS_AS(weil_from_counts(huge), InfeasibleCounts);
    huge.q = 6;
    CHECK_THROWS_AS(weil_from_counts(huge), UnsupportedField);
}

TEST_CASE("cyclotomic split") {
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const int count = 1 + trial % 10;
        const RatPoly alg = random_cyclotomic_product(rng, 22 - 2 * count);
        const RatPoly trc = synthetic_unit_circle(rng, count);
        const CyclotomicSplit s = cyclotomic_split(alg * trc);
        CHECK(s.L_alg * s.L_trc == alg * trc);
        CHECK(s.rho_bar >= 22 - 2 * count);
        CHECK(s.rho == static_cast<int>(strip_factor(alg * trc, cyclotomic(1)).first));
        for (unsigned n : cyclotomic_indices(22)) CHECK_FALSE(divides(cyclotomic(n), s.L_trc));
    }
    const CyclotomicSplit f = cyclotomic_split(f_t().L);
    CHECK(f.rho == 2);
    CHECK(f.rho_bar == 2);
    CHECK(f.L_trc.degree() == 20);
}

TEST_CASE("Newton polygon and height") {
    const NewtonPolygon np = newton_polygon(RatPoly{1, make_rational(-1, 2), 1}, 2);
    REQUIRE(np.vertices.size() == 3);
    CHECK(np.slopes == std::vector<Rational>{-1, 1});
    CHECK(np.at(1) == -1);

    const NewtonPolygon h = hodge_polygon(20);
    CHECK(h.length() == 20);
    CHECK(h.slopes.front() == -1);
    CHECK(h.slopes.back() == 1);

    const WeilPolynomial f = f_t();
    const CyclotomicSplit s = cyclotomic_split(f.L);
    const NewtonPolygon fp = newton_polygon(s.L_trc, 2);
    CHECK(fp.slopes.front() == make_rational(-1, 3));
    for (std::size_t i = 1; i < fp.slopes.size(); ++i) CHECK(fp.slopes[i - 1] <= fp.slopes[i]);
    for (int x = 0; x <= fp.length(); ++x) CHECK(fp.at(x) >= h.at(x));
    const HeightInfo hi = height_and_ordinarity(s, 2);
    CHECK(hi.height == 3);
    CHECK_FALSE(hi.ordinary);

    const RatPoly ord = pow(cyclotomic(1), 20) * RatPoly{1, make_rational(-1, 2), 1};
    const HeightInfo ho = height_and_ordinarity(cyclotomic_split(ord), 2);
    CHECK(ho.height == 1);
    CHECK(ho.ordinary);

    const HeightInfo ss = height_and_ordinarity(cyclotomic_split(pow(cyclotomic(1), 22)), 2);
    CHECK_FALSE(ss.height.has_value());
    CHECK(ss.supersingular);

    // q = 4: valuations in q-adic units.
    const NewtonPolygon q4 = newton_polygon(RatPoly{1, make_rational(-1, 4), 1}, 2, 2);
    CHECK(q4.slopes == std::vector<Rational>{-1, 1});
    CHECK_THROWS_AS(newton_polygon(RatPoly{0, 1}, 2), MalformedPolynomial);
}

TEST_CASE("perfect powers and irreducibility of the transcendental part") {
    const RatPoly q1 = RatPoly{1, make_rational(-1, 2), 1};
    const PerfectPower pp = perfect_power_and_irreducibility(pow(q1, 3), 2);
    CHECK(pp.e == 3);
    CHECK(pp.Q == q1);

    const PerfectPower split = perfect_power_and_irreducibility(q1 * RatPoly{1, make_rational(3, 2), 1}, 2);
    CHECK(split.e == 1);
    CHECK(split.irreducible == Verdict::Fail);

    const PerfectPower mixed = perfect_power_and_irreducibility(pow(q1, 2) * RatPoly{1, make_rational(3, 2), 1}, 2);
    CHECK(mixed.status == Verdict::Fail);

    const PerfectPower f = perfect_power_and_irreducibility(cyclotomic_split(f_t().L).L_trc, 2);
    CHECK(f.e == 1);
    CHECK(f.irreducible == Verdict::Pass);
    CHECK(f.negative_part == Verdict::Pass);
    CHECK(f.status == Verdict::Pass);
}

TEST_CASE("irreducibility certificates are sound") {
    CHECK(irreducible_mod({1, 0, 1}, 3) == true);
    CHECK(irreducible_mod({1, 0, 1}, 5) == false);
    CHECK_FALSE(irreducible_mod({1, 0, 3}, 3).has_value());
    CHECK(auxiliary_primes(3, 4) == std::vector<std::uint32_t>{2, 5, 7, 11});
    CHECK(primitive_integer_form(RatPoly{make_rational(1, 2), 1, make_rational(3, 2)}) == std::vector<BigInt>{1, 2, 3});

    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        const RatPoly a = synthetic_unit_circle(rng, 1 + trial % 4);
        const RatPoly b = synthetic_unit_circle(rng, 1 + trial % 3);
        const IrreducibilityCertificate c = certify_irreducible(a * b, 2);
        CHECK(c.verdict != Verdict::Pass);
        if (c.verdict == Verdict::Fail) {
            REQUIRE(c.factor.has_value());
            CHECK(c.factor->degree() > 0);
            CHECK(c.factor->degree() < (a * b).degree());
            CHECK(divides(*c.factor, a * b));
        }
    }
    const IrreducibilityCertificate one = certify_irreducible(RatPoly{1, make_rational(-1, 2), 1}, 2);
    CHECK(one.verdict == Verdict::Pass);
    CHECK(one.witness.rfind("mod=", 0) == 0);
    // Even polynomial whose factors only show up after T^2 -> T.
    const IrreducibilityCertificate g = certify_irreducible(RatPoly{1, 0, make_rational(1, 2), 0, 1} * RatPoly{1, 0, make_rational(-3, 2), 0, 1}, 2);
    CHECK(g.verdict == Verdict::Fail);
}

TEST_CASE("KS degree-21 form") {
    const WeilPolynomial f = f_t();
    const RatPoly K = ks_convert(f);
    CHECK(K.degree() == 21);
    CHECK(K.coeff(0) == 2);
    CHECK(to_string(K).rfind("2,0,2,-1,", 0) == 0);
    CHECK(ks_inverse(2, K) == f);
    CHECK(parse_weil_line("q=2; " + to_string(K), true) == f);
    CHECK_THROWS_AS(ks_convert(make_weil(2, pow(cyclotomic(2), 22))), ProjectivityViolation);
    CHECK_THROWS_AS(ks_inverse(2, RatPoly{2, 1}), MalformedPolynomial);

    std::mt19937_64 rng(36);
    for (int trial = 0; trial < 30; ++trial) {
        const WeilPolynomial w = make_weil(3, cyclotomic(1) * random_cyclotomic_product(rng, 21));
        CHECK(ks_inverse(3, ks_convert(w)) == w);
    }
}

TEST_CASE("Weil line parsing") {
    CHECK(format_weil_line(f_t()) == "q=2; 1,-1,1,-3/2,1,-3/2,3/2,-1,2,-2,3/2,-2,3/2,-2,2,-1,3/2,-3/2,1,-3/2,1,-1,1");
    CHECK(parse_weil_line(format_weil_line(f_t()) + "  # trailing comment") == f_t());
    CHECK_THROWS_AS(parse_weil_line("q=2; 1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_weil_line("2; 1,2,3"), ParseError);
    CHECK_THROWS_AS(parse_weil_line("q=2 1,2"), ParseError);
    const auto lines = read_weil_lines("# header\n\n" + format_weil_line(f_t()) + "\nq=2; 1,1\n");
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].poly.has_value());
    CHECK(lines[0].line == 3);
    CHECK_FALSE(lines[1].poly.has_value());
    CHECK(lines[1].error.rfind("line 4:", 0) == 0);
}
