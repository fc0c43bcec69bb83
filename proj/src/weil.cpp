#include "nck3/weil.hpp"

#include "nck3/error.hpp"
#include "nck3/irreducibility.hpp"

#include <algorithm>

namespace nck3 {

std::optional<std::uint32_t> prime_of_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    std::uint64_t r = q;
    while (r % p == 0) r /= p;
    if (r != 1 || p > 0xffffffffu) return std::nullopt;
    return static_cast<std::uint32_t>(p);
}

WeilPolynomial make_weil(std::uint64_t q, RatPoly L) {
    auto p = prime_of_power(q);
    if (!p) throw UnsupportedField("q = " + std::to_string(q) + " is not a prime power");
    if (L.degree() != kWeilDegree)
        throw MalformedPolynomial("Weil polynomial must have degree 22, got " + std::to_string(L.degree()));
    if (L.coeff(0) != 1) throw MalformedPolynomial("Weil polynomial must have constant term 1, got " + to_string(L.coeff(0)));
    return {q, *p, std::move(L)};
}

std::optional<int> is_self_inversive(const RatPoly& p, int degree) {
    if (p.is_zero() || p.degree() > degree) return std::nullopt;
    for (int sign : {1, -1}) {
        bool ok = true;
        for (int i = 0; i <= degree && ok; ++i) ok = p.coeff(degree - i) == sign * p.coeff(i);
        if (ok) return sign;
    }
    return std::nullopt;
}

std::optional<int> is_self_inversive(const WeilPolynomial& w) { return is_self_inversive(w.L, kWeilDegree); }

namespace {

// S with R(T) = T^m S(T + 1/T) for palindromic R of degree 2m.
RatPoly trace_polynomial(const RatPoly& R) {
    const int m = R.degree() / 2;
    const RatPoly x{Rational(0), Rational(1)};
    RatPoly prev = RatPoly::constant(2);
    RatPoly cur = x;
    RatPoly S = RatPoly::constant(R.coeff(m));
    for (int j = 1; j <= m; ++j) {
        S += cur * R.coeff(m + j);
        RatPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return S;
}

}  // namespace

bool roots_on_unit_circle(const RatPoly& p) {
    if (p.is_zero() || p.coeff(0) == 0) return false;
    RatPoly R = strip_factor(p, cyclotomic(1)).second;
    R = strip_factor(R, cyclotomic(2)).second;
    if (R.degree() == 0) return true;
    if (R.degree() % 2 != 0) return false;
    if (is_self_inversive(R, R.degree()) != 1) return false;
    const int m = R.degree() / 2;
    const RatPoly S = trace_polynomial(R);
    int real_in_range = 0;
    const auto parts = squarefree_decomposition(S);
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].degree() >= 1) real_in_range += static_cast<int>(i + 1) * real_roots_in_interval(parts[i], -2, 2);
    return real_in_range == m;
}

bool roots_on_unit_circle(const WeilPolynomial& w) { return roots_on_unit_circle(w.L); }

PointCountTable CountSeries::to_table() const {
    PointCountTable t;
    t.q = q;
    for (const auto& [n, c] : counts) {
        if (!is_integer(c)) throw ConsistencyError("count at n = " + std::to_string(n) + " is not an integer: " + to_string(c));
        t.counts[n] = c.get_num();
    }
    return t;
}

std::vector<Rational> log_inverse_counts(const RatPoly& denominator, int n_max) {
    if (denominator.coeff(0) != 1) throw MalformedPolynomial("zeta denominator must have constant term 1");
    // E = D'/D as a power series; n*a_n = -E_{n-1}.
    const RatPoly dD = derivative(denominator);
    std::vector<Rational> E(static_cast<std::size_t>(std::max(n_max, 0)));
    std::vector<Rational> out(E.size());
    for (int k = 0; k < n_max; ++k) {
        Rational e = dD.coeff(k);
        for (int j = 1; j <= k && j <= denominator.degree(); ++j) e -= denominator.coeff(j) * E[k - j];
        E[k] = e;
        out[k] = -e;
    }
    return out;
}

CountSeries counts_from_weil(const WeilPolynomial& w, int n_max) {
    if (n_max < 1) throw InsufficientData("counts_from_weil needs n_max >= 1");
    const auto ps = power_sums(w.L, static_cast<std::size_t>(n_max));
    CountSeries out;
    out.q = w.q;
    const Rational q(static_cast<unsigned long>(w.q));
    const RatPoly D = RatPoly::linear_factor(1) * scale_argument(w.L, q) * RatPoly::linear_factor(q * q);
    const auto log_counts = log_inverse_counts(D, n_max);
    for (int n = 1; n <= n_max; ++n) {
        const BigInt qn = ipow(w.q, n);
        Rational c = 1 + Rational(qn * qn) + Rational(qn) * ps[n - 1];
        if (c != log_counts[n - 1])
            throw ConsistencyError("zeta log-expansion disagrees with the power-sum count at n = " + std::to_string(n));
        if (!is_integer(c)) out.integral = false;
        out.counts[n] = c;
    }
    return out;
}

Reconstruction weil_from_counts(const PointCountTable& counts) {
    constexpr int kHalf = kWeilDegree / 2;
    for (int n = 1; n <= kHalf; ++n)
        if (!counts.has(n)) throw InsufficientData("reconstruction needs counts for n = 1..11; missing n = " + std::to_string(n));
    const auto p = prime_of_power(counts.q);
    if (!p) throw UnsupportedField("q = " + std::to_string(counts.q) + " is not a prime power");
    std::vector<Rational> ps;
    for (int n = 1; n <= kHalf; ++n) {
        const BigInt qn = ipow(counts.q, n);
        Rational pn = make_rational(counts.at(n) - 1 - qn * qn, qn);
        if (abs(pn) > kWeilDegree)
            throw InfeasibleCounts("power sum p_" + std::to_string(n) + " = " + to_string(pn) + " exceeds 22 in absolute value");
        ps.push_back(pn);
    }
    const RatPoly half = poly_from_power_sums(ps, kHalf);
    Reconstruction out;
    std::vector<std::string> rejected;
    for (int sign : {1, -1}) {
        std::vector<Rational> c(kWeilDegree + 1);
        for (int i = 0; i <= kHalf; ++i) c[i] = half.coeff(i);
        if (sign == -1 && c[kHalf] != 0) {
            rejected.push_back("sign -1 closure needs c_11 = 0");
            continue;
        }
        for (int i = 0; i < kHalf; ++i) c[kWeilDegree - i] = sign * c[i];
        WeilPolynomial w{counts.q, *p, RatPoly(std::move(c))};
        if (!roots_on_unit_circle(w)) {
            rejected.push_back("sign " + std::string(sign > 0 ? "+1" : "-1") + " closure has roots off the unit circle");
            continue;
        }
        out.candidates.push_back(std::move(w));
    }
    if (out.candidates.size() == 2 && counts.has(kHalf + 1)) {
        std::vector<WeilPolynomial> kept;
        for (auto& w : out.candidates)
            if (counts_from_weil(w, kHalf + 1).counts.at(kHalf + 1) == Rational(counts.at(kHalf + 1))) kept.push_back(w);
        out.candidates = std::move(kept);
        if (out.candidates.empty()) rejected.push_back("neither closure matches the count at n = 12");
    }
    out.ambiguous = out.candidates.size() > 1;
    for (const auto& r : rejected) out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + r;
    if (out.ambiguous) out.diagnostic += (out.diagnostic.empty() ? "" : "; ") + std::string("both sign closures pass");
    return out;
}

CyclotomicSplit cyclotomic_split(const RatPoly& L) {
    CyclotomicSplit s;
    s.L_alg = RatPoly::constant(1);
    RatPoly rest = L;
    for (unsigned n : cyclotomic_indices(kWeilDegree)) {
        if (rest.degree() < static_cast<int>(euler_phi(n))) continue;
        const RatPoly c = cyclotomic(n);
        auto [m, quotient] = strip_factor(rest, c);
        if (m == 0) continue;
        rest = std::move(quotient);
        s.L_alg *= pow(c, m);
        s.factors.push_back({n, m});
        if (n == 1) s.rho = static_cast<int>(m);
    }
    // Keep L_trc(0) = 1 and absorb the sign into L_alg.
    const Rational c0 = rest.coeff(0);
    s.L_trc = rest * (1 / c0);
    s.L_alg *= c0;
    s.rho_bar = s.L_alg.degree();
    return s;
}

Rational NewtonPolygon::at(int x) const {
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        const auto& [x0, y0] = vertices[i - 1];
        const auto& [x1, y1] = vertices[i];
        if (x <= x1) return y0 + (y1 - y0) * make_rational(x - x0, x1 - x0);
    }
    return vertices.empty() ? Rational(0) : vertices.back().second;
}

NewtonPolygon newton_polygon(const RatPoly& P, unsigned p, unsigned scale) {
    if (P.is_zero() || P.coeff(0) == 0) throw MalformedPolynomial("Newton polygon needs a nonzero constant term");
    std::vector<std::pair<int, Rational>> pts;
    for (int i = 0; i <= P.degree(); ++i) {
        const auto v = padic_valuation(P.coeff(i), p);
        if (v) pts.emplace_back(i, make_rational(*v, static_cast<unsigned long>(scale)));
    }
    NewtonPolygon poly;
    using Point = std::pair<int, Rational>;
    auto cross = [](const Point& o, const Point& a, const Point& b) -> Rational {
        return (a.second - o.second) * (b.first - o.first) - (b.second - o.second) * (a.first - o.first);
    };
    for (const auto& pt : pts) {
        while (poly.vertices.size() >= 2 && cross(poly.vertices[poly.vertices.size() - 2], poly.vertices.back(), pt) >= 0)
            poly.vertices.pop_back();
        poly.vertices.push_back(pt);
    }
    for (std::size_t i = 1; i < poly.vertices.size(); ++i) {
        const auto& [x0, y0] = poly.vertices[i - 1];
        const auto& [x1, y1] = poly.vertices[i];
        const Rational slope = (y1 - y0) / (x1 - x0);
        for (int k = x0; k < x1; ++k) poly.slopes.push_back(slope);
    }
    return poly;
}

NewtonPolygon hodge_polygon(int m) {
    NewtonPolygon h;
    if (m == 0) {
        h.vertices = {{0, Rational(0)}};
        return h;
    }
    h.vertices = {{0, Rational(0)}, {1, Rational(-1)}};
    if (m > 2) h.vertices.emplace_back(m - 1, Rational(-1));
    h.vertices.emplace_back(m, Rational(0));
    h.slopes.push_back(-1);
    for (int i = 0; i < m - 2; ++i) h.slopes.push_back(0);
    h.slopes.push_back(1);
    return h;
}

ConditionResult newton_above_hodge(const CyclotomicSplit& split, unsigned p, unsigned scale) {
    ConditionResult r{"newton-above-hodge", Verdict::Pass, ""};
    const int m = split.L_trc.degree();
    if (m == 0) {
        r.witness = "supersingular";
        return r;
    }
    if (m < 2) throw MalformedPolynomial("transcendental factor of degree 1 violates conjugate pairing");
    const NewtonPolygon newton = newton_polygon(split.L_trc, p, scale);
    const NewtonPolygon hodge = hodge_polygon(m);
    for (int x = 0; x <= m; ++x) {
        if (newton.at(x) < hodge.at(x)) {
            r.verdict = Verdict::Fail;
            r.witness = "x=" + std::to_string(x) + ",newton=" + to_string(newton.at(x)) + ",hodge=" + to_string(hodge.at(x));
            return r;
        }
    }
    return r;
}

HeightInfo height_and_ordinarity(const CyclotomicSplit& split, unsigned p, unsigned scale) {
    HeightInfo h;
    if (split.L_trc.degree() == 0) {
        h.supersingular = true;
        return h;
    }
    const NewtonPolygon newton = newton_polygon(split.L_trc, p, scale);
    h.least_slope = newton.slopes.front();
    if (sgn(h.least_slope) == 0) return h;
    const Rational inv = -1 / h.least_slope;
    if (sgn(h.least_slope) < 0 && is_integer(inv)) {
        h.height = static_cast<int>(inv.get_num().get_si());
    } else {
        h.height_known = false;
    }
    const NewtonPolygon hodge = hodge_polygon(split.L_trc.degree());
    h.ordinary = newton.vertices == hodge.vertices;
    return h;
}

PerfectPower perfect_power_and_irreducibility(const RatPoly& L_trc, unsigned p, unsigned scale) {
    if (L_trc.is_zero()) throw MalformedPolynomial("transcendental factor is zero");
    PerfectPower out;
    if (L_trc.degree() == 0) {
        out.Q = RatPoly::constant(1);
        out.status = out.irreducible = out.negative_part = Verdict::Pass;
        out.witness = "supersingular";
        return out;
    }
    const auto parts = squarefree_decomposition(L_trc);
    int distinct = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() < 1) continue;
        ++distinct;
        out.Q = parts[i];
        out.e = static_cast<unsigned>(i + 1);
    }
    if (distinct != 1) {
        out.status = out.irreducible = Verdict::Fail;
        out.negative_part = Verdict::Unknown;
        out.witness = "not-a-perfect-power:distinct_factors=" + std::to_string(distinct);
        return out;
    }
    const auto cert = certify_irreducible(out.Q, p);
    out.irreducible = cert.verdict;
    std::string qneg;
    const NewtonPolygon newton = newton_polygon(out.Q, p, 1);
    std::vector<Rational> negative;
    for (const auto& s : newton.slopes)
        if (sgn(s) < 0 && (negative.empty() || negative.back() != s)) negative.push_back(s);
    if (negative.empty()) {
        out.negative_part = Verdict::Pass;
        qneg = "empty";
    } else if (negative.size() > 1) {
        out.negative_part = Verdict::Fail;
        qneg = "slopes=" + std::to_string(negative.size());
    } else {
        const Rational s = negative.front();
        const long length = std::count(newton.slopes.begin(), newton.slopes.end(), s);
        const BigInt b = s.get_den();
        out.negative_part = BigInt(length) == b ? Verdict::Pass : Verdict::Unknown;
        qneg = "slope=" + to_string(Rational(s / scale)) + ",len=" + std::to_string(length);
    }
    out.status = combine(out.irreducible, out.negative_part);
    out.witness = "e=" + std::to_string(out.e) + ",deg_Q=" + std::to_string(out.Q.degree()) + "," + cert.witness +
                  ",Q<0:" + qneg;
    return out;
}

RatPoly ks_convert(const WeilPolynomial& w) {
    if (!divides(cyclotomic(1), w.L)) throw ProjectivityViolation("L(T) has no factor 1 - T");
    return exact_div(w.L, cyclotomic(1)) * Rational(static_cast<unsigned long>(w.q));
}

WeilPolynomial ks_inverse(std::uint64_t q, const RatPoly& K) {
    if (K.degree() != kWeilDegree - 1)
        throw MalformedPolynomial("degree-21 form expected, got degree " + std::to_string(K.degree()));
    const Rational qr(static_cast<unsigned long>(q));
    if (K.coeff(0) != qr) throw MalformedPolynomial("degree-21 form must have constant term q = " + std::to_string(q));
    return make_weil(q, K * cyclotomic(1) * (1 / qr));
}

}  // namespace nck3
