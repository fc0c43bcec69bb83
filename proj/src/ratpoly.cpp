#include "nck3/ratpoly.hpp"

#include "nck3/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nck3 {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_factor(const Rational& c) { return RatPoly({Rational(1), Rational(-c)}); }

void RatPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

bool RatPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw MalformedPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) { return *this = *this * rhs; }

RatPoly& RatPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

RatPoly RatPoly::operator-() const {
    RatPoly out = *this;
    for (auto& x : out.coeffs_) x = -x;
    return out;
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw MalformedPolynomial("division by the zero polynomial");
    if (a.degree() < b.degree()) return {RatPoly{}, a};
    std::vector<Rational> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv_lead = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational f = rem[i] * inv_lead;
        if (sgn(f) == 0) continue;
        quo[i - db] = f;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ConsistencyError("exact division left a remainder: (" + to_string(a) + ") / (" + to_string(b) + ")");
    return q;
}

bool divides(const RatPoly& d, const RatPoly& a) { return divmod(a, d).remainder.is_zero(); }

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p * (1 / p.leading());
}

RatPoly normalize_constant(const RatPoly& p) {
    Rational c = p.coeff(0);
    if (sgn(c) == 0) throw MalformedPolynomial("constant term is zero");
    return p * (1 / c);
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

RatPoly derivative(const RatPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) out[i - 1] = p.coefficients()[i] * i;
    return RatPoly(std::move(out));
}

RatPoly pow(const RatPoly& p, unsigned exp) {
    RatPoly result = RatPoly::constant(1);
    RatPoly base = p;
    while (exp > 0) {
        if (exp & 1u) result *= base;
        exp >>= 1u;
        if (exp > 0) base *= base;
    }
    return result;
}

RatPoly scale_argument(const RatPoly& p, const Rational& c) {
    std::vector<Rational> out = p.coefficients();
    Rational f(1);
    for (auto& x : out) {
        x *= f;
        f *= c;
    }
    return RatPoly(std::move(out));
}

RatPoly reversed(const RatPoly& p) {
    std::vector<Rational> out = p.coefficients();
    std::reverse(out.begin(), out.end());
    return RatPoly(std::move(out));
}

std::pair<unsigned, RatPoly> strip_factor(const RatPoly& p, const RatPoly& f) {
    if (f.degree() < 1) throw MalformedPolynomial("strip_factor needs a nonconstant factor");
    unsigned m = 0;
    RatPoly cur = p;
    while (!cur.is_zero()) {
        auto [q, r] = divmod(cur, f);
        if (!r.is_zero()) break;
        cur = std::move(q);
        ++m;
    }
    return {m, cur};
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() < 1) return p;
    return exact_div(p, gcd(p, derivative(p)));
}

namespace {

RatPoly normalize_factor(const RatPoly& f) {
    if (f.degree() < 1) return RatPoly::constant(1);
    return sgn(f.coeff(0)) != 0 ? normalize_constant(f) : monic(f);
}

}  // namespace

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
    std::vector<RatPoly> out;
    if (p.degree() < 1) return out;
    RatPoly dp = derivative(p);
    RatPoly a = gcd(p, dp);
    RatPoly b = exact_div(p, a);
    RatPoly c = exact_div(dp, a);
    RatPoly d = c - derivative(b);
    while (b.degree() >= 1) {
        RatPoly ai = gcd(b, d);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - derivative(b);
        out.push_back(normalize_factor(ai));
    }
    return out;
}

std::vector<Rational> power_sums(const RatPoly& p, std::size_t k_max) {
    if (p.coeff(0) != 1) throw MalformedPolynomial("power_sums requires P(0) = 1, got " + to_string(p.coeff(0)));
    std::vector<Rational> ps(k_max);
    for (std::size_t n = 1; n <= k_max; ++n) {
        Rational s = -Rational(static_cast<long>(n)) * p.coeff(n);
        for (std::size_t i = 1; i < n; ++i) {
            if (static_cast<int>(i) > p.degree()) break;
            s -= p.coeff(i) * ps[n - i - 1];
        }
        ps[n - 1] = s;
    }
    return ps;
}

RatPoly poly_from_power_sums(std::span<const Rational> p, std::size_t deg) {
    if (p.size() < deg) throw InsufficientData("poly_from_power_sums needs at least deg power sums");
    std::vector<Rational> c(deg + 1);
    c[0] = 1;
    for (std::size_t n = 1; n <= deg; ++n) {
        Rational s = p[n - 1];
        for (std::size_t i = 1; i < n; ++i) s += c[i] * p[n - i - 1];
        c[n] = -s / static_cast<long>(n);
    }
    return RatPoly(std::move(c));
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        while (n % d == 0) n /= d;
        result -= result / d;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned> cyclotomic_indices(unsigned max_phi) {
    // phi(n) >= sqrt(n/2), so n <= 2*max_phi^2 bounds the search.
    std::vector<unsigned> out;
    const unsigned bound = std::max(2u, 2 * max_phi * max_phi);
    for (unsigned n = 1; n <= bound; ++n)
        if (euler_phi(n) <= max_phi) out.push_back(n);
    return out;
}

namespace {

// Standard Phi_n (monic), built from T^n - 1 by dividing out Phi_d for proper divisors d.
RatPoly standard_cyclotomic(unsigned n, std::map<unsigned, RatPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    RatPoly acc = RatPoly::monomial(1, n) - RatPoly::constant(1);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) acc = exact_div(acc, standard_cyclotomic(d, memo));
    memo.emplace(n, acc);
    return acc;
}

const std::map<unsigned, RatPoly>& cyclotomic_cache() {
    static const std::map<unsigned, RatPoly> cache = [] {
        std::map<unsigned, RatPoly> memo;
        for (unsigned n : cyclotomic_indices(22)) standard_cyclotomic(n, memo);
        std::map<unsigned, RatPoly> out;
        for (unsigned n : cyclotomic_indices(22)) out.emplace(n, memo.at(n));
        return out;
    }();
    return cache;
}

}  // namespace

RatPoly cyclotomic(unsigned n) {
    if (n == 0) throw MalformedPolynomial("cyclotomic index must be positive");
    if (n == 1) return RatPoly({Rational(1), Rational(-1)});
    const auto& cache = cyclotomic_cache();
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::map<unsigned, RatPoly> memo;
    return standard_cyclotomic(n, memo);
}

std::vector<RatPoly> sturm_sequence(const RatPoly& squarefree) {
    std::vector<RatPoly> seq{squarefree};
    RatPoly next = derivative(squarefree);
    while (!next.is_zero()) {
        seq.push_back(next);
        const auto n = seq.size();
        next = -divmod(seq[n - 2], seq[n - 1]).remainder;
    }
    return seq;
}

namespace {

int sign_variations(const std::vector<RatPoly>& seq, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sgn(p(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int real_roots_in_interval(const RatPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw MalformedPolynomial("real_roots_in_interval of the zero polynomial");
    if (!(a < b)) throw MalformedPolynomial("real_roots_in_interval needs a < b");
    if (p.degree() == 0) return 0;
    auto seq = sturm_sequence(squarefree_part(p));
    return sign_variations(seq, a) - sign_variations(seq, b);
}

std::string to_string(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += ',';
        out += to_string(p.coefficients()[i]);
    }
    return out;
}

RatPoly parse_ratpoly(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(start, end - start);
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\r')) tok.remove_suffix(1);
        if (tok.empty()) throw ParseError("empty coefficient in polynomial '" + std::string(text) + "'");
        coeffs.push_back(parse_rational(tok));
        start = end + 1;
    }
    return RatPoly(std::move(coeffs));
}

}  // namespace nck3
