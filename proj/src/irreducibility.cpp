#include "nck3/irreducibility.hpp"

#include "nck3/error.hpp"
#include "nck3/weil.hpp"

#include <algorithm>

namespace nck3 {

namespace {

using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t ell) {
    std::uint64_t result = 1, base = a, e = ell - 2;
    while (e) {
        if (e & 1) result = result * base % ell;
        base = base * base % ell;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// a mod f for monic f.
void reduce(ModPoly& a, const ModPoly& f, std::uint32_t ell) {
    const std::size_t n = f.size() - 1;
    while (a.size() > n) {
        const std::uint64_t c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - n;
            for (std::size_t i = 0; i < n; ++i)
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (ell - c) * f[i]) % ell);
        }
        a.pop_back();
    }
    trim(a);
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint32_t ell) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % ell);
    }
    reduce(out, f, ell);
    return out;
}

ModPoly pow_mod(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint32_t ell) {
    ModPoly result{1};
    while (e) {
        if (e & 1) result = mul_mod(result, base, f, ell);
        base = mul_mod(base, base, f, ell);
        e >>= 1;
    }
    return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint32_t ell) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        const std::uint32_t li = inv_mod(b.back(), ell);
        for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % ell);
        reduce(a, b, ell);
        std::swap(a, b);
    }
    return a;
}

std::vector<BigInt> integer_coefficients(const RatPoly& P) {
    BigInt den = 1;
    for (const auto& c : P.coefficients()) den = lcm(den, BigInt(c.get_den()));
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto& c : P.coefficients()) {
        BigInt v = c.get_num() * (den / c.get_den());
        g = gcd(g, v);
        out.push_back(v);
    }
    if (g != 0)
        for (auto& v : out) v /= g;
    if (!out.empty() && out.back() < 0)
        for (auto& v : out) v = -v;
    return out;
}

// Positive divisors of |n| when n factors over primes below the trial bound.
std::optional<std::vector<BigInt>> divisors(BigInt n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::vector<std::pair<BigInt, int>> factors;
    for (unsigned long d = 2; d < 100000 && BigInt(d) * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(BigInt(d), e);
    }
    if (n > 1) {
        if (n >= BigInt(100000) * 100000) return std::nullopt;
        factors.emplace_back(n, 1);
    }
    std::vector<BigInt> out{1};
    for (const auto& [prime, e] : factors) {
        const std::size_t size = out.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= prime;
            for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
        }
        if (out.size() > 20000) return std::nullopt;
    }
    return out;
}

// Rational roots of P found by the rational root theorem.
std::vector<Rational> rational_roots(const RatPoly& P) {
    std::vector<Rational> out;
    if (P.degree() < 1) return out;
    RatPoly cur = P;
    if (cur.coeff(0) == 0) {
        out.emplace_back(0);
        cur = strip_factor(cur, RatPoly{Rational(0), Rational(1)}).second;
    }
    const auto f = integer_coefficients(cur);
    auto nums = divisors(f.front());
    auto dens = divisors(f.back());
    if (!nums || !dens || nums->size() * dens->size() > 200000) return out;
    for (const auto& a : *nums)
        for (const auto& b : *dens)
            for (int sign : {1, -1}) {
                const Rational r = make_rational(sign * a, b);
                if (r.get_den() != b) continue;
                if (cur(r) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            }
    return out;
}

RatPoly proper_factor_check(const RatPoly& Q, const RatPoly& F) {
    if (F.degree() >= 1 && F.degree() < Q.degree() && divides(F, Q)) return normalize_constant(F);
    return {};
}

RatPoly substitute_power(const RatPoly& A, int k) {
    std::vector<Rational> c(static_cast<std::size_t>(A.degree()) * k + 1);
    for (int i = 0; i <= A.degree(); ++i) c[static_cast<std::size_t>(i) * k] = A.coeff(i);
    return RatPoly(std::move(c));
}

// Q(T)Q(-T) = Q2(T^2).
RatPoly graeffe(const RatPoly& Q) {
    std::vector<Rational> neg = Q.coefficients();
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    const RatPoly prod = Q * RatPoly(std::move(neg));
    std::vector<Rational> even;
    for (int i = 0; i <= prod.degree(); i += 2) even.push_back(prod.coeff(i));
    return RatPoly(std::move(even));
}

// Factors visible from rational roots of Q or of its trace polynomial.
RatPoly direct_factor(const RatPoly& Q) {
    for (const auto& r : rational_roots(Q)) {
        const RatPoly f = proper_factor_check(Q, RatPoly{-r, Rational(1)});
        if (!f.is_zero()) return f;
    }
    if (Q.degree() == 2) {
        // A quadratic without rational roots is irreducible.
        return {};
    }
    const int d = Q.degree();
    if (d % 2 == 0 && is_self_inversive(Q, d) == 1) {
        // Factors 1 - rT + T^2 from rational roots of the trace polynomial.
        const int m = d / 2;
        const RatPoly x{Rational(0), Rational(1)};
        RatPoly prev = RatPoly::constant(2), cur = x, S = RatPoly::constant(Q.coeff(m));
        for (int j = 1; j <= m; ++j) {
            S += cur * Q.coeff(m + j);
            RatPoly next = x * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        for (const auto& r : rational_roots(S)) {
            const RatPoly f = proper_factor_check(Q, RatPoly{Rational(1), -r, Rational(1)});
            if (!f.is_zero()) return f;
        }
    }
    return {};
}

RatPoly find_factor(const RatPoly& Q) {
    if (RatPoly f = direct_factor(Q); !f.is_zero()) return f;
    RatPoly G = Q;
    for (int k = 1; k <= 3; ++k) {
        G = graeffe(G);
        std::vector<RatPoly> candidates;
        for (const auto& part : squarefree_decomposition(G)) {
            if (part.degree() < 1) continue;
            candidates.push_back(part);
            if (RatPoly f = direct_factor(part); !f.is_zero()) candidates.push_back(f);
        }
        for (const auto& A : candidates) {
            const RatPoly f = proper_factor_check(Q, gcd(Q, substitute_power(A, 1 << k)));
            if (!f.is_zero()) return f;
        }
    }
    return {};
}

}  // namespace

std::vector<std::uint32_t> auxiliary_primes(std::uint32_t exclude, std::size_t count) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 2; out.size() < count; ++n)
        if (n != exclude && is_prime(n)) out.push_back(n);
    return out;
}

std::vector<BigInt> primitive_integer_form(const RatPoly& P) { return integer_coefficients(P); }

std::optional<bool> irreducible_mod(const std::vector<BigInt>& f, std::uint32_t ell) {
    if (f.size() < 2) throw MalformedPolynomial("irreducibility test needs a nonconstant polynomial");
    BigInt lead = f.back() % ell;
    if (lead == 0) return std::nullopt;
    ModPoly g;
    for (const auto& c : f) {
        BigInt r = c % ell;
        if (r < 0) r += ell;
        g.push_back(static_cast<std::uint32_t>(r.get_ui()));
    }
    const std::uint32_t li = inv_mod(g.back(), ell);
    for (auto& c : g) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * li % ell);
    const std::size_t n = g.size() - 1;
    if (n == 1) return true;
    const ModPoly x{0, 1};
    ModPoly h = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
        h = pow_mod(h, ell, g, ell);
        ModPoly diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + ell - 1) % ell;
        trim(diff);
        if (gcd_mod(g, diff, ell).size() > 1) return false;
    }
    return true;
}

IrreducibilityCertificate certify_irreducible(const RatPoly& Q, std::uint32_t p) {
    IrreducibilityCertificate cert;
    if (Q.degree() < 1) throw MalformedPolynomial("irreducibility is undefined for constants");
    if (Q.degree() == 1) {
        cert.verdict = Verdict::Pass;
        cert.witness = "linear";
        return cert;
    }
    const auto f = integer_coefficients(Q);
    for (std::uint32_t ell : auxiliary_primes(p)) {
        if (irreducible_mod(f, ell).value_or(false)) {
            cert.verdict = Verdict::Pass;
            cert.witness = "mod=" + std::to_string(ell);
            return cert;
        }
    }
    const RatPoly factor = find_factor(Q);
    if (!factor.is_zero()) {
        cert.verdict = Verdict::Fail;
        cert.witness = "factor_deg=" + std::to_string(factor.degree());
        cert.factor = factor;
        return cert;
    }
    cert.witness = "uncertified";
    return cert;
}

}  // namespace nck3
