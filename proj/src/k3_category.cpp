#include "nck3/k3_category.hpp"

#include "nck3/error.hpp"

namespace nck3 {

namespace {

Rational qpow(std::uint64_t q, unsigned long n) { return Rational(ipow(q, n)); }

const Rational& need(const RationalCounts& c, int n, const char* what) {
    auto it = c.find(n);
    if (it == c.end()) throw InsufficientData(std::string("missing ") + what + " count for n = " + std::to_string(n));
    return it->second;
}

RationalCounts to_rational(const std::map<int, BigInt>& counts) {
    RationalCounts out;
    for (const auto& [n, c] : counts) out[n] = Rational(c);
    return out;
}

RationalCounts ack3_rational(std::uint64_t q, const RationalCounts& X) {
    RationalCounts out;
    for (const auto& [n, x] : X) {
        const Rational qn = qpow(q, n);
        out[n] = (x - 1 - qn * qn - qn * qn * qn * qn) / qn;
    }
    return out;
}

ConditionResult compare(const char* name, const char* lhs_name, const RationalCounts& lhs, const char* rhs_name,
                        const RationalCounts& rhs) {
    ConditionResult r{name, Verdict::Pass, ""};
    for (const auto& [n, a] : lhs) {
        const Rational& b = rhs.at(n);
        if (a != b) {
            r.verdict = Verdict::Fail;
            r.witness = "n=" + std::to_string(n) + "," + lhs_name + "=" + to_string(a) + "," + rhs_name + "=" + to_string(b);
            return r;
        }
    }
    if (!lhs.empty()) r.witness = std::string(lhs_name) + "_1=" + to_string(lhs.begin()->second);
    return r;
}

}  // namespace

const BigInt& NcK3Counts::at(int n) const {
    auto it = counts.find(n);
    if (it == counts.end()) throw InsufficientData("no K3-category count for n = " + std::to_string(n));
    return it->second;
}

NcK3Counts ack3_from_cubic(const PointCountTable& X) {
    NcK3Counts A;
    A.q = X.q;
    for (const auto& [n, x] : X.counts) {
        const BigInt qn = ipow(X.q, n);
        const BigInt num = x - 1 - qn * qn - qn * qn * qn * qn;
        if (num % qn != 0)
            throw AxCongruenceViolation("count " + to_string(x) + " at n = " + std::to_string(n) +
                                        " gives a non-integral K3-category count " + to_string(make_rational(num, qn)));
        A.counts[n] = num / qn;
    }
    return A;
}

PointCountTable cubic_from_ack3(const NcK3Counts& A) {
    PointCountTable X;
    X.q = A.q;
    for (const auto& [n, a] : A.counts) {
        const BigInt qn = ipow(A.q, n);
        X.counts[n] = 1 + qn * a + qn * qn + qn * qn * qn * qn;
    }
    return X;
}

RationalCounts cubic_from_ack3(std::uint64_t q, const RationalCounts& A) {
    RationalCounts X;
    for (const auto& [n, a] : A) {
        const Rational qn = qpow(q, n);
        X[n] = 1 + qn * a + qn * qn + qn * qn * qn * qn;
    }
    return X;
}

RationalCounts hilbert_square_counts(const NcK3Counts& A, int n_max) {
    return hilbert_square_counts(A.q, to_rational(A.counts), n_max);
}

RationalCounts hilbert_square_counts(std::uint64_t q, const RationalCounts& A, int n_max) {
    RationalCounts H;
    for (int n = 1; n <= n_max; ++n) {
        const Rational& a = need(A, n, "K3-category");
        const Rational& a2 = need(A, 2 * n, "K3-category");
        H[n] = a * (a - 1) / 2 + (qpow(q, n) + 1) * a + (a2 - a) / 2;
    }
    return H;
}

RationalCounts fano_counts(const PointCountTable& X, int n_max) { return fano_counts(X.q, to_rational(X.counts), n_max); }

RationalCounts fano_counts(std::uint64_t q, const RationalCounts& X, int n_max) {
    RationalCounts F;
    for (int n = 1; n <= n_max; ++n) {
        const Rational& x = need(X, n, "cubic");
        const Rational& x2 = need(X, 2 * n, "cubic");
        const Rational q2n = qpow(q, 2 * n);
        F[n] = (x * x - 2 * (1 + q2n * q2n) * x + x2) / (2 * q2n);
    }
    return F;
}

ConditionResult check_fano_hilbert(const PointCountTable& X, int n_max) {
    return check_fano_hilbert(X.q, to_rational(X.counts), n_max);
}

ConditionResult check_fano_hilbert(std::uint64_t q, const RationalCounts& X, int n_max) {
    const RationalCounts F = fano_counts(q, X, n_max);
    const RationalCounts H = hilbert_square_counts(q, ack3_rational(q, X), n_max);
    return compare("fano-hilbert", "fano", F, "hilbert", H);
}

ConditionResult grothendieck_identity_check(const PointCountTable& X, int n_max) {
    return grothendieck_identity_check(X.q, to_rational(X.counts), n_max);
}

ConditionResult grothendieck_identity_check(std::uint64_t q, const RationalCounts& X, int n_max) {
    const RationalCounts H = hilbert_square_counts(q, ack3_rational(q, X), n_max);
    RationalCounts G;
    for (int n = 1; n <= n_max; ++n) {
        const Rational& x = need(X, n, "cubic");
        const Rational& x2 = need(X, 2 * n, "cubic");
        const Rational qn = qpow(q, n);
        const Rational p3 = 1 + qn + qn * qn + qn * qn * qn;
        const Rational hilb_x = x * (x - 1) / 2 + x * p3 + (x2 - x) / 2;
        const Rational p4 = p3 + qn * qn * qn * qn;
        G[n] = (hilb_x - p4 * x) / (qn * qn);
    }
    return compare("grothendieck-identity", "quotient", G, "hilbert", H);
}

ZetaFunction zeta_assemble(const WeilPolynomial& w, int terms) {
    ZetaFunction z;
    const Rational q(static_cast<unsigned long>(w.q));
    z.numerator = RatPoly::constant(1);
    z.denominator = RatPoly::linear_factor(1) * scale_argument(w.L, q) * RatPoly::linear_factor(q * q);
    if (terms < 1) return z;
    const auto b = log_inverse_counts(z.denominator, terms);
    const CountSeries counts = counts_from_weil(w, terms);
    for (int n = 1; n <= terms; ++n) {
        if (b[n - 1] != counts.counts.at(n))
            throw ConsistencyError("n*a_n differs from the point count at n = " + std::to_string(n));
        z.log_coefficients.push_back(b[n - 1] / n);
    }
    return z;
}

}  // namespace nck3
