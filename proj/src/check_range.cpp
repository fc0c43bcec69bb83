#include "nck3/check_range.hpp"

#include "nck3/error.hpp"

#include <algorithm>

namespace nck3 {

namespace {

constexpr int kMaxSearch = 64;
constexpr long kTraceBound = 22;

BigInt eval(const std::vector<long>& poly, const BigInt& x) {
    BigInt acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<long> derivative(const std::vector<long>& poly) {
    std::vector<long> out;
    for (std::size_t i = 1; i < poly.size(); ++i) out.push_back(poly[i] * static_cast<long>(i));
    return out;
}

// Every real root of a polynomial lies below this bound.
BigInt cauchy_bound(const std::vector<long>& poly) {
    if (poly.size() < 2) return 0;
    const long lead = poly.back();
    BigInt worst = 0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
        BigInt c = std::abs(poly[i]);
        BigInt ratio = (c + lead - 1) / lead;
        if (ratio > worst) worst = ratio;
    }
    return worst + 1;
}

// P(x) >= 0 at x and P is increasing on [x, inf).
bool settled(const std::vector<long>& poly, const BigInt& x) { return eval(poly, x) >= 0 && x >= cauchy_bound(derivative(poly)); }

std::vector<long> compose_square(const std::vector<long>& poly) {
    std::vector<long> out(2 * poly.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) out[2 * i] = poly[i];
    return out;
}

std::vector<long> subtract(std::vector<long> a, const std::vector<long>& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

}  // namespace

int CheckRange::max_ext() const {
    int m = nonneg_max;
    for (const auto& [a, b] : growth_pairs) m = std::max({m, a, b});
    return m;
}

CheckRange derive_check_range(std::uint64_t q, const std::vector<long>& lower, const std::vector<long>& upper) {
    if (q < 2) throw UnsupportedField("q must be at least 2");
    if (lower.empty() || lower.back() <= 0) throw MalformedPolynomial("lower bound needs a positive leading coefficient");
    CheckRange range;
    for (int n = 1;; ++n) {
        if (n > kMaxSearch) throw ResourceLimit("nonnegativity range search did not settle");
        if (settled(lower, ipow(q, n))) break;
        range.nonneg_max = n;
    }
    const std::vector<long> gap = subtract(compose_square(lower), upper);
    const BigInt gap_bound = cauchy_bound(derivative(gap));
    const BigInt lower_bound = cauchy_bound(derivative(lower));
    for (int n = 1;; ++n) {
        if (n > kMaxSearch) throw ResourceLimit("growth range search did not settle");
        const BigInt xn = ipow(q, n);
        const BigInt cap = eval(upper, xn);
        for (int m = 2 * n;; m += n) {
            if (m > kMaxSearch * 2) throw ResourceLimit("growth range search did not settle");
            const BigInt xm = ipow(q, m);
            if (eval(lower, xm) >= cap && xm >= lower_bound) break;
            range.growth_pairs.emplace_back(n, m);
        }
        if (eval(gap, xn) >= 0 && xn >= gap_bound && xn >= lower_bound) break;
    }
    return range;
}

CheckRange k3_count_range(std::uint64_t q) {
    return derive_check_range(q, {1, -kTraceBound, 1}, {1, kTraceBound, 1});
}

CheckRange cubic_count_range(std::uint64_t q) {
    return derive_check_range(q, {1, 1, 1 - kTraceBound, 1, 1}, {1, 1, 1 + kTraceBound, 1, 1});
}

CheckRange hilbert_count_range(std::uint64_t q, int min_ext) {
    // H = x^4 + (s+1) x^3 + (2 + s^2 + 2s + t) x^2 / 2 + (s+1) x + 1 with |s|, |t| <= 22.
    CheckRange range = derive_check_range(q, {1, 1 - kTraceBound, -11, 1 - kTraceBound, 1},
                                          {1, 1 + kTraceBound, 276, 1 + kTraceBound, 1});
    range.nonneg_max = std::max(range.nonneg_max, min_ext);
    for (int n = 1; n <= min_ext; ++n)
        for (int m = 2 * n; m <= min_ext; m += n)
            if (std::find(range.growth_pairs.begin(), range.growth_pairs.end(), std::pair{n, m}) == range.growth_pairs.end())
                range.growth_pairs.emplace_back(n, m);
    std::sort(range.growth_pairs.begin(), range.growth_pairs.end());
    return range;
}

}  // namespace nck3
