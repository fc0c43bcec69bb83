#include "nck3/field.hpp"

#include "nck3/error.hpp"
#include "nck3/rational.hpp"

#include <algorithm>
#include <array>

namespace nck3 {

namespace {

constexpr std::uint32_t kMaxFieldSize = 1u << 16;

// Default GF(2) moduli, bit i = coefficient of x^i.
constexpr std::array<std::uint32_t, 17> kBinaryModuli = {
    0,       0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,   0x11b,
    0x203,   0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003, 0x1002b,
};

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t index, std::uint32_t p, std::uint32_t k) {
    Digits d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        d[i] = index % p;
        index /= p;
    }
    return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
    std::uint32_t index = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) index = index * p + *it;
    return index;
}

// Remainder of a mod b over GF(p); b monic.
Digits poly_mod(Digits a, const Digits& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint32_t lead = a.back() % p;
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = (a[shift + j] + (p - lead) * b[j]) % p;
        }
        a.pop_back();
    }
    return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
    Digits prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    Digits r = poly_mod(std::move(prod), m, p);
    r.resize(m.size() - 1, 0);
    return r;
}

std::uint32_t ipow32(std::uint32_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= b;
        if (r > (1ull << 32)) return 0;
    }
    return static_cast<std::uint32_t>(r);
}

void validate_pk(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw UnsupportedField("p = " + std::to_string(p) + " is not prime");
    if (k < 1 || k > 16) throw UnsupportedField("extension degree k = " + std::to_string(k) + " outside 1..16");
    std::uint32_t q = ipow32(p, k);
    if (q == 0 || q > kMaxFieldSize)
        throw UnsupportedField("field size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^16");
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Digits f(poly.begin(), poly.end());
    while (!f.empty() && f.back() % p == 0) f.pop_back();
    const std::size_t deg = f.empty() ? 0 : f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Make monic.
    std::uint32_t lead = f.back() % p, inv = 1;
    while ((lead * inv) % p != 1) ++inv;
    for (auto& c : f) c = (c * inv) % p;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint32_t count = ipow32(p, static_cast<std::uint32_t>(d));
        for (std::uint32_t low = 0; low < count; ++low) {
            Digits g = to_digits(low, p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            Digits r = poly_mod(f, g, p);
            if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
    validate_pk(p, k);
    Digits m(k + 1, 0);
    m[k] = 1;
    if (p == 2) {
        for (std::uint32_t i = 0; i <= k; ++i) m[i] = (kBinaryModuli[k] >> i) & 1u;
        return m;
    }
    // Search in increasing order of the lower coefficients read as a base-p
    // number with x^(k-1) most significant.
    const std::uint32_t count = ipow32(p, k);
    for (std::uint32_t low = 0; low < count; ++low) {
        Digits lowd = to_digits(low, p, k);
        std::copy(lowd.begin(), lowd.end(), m.begin());
        if (is_irreducible_mod_p(m, p)) return m;
    }
    throw ConsistencyError("no irreducible polynomial found");
}

FieldSpec make_field(std::uint32_t p, std::uint32_t k) {
    auto m = default_modulus(p, k);
    return make_field(p, m);
}

FieldSpec make_field(std::uint32_t p, std::span<const std::uint32_t> modulus) {
    if (modulus.size() < 2) throw UnsupportedField("modulus must have degree >= 1");
    const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
    validate_pk(p, k);
    if (modulus.back() != 1) throw UnsupportedField("modulus must be monic");
    for (auto c : modulus)
        if (c >= p) throw UnsupportedField("modulus coefficients must lie in [0, p)");
    if (!is_irreducible_mod_p(modulus, p)) throw UnsupportedField("modulus is reducible over GF(p)");
    FieldSpec f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = ipow32(p, k);
    f.modulus_.assign(modulus.begin(), modulus.end());
    f.build_tables();
    return f;
}

void FieldSpec::build_tables() {
    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, -1);
    for (std::uint32_t g = 1; g < q_; ++g) {
        if (q_ > 2 && g == 1) continue;
        const Digits gd = to_digits(g, p_, k_);
        Digits cur = to_digits(1, p_, k_);
        std::fill(log_.begin(), log_.end(), -1);
        std::uint32_t e = 0;
        bool ok = true;
        for (; e < q_ - 1; ++e) {
            const std::uint32_t idx = from_digits(cur, p_);
            if (log_[idx] != -1) {
                ok = false;
                break;
            }
            log_[idx] = static_cast<std::int32_t>(e);
            exp_[e] = idx;
            cur = poly_mulmod(cur, gd, modulus_, p_);
        }
        if (ok) {
            generator_ = g;
            for (std::uint32_t i = 0; i < q_ - 1; ++i) exp_[i + q_ - 1] = exp_[i];
            return;
        }
    }
    throw ConsistencyError("multiplicative group has no generator");
}

FieldElement FieldSpec::from_int(long long c) const noexcept {
    long long r = c % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
}

FieldElement FieldSpec::add(FieldElement a, FieldElement b) const noexcept {
    if (p_ == 2) return {a.index ^ b.index};
    std::uint32_t out = 0, scale = 1, x = a.index, y = b.index;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement FieldSpec::neg(FieldElement a) const noexcept {
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1, x = a.index;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement FieldSpec::sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }

FieldElement FieldSpec::inv(FieldElement a) const {
    if (a.index == 0) throw ConsistencyError("inverse of zero");
    return {exp_[(q_ - 1 - log_[a.index]) % (q_ - 1)]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const noexcept {
    if (e == 0) return one();
    if (a.index == 0) return zero();
    return {exp_[(static_cast<std::uint64_t>(log_[a.index]) * (e % (q_ - 1))) % (q_ - 1)]};
}

std::uint64_t FieldSpec::multiplicative_order(FieldElement a) const {
    if (a.index == 0) throw ConsistencyError("zero has no multiplicative order");
    std::uint64_t n = q_ - 1;
    std::uint64_t l = static_cast<std::uint64_t>(log_[a.index]);
    std::uint64_t g = n, b = l;
    while (b != 0) {
        std::uint64_t t = g % b;
        g = b;
        b = t;
    }
    return n / g;
}

namespace {

std::string format_digits(const Digits& d) {
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += '+';
        if (d[i] != 1 || i == 0) out += std::to_string(d[i]);
        if (i >= 1) out += 'x';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string FieldSpec::format(FieldElement a) const { return format_digits(to_digits(a.index, p_, k_)); }

std::string FieldSpec::format_modulus() const { return format_digits(modulus_); }

FieldElement embed(const FieldSpec& small, const FieldSpec& big, FieldElement x) {
    if (small.p() != big.p()) throw UnsupportedField("embedding between fields of different characteristic");
    if (big.k() % small.k() != 0)
        throw UnsupportedField("GF(p^" + std::to_string(small.k()) + ") does not embed in GF(p^" +
                               std::to_string(big.k()) + ")");
    // Smallest-index root in `big` of the small modulus.
    const auto& m = small.modulus();
    FieldElement root{0};
    bool found = false;
    for (std::uint32_t c = 0; c < big.q() && !found; ++c) {
        FieldElement acc = big.zero();
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            acc = big.add(big.mul(acc, {c}), big.from_int(*it));
        if (acc.index == 0) {
            root = {c};
            found = true;
        }
    }
    if (!found) throw ConsistencyError("small modulus has no root in the extension field");
    FieldElement out = big.zero();
    FieldElement power = big.one();
    std::uint32_t idx = x.index;
    for (std::uint32_t i = 0; i < small.k(); ++i) {
        out = big.add(out, big.mul(big.from_int(idx % small.p()), power));
        idx /= small.p();
        power = big.mul(power, root);
    }
    return out;
}

}  // namespace nck3
