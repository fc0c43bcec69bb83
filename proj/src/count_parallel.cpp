#include "nck3/counting.hpp"
#include "nck3/error.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include <omp.h>

namespace nck3 {

namespace {

// Monomials of total degree <= 3 in v variables, lexicographic order. For
// v = 1 the index of x^e is e.
std::vector<std::vector<int>> monomials(int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(v, 0);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == v) {
            out.push_back(e);
            return;
        }
        for (int d = 0; d <= budget; ++d) {
            e[pos] = d;
            self(self, pos + 1, budget - d);
        }
        e[pos] = 0;
    };
    rec(rec, 0, 3);
    return out;
}

constexpr int kMaxMonomials = 84;  // C(9, 3)

struct SubstEntry {
    std::int16_t dst;
    std::int16_t src;
    std::int8_t power;
};

// Substituting the first variable of a level-v polynomial yields a level-(v-1) one.
struct Level {
    int size = 0;
    std::vector<SubstEntry> to_next;
};

struct Plan {
    std::array<Level, kVariables + 1> levels;  // indexed by number of free variables
    std::array<std::uint32_t, kMaxMonomials> top{};
};

Plan make_plan(const CubicForm& form) {
    Plan plan;
    std::array<std::map<std::vector<int>, int>, kVariables + 1> index;
    for (int v = 1; v <= kVariables; ++v) {
        auto monos = monomials(v);
        plan.levels[v].size = static_cast<int>(monos.size());
        for (int i = 0; i < static_cast<int>(monos.size()); ++i) index[v][monos[i]] = i;
    }
    for (int v = 2; v <= kVariables; ++v) {
        for (const auto& [mono, src] : index[v]) {
            std::vector<int> rest(mono.begin() + 1, mono.end());
            plan.levels[v].to_next.push_back({static_cast<std::int16_t>(index[v - 1].at(rest)),
                                              static_cast<std::int16_t>(src), static_cast<std::int8_t>(mono[0])});
        }
        std::sort(plan.levels[v].to_next.begin(), plan.levels[v].to_next.end(),
                  [](const SubstEntry& a, const SubstEntry& b) { return a.dst < b.dst || (a.dst == b.dst && a.power < b.power); });
    }
    for (const auto& t : form.terms()) {
        std::vector<int> e(t.exponents.begin(), t.exponents.end());
        plan.top[index[kVariables].at(e)] = t.coefficient;  // c < p embeds as index c
    }
    return plan;
}

// Full multiplication/addition tables; used when q <= 256.
class TableArith {
public:
    explicit TableArith(const FieldSpec& f) : q_(f.q()), binary_(f.p() == 2), mul_(q_ * q_), add_(binary_ ? 0 : q_ * q_) {
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                mul_[a * q_ + b] = static_cast<std::uint16_t>(f.mul({a}, {b}).index);
                if (!binary_) add_[a * q_ + b] = static_cast<std::uint16_t>(f.add({a}, {b}).index);
            }
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return mul_[a * q_ + b]; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return binary_ ? a ^ b : add_[a * q_ + b]; }

private:
    std::uint32_t q_;
    bool binary_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> add_;
};

// Log/antilog arithmetic for larger fields.
class LogArith {
public:
    explicit LogArith(const FieldSpec& f) : f_(f), binary_(f.p() == 2) {}
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return f_.mul({a}, {b}).index; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return binary_ ? a ^ b : f_.add({a}, {b}).index; }

private:
    const FieldSpec& f_;
    bool binary_;
};

// Number of t in F_q with c3 t^3 + c2 t^2 + c1 t + c0 = 0.
class RootCounter {
public:
    static constexpr std::uint32_t kTableLimit = 64;

    explicit RootCounter(const FieldSpec& f) : f_(f), q_(f.q()) {
        inv_.resize(q_);
        for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = f.inv({a}).index;
        if (q_ > kTableLimit) return;
        // Monic tables: for each t and leading coefficients, the unique constant making t a root.
        quad_.assign(static_cast<std::size_t>(q_) * q_, 0);
        cubic_.assign(static_cast<std::size_t>(q_) * q_ * q_, 0);
        for (std::uint32_t t = 0; t < q_; ++t) {
            const FieldElement tt{t}, t2 = f.mul(tt, tt), t3 = f.mul(t2, tt);
            for (std::uint32_t b1 = 0; b1 < q_; ++b1) {
                const FieldElement v = f.add(t2, f.mul({b1}, tt));
                ++quad_[static_cast<std::size_t>(b1) * q_ + f.neg(v).index];
            }
            for (std::uint32_t b2 = 0; b2 < q_; ++b2) {
                const FieldElement base = f.add(t3, f.mul({b2}, t2));
                for (std::uint32_t b1 = 0; b1 < q_; ++b1) {
                    const FieldElement v = f.add(base, f.mul({b1}, tt));
                    ++cubic_[(static_cast<std::size_t>(b2) * q_ + b1) * q_ + f.neg(v).index];
                }
            }
        }
    }

    template <class Arith>
    std::uint32_t count(const Arith& ar, std::uint32_t c3, std::uint32_t c2, std::uint32_t c1, std::uint32_t c0) const noexcept {
        if (q_ > kTableLimit) return count_direct(ar, c3, c2, c1, c0);
        if (c3 != 0) {
            const std::uint32_t i = inv_[c3];
            return cubic_[(static_cast<std::size_t>(ar.mul(c2, i)) * q_ + ar.mul(c1, i)) * q_ + ar.mul(c0, i)];
        }
        if (c2 != 0) {
            const std::uint32_t i = inv_[c2];
            return quad_[static_cast<std::size_t>(ar.mul(c1, i)) * q_ + ar.mul(c0, i)];
        }
        if (c1 != 0) return 1;
        return c0 == 0 ? q_ : 0;
    }

private:
    template <class Arith>
    std::uint32_t count_direct(const Arith& ar, std::uint32_t c3, std::uint32_t c2, std::uint32_t c1,
                               std::uint32_t c0) const noexcept {
        std::uint32_t roots = 0;
        for (std::uint32_t t = 0; t < q_; ++t) {
            std::uint32_t v = ar.add(ar.mul(ar.add(ar.mul(ar.add(ar.mul(c3, t), c2), t), c1), t), c0);
            roots += v == 0;
        }
        return roots;
    }

    const FieldSpec& f_;
    std::uint32_t q_;
    std::vector<std::uint32_t> inv_;
    std::vector<std::uint8_t> quad_;
    std::vector<std::uint8_t> cubic_;
};

using Coeffs = std::array<std::uint32_t, kMaxMonomials>;

template <class Arith>
inline void substitute(const Arith& ar, const Level& level, int next_size, const Coeffs& src, Coeffs& dst,
                       const std::array<std::uint32_t, 4>& pw) {
    std::fill_n(dst.begin(), next_size, 0u);
    for (const auto& e : level.to_next) {
        const std::uint32_t c = src[e.src];
        if (c == 0) continue;
        dst[e.dst] = ar.add(dst[e.dst], e.power == 0 ? c : ar.mul(c, pw[e.power]));
    }
}

template <class Arith>
struct Kernel {
    const Arith& ar;
    const Plan& plan;
    const RootCounter& roots;
    std::vector<std::array<std::uint32_t, 4>> powers;  // a^0..a^3 for every a

    Kernel(const Arith& a, const Plan& p, const RootCounter& r, std::uint32_t q) : ar(a), plan(p), roots(r), powers(q) {
        for (std::uint32_t x = 0; x < q; ++x) {
            powers[x][0] = 1;
            for (int e = 1; e < 4; ++e) powers[x][e] = ar.mul(powers[x][e - 1], x);
        }
    }

    // Count zeros with the first `prefix.size()` coordinates fixed.
    std::uint64_t run(std::span<const std::uint32_t> prefix) const {
        Coeffs cur = plan.top;
        int v = kVariables;
        for (std::uint32_t a : prefix) {
            Coeffs next;
            substitute(ar, plan.levels[v], plan.levels[v - 1].size, cur, next, powers[a]);
            cur = next;
            --v;
        }
        return descend(cur, v);
    }

    std::uint64_t descend(const Coeffs& cur, int v) const {
        const auto q = static_cast<std::uint32_t>(powers.size());
        if (v == 1) return roots.count(ar, cur[3], cur[2], cur[1], cur[0]);
        std::uint64_t total = 0;
        Coeffs next;
        for (std::uint32_t a = 0; a < q; ++a) {
            substitute(ar, plan.levels[v], plan.levels[v - 1].size, cur, next, powers[a]);
            total += descend(next, v - 1);
        }
        return total;
    }
};

template <class Arith>
BigInt count_with(const Arith& ar, const FieldSpec& field, const CubicForm& form, int workers) {
    const Plan plan = make_plan(form);
    const RootCounter roots(field);
    const Kernel<Arith> kernel(ar, plan, roots, field.q());
    const std::uint32_t q = field.q();
    const long tasks = static_cast<long>(q) * q;
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(tasks), 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long t = 0; t < tasks; ++t) {
        const std::array<std::uint32_t, 2> prefix{static_cast<std::uint32_t>(t / q), static_cast<std::uint32_t>(t % q)};
        partial[static_cast<std::size_t>(t)] = kernel.run(prefix);
    }
    BigInt sum = 0;
    BigInt tmp;
    for (auto c : partial) {
        mpz_set_ui(tmp.get_mpz_t(), c);
        sum += tmp;
    }
    return sum;
}

}  // namespace

BigInt count_affine(const CubicForm& form, const FieldSpec& field, int workers) {
    if (field.p() != form.base_p()) throw UnsupportedField("field characteristic differs from the cubic's base prime");
    if (workers <= 0) workers = default_workers();
    if (field.q() <= 256) return count_with(TableArith(field), field, form, workers);
    return count_with(LogArith(field), field, form, workers);
}

BigInt count_affine_with_prefix(const CubicForm& form, const FieldSpec& field, std::span<const FieldElement> prefix) {
    if (prefix.size() >= static_cast<std::size_t>(kVariables)) throw ResourceLimit("prefix must leave at least one free variable");
    const TableArith ar(field);
    const Plan plan = make_plan(form);
    const RootCounter roots(field);
    const Kernel<TableArith> kernel(ar, plan, roots, field.q());
    std::vector<std::uint32_t> idx;
    for (auto e : prefix) idx.push_back(e.index);
    BigInt out;
    mpz_set_ui(out.get_mpz_t(), kernel.run(idx));
    return out;
}

}  // namespace nck3
