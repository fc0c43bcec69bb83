#include "nck3/counting.hpp"
#include "nck3/error.hpp"

#include <cstdlib>
#include <string>

#include <omp.h>

namespace nck3 {

int default_workers() {
    if (const char* env = std::getenv("NCK3_WORKERS")) {
        try {
            int w = std::stoi(env);
            if (w > 0) return w;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

FieldSpec counting_field(const CubicForm& form, int n, const CountOptions& opts) {
    if (n < 1) throw ResourceLimit("extension degree must be at least 1");
    const std::uint64_t p = form.base_p();
    std::uint64_t q = 1;
    for (int i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 16)) break;
    }
    if (!opts.allow_large && q > opts.max_field_size)
        throw ResourceLimit("F_{" + std::to_string(p) + "^" + std::to_string(n) + "} exceeds the enumeration bound q^n <= " +
                            std::to_string(opts.max_field_size) + " (~" + std::to_string(opts.max_field_size) +
                            "^6 evaluations); pass --allow-large to lift it");
    if (q > (1u << 16)) throw ResourceLimit("F_{" + std::to_string(p) + "^" + std::to_string(n) + "} exceeds 2^16 elements");
    return make_field(form.base_p(), static_cast<std::uint32_t>(n));
}

FieldElement evaluate(const FieldSpec& field, std::span<const CubicTerm> terms, const Point& x) {
    FieldElement acc = field.zero();
    for (const auto& t : terms) {
        FieldElement m = field.from_int(t.coefficient);
        for (int i = 0; i < kVariables && m.index != 0; ++i)
            if (t.exponents[i] != 0) m = field.mul(m, field.pow(x[i], t.exponents[i]));
        acc = field.add(acc, m);
    }
    return acc;
}

BigInt count_affine_reference(const CubicForm& form, const FieldSpec& field) {
    const std::uint32_t q = field.q();
    Point x{};
    std::uint64_t zeros = 0;
    std::uint64_t total = 1;
    for (int i = 0; i < kVariables; ++i) total *= q;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (int i = kVariables - 1; i >= 0; --i) {
            x[i] = {static_cast<std::uint32_t>(r % q)};
            r /= q;
        }
        if (evaluate(field, form.terms(), x).index == 0) ++zeros;
    }
    BigInt out;
    mpz_set_ui(out.get_mpz_t(), zeros);
    return out;
}

BigInt projective_from_affine(const BigInt& affine, std::uint64_t q) {
    BigInt qq;
    mpz_set_ui(qq.get_mpz_t(), q);
    if (affine < 1) throw ConsistencyError("affine cone count must include the origin");
    if (affine % qq != 0)
        throw ConsistencyError("Chevalley-Warning-Ax violated: affine count " + to_string(affine) + " not divisible by " +
                               std::to_string(q));
    BigInt num = affine - 1;
    BigInt den = qq - 1;
    if (num % den != 0)
        throw ConsistencyError("affine count " + to_string(affine) + " - 1 not divisible by q - 1 = " + to_string(den));
    BigInt projective = num / den;
    if (projective % qq != 1)
        throw ConsistencyError("projective count " + to_string(projective) + " is not 1 mod " + std::to_string(q));
    return projective;
}

BigInt count_affine(const CubicForm& form, int n, const CountOptions& opts) {
    return count_affine(form, counting_field(form, n, opts), opts.workers);
}

BigInt count_projective(const CubicForm& form, int n, const CountOptions& opts) {
    const FieldSpec field = counting_field(form, n, opts);
    return projective_from_affine(count_affine(form, field, opts.workers), field.q());
}

PointCountTable count_table(const CubicForm& form, int n_max, const CountOptions& opts) {
    if (n_max < 1) throw ResourceLimit("count_table needs n_max >= 1");
    PointCountTable table;
    table.q = form.base_p();
    for (int n = 1; n <= n_max; ++n) table.counts[n] = count_projective(form, n, opts);
    return table;
}

std::vector<SingularPoint> singular_scan(const CubicForm& form, int n_max, std::size_t max_points,
                                         const CountOptions& opts) {
    std::vector<SingularPoint> out;
    std::array<std::vector<CubicTerm>, kVariables> partials;
    for (int i = 0; i < kVariables; ++i) partials[i] = form.partial(i);
    for (int n = 1; n <= n_max; ++n) {
        const FieldSpec field = counting_field(form, n, opts);
        const std::uint32_t q = field.q();
        // Normalized representatives: leading nonzero coordinate equal to 1.
        for (int lead = 0; lead < kVariables; ++lead) {
            const int free_vars = kVariables - lead - 1;
            std::uint64_t total = 1;
            for (int i = 0; i < free_vars; ++i) total *= q;
            for (std::uint64_t idx = 0; idx < total; ++idx) {
                Point x{};
                x[lead] = field.one();
                std::uint64_t r = idx;
                for (int i = kVariables - 1; i > lead; --i) {
                    x[i] = {static_cast<std::uint32_t>(r % q)};
                    r /= q;
                }
                if (evaluate(field, form.terms(), x).index != 0) continue;
                bool singular = true;
                for (int i = 0; i < kVariables && singular; ++i)
                    singular = evaluate(field, partials[i], x).index == 0;
                if (!singular) continue;
                out.push_back({n, x});
                if (out.size() >= max_points) return out;
            }
        }
    }
    return out;
}

}  // namespace nck3
