#include "nck3/counting.hpp"
#include "nck3/error.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace nck3;
using nck3::testing::random_cubic;

namespace {

const std::string kDataDir = NCK3_TEST_DATA_DIR;

using SparsePoly = std::map<Exponents, std::uint64_t>;

SparsePoly multiply(const SparsePoly& a, const SparsePoly& b, std::uint32_t p) {
    SparsePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e{};
            for (int i = 0; i < kVariables; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out[e] = (out[e] + ca * cb) % p;
        }
    return out;
}

using Matrix = std::array<std::array<std::uint32_t, kVariables>, kVariables>;

bool invertible(Matrix m, std::uint32_t p) {
    for (int col = 0, row = 0; col < kVariables; ++col, ++row) {
        int pivot = row;
        while (pivot < kVariables && m[pivot][col] == 0) ++pivot;
        if (pivot == kVariables) return false;
        std::swap(m[row], m[pivot]);
        std::uint32_t inv = 1;
        while (m[row][col] * inv % p != 1) ++inv;
        for (int r = row + 1; r < kVariables; ++r) {
            const std::uint32_t f = m[r][col] * inv % p;
            for (int c = 0; c < kVariables; ++c) m[r][c] = (m[r][c] + (p - f) * m[row][c]) % p;
        }
    }
    return true;
}

/// F(M x): substitute x_i -> sum_j M[i][j] x_j and expand.
CubicForm substitute(const CubicForm& form, const Matrix& m) {
    const std::uint32_t p = form.base_p();
    std::array<SparsePoly, kVariables> linear;
    for (int i = 0; i < kVariables; ++i)
        for (int j = 0; j < kVariables; ++j)
            if (m[i][j] != 0) {
                Exponents e{};
                e[j] = 1;
                linear[i][e] = m[i][j];
            }
    SparsePoly total;
    for (const auto& t : form.terms()) {
        SparsePoly prod{{Exponents{}, t.coefficient}};
        for (int i = 0; i < kVariables; ++i)
            for (int r = 0; r < t.exponents[i]; ++r) prod = multiply(prod, linear[i], p);
        for (const auto& [e, c] : prod) total[e] = (total[e] + c) % p;
    }
    std::vector<CubicTerm> terms;
    for (const auto& [e, c] : total)
        if (c != 0) terms.push_back({static_cast<std::uint32_t>(c), e});
    return CubicForm(p, std::move(terms));
}

CubicForm fermat(std::uint32_t p) {
    std::vector<CubicTerm> terms;
    for (int i = 0; i < kVariables; ++i) {
        Exponents e{};
        e[i] = 3;
        terms.push_back({1, e});
    }
    return CubicForm(p, terms);
}

}  // namespace

TEST_CASE("parallel kernel agrees with the reference on random cubics") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const CubicForm form = random_cubic(rng, 2);
        for (std::uint32_t k = 1; k <= 3; ++k) {
            const FieldSpec f = make_field(2, k);
            CHECK(count_affine(form, f, 1) == count_affine_reference(form, f));
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        const CubicForm form = random_cubic(rng, 3);
        const FieldSpec f = make_field(3, 1);
        CHECK(count_affine(form, f, 1) == count_affine_reference(form, f));
    }
    const CubicForm sparse(2, {{1, {1, 1, 1, 0, 0, 0}}});
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const FieldSpec f = make_field(2, k);
        CHECK(count_affine(sparse, f) == count_affine_reference(sparse, f));
    }
}

TEST_CASE("reference and kernel agree over GF(16) on a dense cubic") {
    std::mt19937_64 rng(22);
    const CubicForm form = random_cubic(rng, 2);
    const FieldSpec f = make_field(2, 4);
    CHECK(count_affine(form, f) == count_affine_reference(form, f));
}

TEST_CASE("Fermat cubic: cubing is bijective when 3 does not divide q - 1") {
    const CubicForm form = fermat(2);
    CHECK(count_affine(form, make_field(2, 1)) == 32);
    CHECK(count_affine(form, make_field(2, 3)) == ipow(std::uint64_t{8}, 5));
    CHECK(count_affine(form, make_field(2, 5)) == ipow(std::uint64_t{32}, 5));
    CHECK(count_affine(fermat(5), make_field(5, 1)) == ipow(std::uint64_t{5}, 5));
    const PointCountTable t = count_table(form, 4);
    CHECK(t.at(1) == 31);
    CHECK(t.at(2) == 693);
    CHECK(t.at(3) == 4681);
    CHECK(t.at(4) == 75537);
}

TEST_CASE("golden count tables") {
    const PointCountTable s5 = count_table(read_cubic_file(kDataDir + "/sect5_cubic.txt"), 4);
    CHECK(s5.at(1) == 35);
    CHECK(s5.at(2) == 325);
    CHECK(s5.at(3) == 4841);
    CHECK(s5.at(4) == 70161);
    const PointCountTable nl = count_table(read_cubic_file(kDataDir + "/nl_general_cubic.txt"), 4);
    CHECK(nl.at(1) == 19);
    CHECK(nl.at(2) == 325);
    CHECK(nl.at(3) == 4681);
    CHECK(nl.at(4) == 70673);
}

TEST_CASE("counts are invariant under GL6 changes of variables") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::uint32_t> bit(0, 1);
    for (int trial = 0; trial < 12; ++trial) {
        const CubicForm form = random_cubic(rng, 2);
        Matrix m{};
        do
            for (auto& row : m)
                for (auto& x : row) x = bit(rng);
        while (!invertible(m, 2));
        const CubicForm moved = substitute(form, m);
        for (std::uint32_t k = 1; k <= 3; ++k) {
            const FieldSpec f = make_field(2, k);
            CHECK(count_affine(form, f) == count_affine(moved, f));
        }
    }
}

TEST_CASE("counts do not depend on the chosen modulus") {
    std::mt19937_64 rng(24);
    const std::vector<std::uint32_t> other{1, 0, 1, 1};  // x^3 + x^2 + 1
    const FieldSpec a = make_field(2, 3), b = make_field(2, std::span<const std::uint32_t>(other));
    REQUIRE(a.modulus() != b.modulus());
    for (int trial = 0; trial < 20; ++trial) {
        const CubicForm form = random_cubic(rng, 2);
        CHECK(count_affine(form, a) == count_affine(form, b));
    }
}

TEST_CASE("prefix counts partition the affine count") {
    std::mt19937_64 rng(25);
    const CubicForm form = random_cubic(rng, 2);
    const FieldSpec f = make_field(2, 2);
    const BigInt total = count_affine(form, f);
    BigInt by_one = 0, by_two = 0;
    for (std::uint32_t a = 0; a < f.q(); ++a) {
        const FieldElement one[] = {{a}};
        by_one += count_affine_with_prefix(form, f, one);
        for (std::uint32_t b = 0; b < f.q(); ++b) {
            const FieldElement two[] = {{a}, {b}};
            by_two += count_affine_with_prefix(form, f, two);
        }
    }
    CHECK(by_one == total);
    CHECK(by_two == total);
    const FieldElement six[6] = {};
    CHECK_THROWS_AS(count_affine_with_prefix(form, f, six), ResourceLimit);
}

TEST_CASE("worker count does not change the result") {
    std::mt19937_64 rng(26);
    const CubicForm form = random_cubic(rng, 2);
    const FieldSpec f = make_field(2, 4);
    const BigInt one = count_affine(form, f, 1);
    for (int w : {2, 3, 4, 8}) CHECK(count_affine(form, f, w) == one);
}

TEST_CASE("projective counts satisfy the Ax congruence") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 30; ++trial) {
        const CubicForm form = random_cubic(rng, 2);
        for (int n = 1; n <= 3; ++n) {
            const BigInt N = count_projective(form, n);
            CHECK(N % ipow(std::uint64_t{2}, n) == 1);
        }
    }
    CHECK_THROWS_AS(projective_from_affine(BigInt(6), 3), ConsistencyError);
}

TEST_CASE("enumeration size cap") {
    const CubicForm form = fermat(2);
    CHECK_THROWS_AS(count_projective(form, 7), ResourceLimit);
    CHECK_THROWS_AS(count_projective(form, 0), ResourceLimit);
    CHECK(counting_field(form, 6).q() == 64);
    CountOptions big;
    big.allow_large = true;
    CHECK(counting_field(form, 7, big).q() == 128);
}

TEST_CASE("singular scan") {
    CHECK(singular_scan(fermat(2), 2).empty());
    CHECK(singular_scan(read_cubic_file(kDataDir + "/sect5_cubic.txt"), 2).empty());
    const CubicForm cone(2, {{1, {3, 0, 0, 0, 0, 0}}, {1, {0, 3, 0, 0, 0, 0}}});
    const auto sing = singular_scan(cone, 1, 5);
    CHECK_FALSE(sing.empty());
    CHECK(sing.size() <= 5);
}

TEST_CASE("cubic text round-trip and errors") {
    std::mt19937_64 rng(28);
    for (int trial = 0; trial < 20; ++trial) {
        const CubicForm form = random_cubic(rng, trial % 2 ? 3 : 2);
        CHECK(parse_cubic(format_cubic(form)) == form);
    }
    CHECK(parse_cubic("p=3\n4 3 0 0 0 0 0\n").terms().front().coefficient == 1);
    CHECK_THROWS_AS(parse_cubic("1 2 0 0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cubic("2 3 0 0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_cubic("p=4\n1 3 0 0 0 0 0\n"), ParseError);
    CHECK_THROWS_AS(read_cubic_file(kDataDir + "/missing.txt"), ParseError);
    const PointCountTable t = parse_count_table("q=2\n# n count\n1 35\n2 325\n");
    CHECK(t.at(2) == 325);
    CHECK(parse_count_table(format_count_table(t)) == t);
}
