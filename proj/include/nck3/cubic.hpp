#pragma once

#include "nck3/rational.hpp"

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nck3 {

inline constexpr int kVariables = 6;

using Exponents = std::array<std::uint8_t, kVariables>;

struct CubicTerm {
    std::uint32_t coefficient;  // reduced into [0, p)
    Exponents exponents;        // sums to 3

    friend bool operator==(const CubicTerm&, const CubicTerm&) = default;
};

/// Homogeneous cubic in x1..x6 over GF(p). Terms are merged by monomial,
/// sorted, and never carry a zero coefficient.
class CubicForm {
public:
    CubicForm(std::uint32_t p, std::vector<CubicTerm> terms);

    std::uint32_t base_p() const noexcept { return p_; }
    const std::vector<CubicTerm>& terms() const noexcept { return terms_; }

    /// The formal partial derivative with respect to x_{var+1}; a quadratic,
    /// stored with the same term type (exponents sum to 2).
    std::vector<CubicTerm> partial(int var) const;

    friend bool operator==(const CubicForm&, const CubicForm&) = default;

private:
    std::uint32_t p_;
    std::vector<CubicTerm> terms_;
};

/// Line format: "coeff e1 e2 e3 e4 e5 e6" per term, '#' comments, optional
/// "p=<prime>" header (default 2). Coefficients may be arbitrary integers.
CubicForm parse_cubic(std::string_view text);
CubicForm read_cubic_file(const std::string& path);
std::string format_cubic(const CubicForm& form);

/// Exact point counts N_n for n = 1..B over F_{q^n}.
struct PointCountTable {
    std::uint64_t q = 2;
    std::map<int, BigInt> counts;

    const BigInt& at(int n) const;
    bool has(int n) const { return counts.count(n) != 0; }
    int max_n() const { return counts.empty() ? 0 : counts.rbegin()->first; }
    friend bool operator==(const PointCountTable&, const PointCountTable&) = default;
};

/// Table text: "q=<q>" then "n value" rows ('#' comments). When a row has more
/// than two columns the last one is taken as the value.
PointCountTable parse_count_table(std::string_view text);
std::string format_count_table(const PointCountTable& table, const std::string& value_header = "count");

}  // namespace nck3
