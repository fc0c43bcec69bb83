#include "nck3/rational.hpp"

#include "nck3/error.hpp"

#include <cctype>

namespace nck3 {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw MalformedPolynomial("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt parse_integer(std::string_view text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) throw ParseError("expected integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw ParseError("expected integer, got '" + std::string(text) + "'");
    }
    BigInt z(std::string(text.substr(i)), 10);
    return neg ? BigInt(-z) : z;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-'))
        throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const BigInt& z) { return z.get_str(10); }

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

bool is_square(const Rational& r) {
    if (sgn(r) < 0) return false;
    if (sgn(r) == 0) return true;
    return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

std::optional<long> padic_valuation(const Rational& r, unsigned long p) {
    if (sgn(r) == 0) return std::nullopt;
    auto val = [p](const BigInt& z) {
        long v = 0;
        BigInt t = abs(z);
        while (mpz_divisible_ui_p(t.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
            ++v;
        }
        return v;
    };
    return val(r.get_num()) - val(r.get_den());
}

BigInt ipow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

BigInt ipow(std::uint64_t base, unsigned long exp) {
    BigInt b;
    mpz_set_ui(b.get_mpz_t(), static_cast<unsigned long>(base));
    return ipow(b, exp);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace nck3
