#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nck3 {

using BigInt = mpz_class;
using Rational = mpq_class;  // always kept canonical: lowest terms, positive denominator

/// Builds num/den in lowest terms. Throws MalformedPolynomial on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a" or "a/b" (optional sign, decimal digits only).
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

bool is_integer(const Rational& r);

/// True iff r is the square of a rational; 0 counts as a square.
bool is_square(const Rational& r);

/// p-adic valuation; std::nullopt for r == 0.
std::optional<long> padic_valuation(const Rational& r, unsigned long p);

BigInt ipow(const BigInt& base, unsigned long exp);
BigInt ipow(std::uint64_t base, unsigned long exp);

bool is_prime(std::uint64_t n);

}  // namespace nck3
