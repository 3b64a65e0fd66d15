#ifndef MOMENTFORGE_ARITH_HPP
#define MOMENTFORGE_ARITH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace momentforge {

/* Arbitrary-precision integers and rationals. mpq_class values built through
 * the helpers below are always canonical (reduced, positive denominator). */
using Integer = mpz_class;
using Rational = mpq_class;

Integer ipow(const Integer& base, unsigned long exponent);
Integer ipow(std::uint64_t base, unsigned long exponent);

/// num/den in lowest terms; throws InputError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Accepts "[-]digits" or "[-]digits/digits"; throws InputError otherwise.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

/// Decomposes n = p^k with k >= 1, or nullopt when n is not a prime power.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Checked u64 multiply; nullopt on overflow.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent);

} // namespace momentforge

#endif // MOMENTFORGE_ARITH_HPP
