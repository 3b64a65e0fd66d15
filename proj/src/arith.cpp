#include "momentforge/arith.hpp"

#include <cctype>

#include "momentforge/errors.hpp"

namespace momentforge {

Integer ipow(const Integer& base, unsigned long exponent)
{
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer ipow(std::uint64_t base, unsigned long exponent)
{
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

Rational make_rational(const Integer& num, const Integer& den)
{
  if (den == 0)
    throw InputError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r)
{
  return r.get_str(10);
}

std::string to_string(const Integer& z)
{
  return z.get_str(10);
}

namespace {

bool all_digits(std::string_view s)
{
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw InputError("zero denominator in '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return make_rational(n, d);
}

double to_double(const Rational& r)
{
  return r.get_d();
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n)
{
  if (n < 2)
    return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0)
    return PrimePower{n, 1};
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1)
    return std::nullopt;
  return PrimePower{p, k};
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exponent)
{
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    auto next = checked_mul(out, base);
    if (!next)
      return std::nullopt;
    out = *next;
  }
  return out;
}

} // namespace momentforge
