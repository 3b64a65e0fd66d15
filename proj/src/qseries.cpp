#include "momentforge/qseries.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {

SimpleType SimpleType::abelian(std::uint64_t h)
{
  if (!as_prime_power(h))
    throw InputError("abelian simple type needs a prime power h, got " + std::to_string(h));
  return SimpleType(Abelian{h});
}

SimpleType SimpleType::non_abelian(std::uint64_t aut_count)
{
  if (aut_count == 0)
    throw InputError("non-abelian simple type needs aut_count >= 1");
  return SimpleType(NonAbelian{aut_count});
}

std::uint64_t SimpleType::h() const
{
  if (const auto* a = std::get_if<Abelian>(&kind_))
    return a->h;
  throw InputError("h requested for a non-abelian simple type");
}

std::uint64_t SimpleType::aut_count() const
{
  if (const auto* n = std::get_if<NonAbelian>(&kind_))
    return n->aut_count;
  throw InputError("aut_count requested for an abelian simple type");
}

std::string SimpleType::describe() const
{
  if (is_abelian())
    return "F_" + std::to_string(h());
  return "G[aut=" + std::to_string(aut_count()) + "]";
}

Integer q_pochhammer(std::uint64_t h, unsigned k)
{
  Integer out = 1;
  Integer hj = 1;
  for (unsigned j = 1; j <= k; ++j) {
    hj *= h;
    out *= hj - 1;
  }
  return out;
}

Integer q_binomial(unsigned e, unsigned k, std::uint64_t h)
{
  if (k > e)
    return 0;
  Integer out = q_pochhammer(h, e);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), q_pochhammer(h, k).get_mpz_t());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), q_pochhammer(h, e - k).get_mpz_t());
  return out;
}

Rational inversion_coefficient(const SimpleType& t, unsigned k)
{
  Integer den;
  if (t.is_abelian()) {
    den = q_pochhammer(t.h(), k);
  } else {
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), k);
    den = fact * ipow(t.aut_count(), k);
  }
  return make_rational(k % 2 == 0 ? Integer(1) : Integer(-1), den);
}

} // namespace momentforge
