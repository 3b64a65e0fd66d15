#include "momentforge/surjcount.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {

bool MultiIndex::is_zero() const
{
  for (unsigned e : exponents)
    if (e != 0)
      return false;
  return true;
}

std::string MultiIndex::to_string() const
{
  std::string out = "(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i)
      out += ",";
    out += std::to_string(exponents[i]);
  }
  return out + ")";
}

std::vector<MultiIndex> grid(const MultiIndex& bound)
{
  std::vector<MultiIndex> out;
  MultiIndex cur(std::vector<unsigned>(bound.size(), 0));
  while (true) {
    out.push_back(cur);
    std::size_t i = bound.size();
    while (i > 0) {
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0)
        return out;
    }
    if (bound.size() == 0)
      return out;
  }
}

Integer sur_single(const SimpleType& t, unsigned e, unsigned k)
{
  if (k > e)
    return 0;
  Integer out = 1;
  if (t.is_abelian()) {
    const Integer he = ipow(t.h(), e);
    Integer hi = 1;
    for (unsigned i = 0; i < k; ++i) {
      out *= he - hi;
      hi *= t.h();
    }
  } else {
    for (unsigned i = 0; i < k; ++i)
      out *= e - i;
    out *= ipow(t.aut_count(), k);
  }
  return out;
}

Integer sur_product(const TypeBasis& basis, const MultiIndex& e, const MultiIndex& k)
{
  if (e.size() != basis.size() || k.size() != basis.size())
    throw InputError("multi-index length does not match basis size " + std::to_string(basis.size()));
  Integer out = 1;
  for (std::size_t i = 0; i < basis.size() && out != 0; ++i)
    out *= sur_single(basis[i], e[i], k[i]);
  return out;
}

} // namespace momentforge
