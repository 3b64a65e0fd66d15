#ifndef MOMENTFORGE_SURJCOUNT_HPP
#define MOMENTFORGE_SURJCOUNT_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "momentforge/arith.hpp"
#include "momentforge/qseries.hpp"

namespace momentforge {

/* Ordered list of simple types G_1..G_m. Entries are pairwise
 * non-isomorphic by contract; position is identity. */
struct TypeBasis {
  std::vector<SimpleType> types;

  std::size_t size() const { return types.size(); }
  const SimpleType& operator[](std::size_t i) const { return types[i]; }
};

/// Exponent vector (e_1..e_m) standing for prod G_i^{e_i}.
struct MultiIndex {
  std::vector<unsigned> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> e) : exponents(std::move(e)) {}
  MultiIndex(std::initializer_list<unsigned> e) : exponents(e) {}

  std::size_t size() const { return exponents.size(); }
  unsigned operator[](std::size_t i) const { return exponents[i]; }
  unsigned& operator[](std::size_t i) { return exponents[i]; }
  bool is_zero() const;
  std::string to_string() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
};

/// Every multi-index with 0 <= k_i <= bound_i, in lexicographic order.
std::vector<MultiIndex> grid(const MultiIndex& bound);

/* Sur(G^e, G^k):
 *   abelian      (h^e-1)(h^e-h)...(h^e-h^{k-1})
 *   non-abelian  e(e-1)...(e-k+1) |Aut|^k */
Integer sur_single(const SimpleType& t, unsigned e, unsigned k);

/// Product of sur_single over coordinates; InputError on length mismatch.
Integer sur_product(const TypeBasis& basis, const MultiIndex& e, const MultiIndex& k);

} // namespace momentforge

#endif // MOMENTFORGE_SURJCOUNT_HPP
