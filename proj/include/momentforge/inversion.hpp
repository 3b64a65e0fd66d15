#ifndef MOMENTFORGE_INVERSION_HPP
#define MOMENTFORGE_INVERSION_HPP

#include <map>
#include <vector>

#include "momentforge/arith.hpp"
#include "momentforge/qseries.hpp"
#include "momentforge/surjcount.hpp"

namespace momentforge {

/// Certified interval [lower, upper] with lower <= upper.
struct Bracket {
  Rational lower;
  Rational upper;

  /// InputError when lower > upper.
  static Bracket make(Rational lower, Rational upper);

  Rational width() const { return upper - lower; }
  Rational midpoint() const { return (lower + upper) / 2; }
  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  bool is_point() const { return lower == upper; }
  /// Both ends multiplied by factor > 0.
  Bracket scaled(const Rational& factor) const;

  friend bool operator==(const Bracket&, const Bracket&) = default;
};

/* Moments sum_e Sur(prod G_i^{e_i}, prod G_i^{k_i}) mu(e) for every k with
 * 0 <= k_i <= bound_i. Values are nonnegative; the measure they come from
 * need not be normalized. */
class MomentTable {
public:
  /// Validates shape, completeness and nonnegativity; InputError otherwise.
  MomentTable(TypeBasis basis, MultiIndex bound, std::map<MultiIndex, Rational> values);

  /// Convenience for a single type with moments[k] at index k.
  static MomentTable one_type(const SimpleType& t, const std::vector<Rational>& moments);

  const TypeBasis& basis() const { return basis_; }
  const MultiIndex& bound() const { return bound_; }
  const std::map<MultiIndex, Rational>& values() const { return values_; }
  const Rational& at(const MultiIndex& k) const;

  /// Same moments with types permuted: new type i is old type order[i].
  MomentTable reordered(const std::vector<std::size_t>& order) const;

private:
  TypeBasis basis_;
  MultiIndex bound_;
  std::map<MultiIndex, Rational> values_;
};

/// sum_{k=0}^{r} c_k moments(k) for a one-type table; InputError when r exceeds the bound.
Rational partial_sum(const MomentTable& one_type, unsigned r);

/* Bracket on the mass at e = 0 from truncations r <= r_max:
 * upper = min over even r of partial sums, lower = max over odd r (and 0).
 * Also intersected with [0, moments(0)]. */
Bracket invert_zero(const MomentTable& one_type, unsigned r_max);

/* Eliminates the types in basis order. Each stage turns the family over k_j
 * into an interval per remaining index, summing c_k against interval
 * endpoints chosen by the sign of c_k. Intervals are intersected with
 * [0, moments(0,..,0,rest)] at every stage boundary. InputError when the
 * bracket closes with lower > upper: no nonnegative measure has these
 * moments. */
Bracket multi_invert_zero(const MomentTable& moments, const MultiIndex& r_max);

} // namespace momentforge

#endif // MOMENTFORGE_INVERSION_HPP
