#include "momentforge/inversion.hpp"

#include <optional>
#include <set>

#include "momentforge/errors.hpp"

namespace momentforge {

Bracket Bracket::make(Rational lower, Rational upper)
{
  if (lower > upper)
    throw InputError("empty bracket [" + to_string(lower) + ", " + to_string(upper) + "]");
  return Bracket{std::move(lower), std::move(upper)};
}

Bracket Bracket::scaled(const Rational& factor) const
{
  if (factor <= 0)
    throw InputError("bracket scale factor must be positive");
  return Bracket{lower * factor, upper * factor};
}

MomentTable::MomentTable(TypeBasis basis, MultiIndex bound, std::map<MultiIndex, Rational> values)
    : basis_(std::move(basis)), bound_(std::move(bound)), values_(std::move(values))
{
  if (bound_.size() != basis_.size())
    throw InputError("moment table bound " + bound_.to_string() + " does not match basis size "
                     + std::to_string(basis_.size()));
  for (const auto& [k, v] : values_) {
    if (k.size() != basis_.size())
      throw InputError("moment index " + k.to_string() + " has the wrong length");
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i] > bound_[i])
        throw InputError("moment index " + k.to_string() + " lies outside bound " + bound_.to_string());
    if (v < 0)
      throw InputError("negative moment " + to_string(v) + " at " + k.to_string());
  }
  for (const MultiIndex& k : grid(bound_))
    if (!values_.count(k))
      throw InputError("moment table is missing index " + k.to_string());
}

MomentTable MomentTable::one_type(const SimpleType& t, const std::vector<Rational>& moments)
{
  if (moments.empty())
    throw InputError("one-type moment table needs at least moments(0)");
  std::map<MultiIndex, Rational> values;
  for (unsigned k = 0; k < moments.size(); ++k)
    values.emplace(MultiIndex{k}, moments[k]);
  return MomentTable(TypeBasis{{t}}, MultiIndex{static_cast<unsigned>(moments.size() - 1)}, std::move(values));
}

const Rational& MomentTable::at(const MultiIndex& k) const
{
  auto it = values_.find(k);
  if (it == values_.end())
    throw InputError("moment index " + k.to_string() + " not in table");
  return it->second;
}

MomentTable MomentTable::reordered(const std::vector<std::size_t>& order) const
{
  if (order.size() != basis_.size() || std::set<std::size_t>(order.begin(), order.end()).size() != order.size())
    throw InputError("elimination order must be a permutation of the basis positions");
  TypeBasis basis;
  MultiIndex bound;
  for (std::size_t i : order) {
    if (i >= basis_.size())
      throw InputError("elimination order entry " + std::to_string(i) + " out of range");
    basis.types.push_back(basis_[i]);
    bound.exponents.push_back(bound_[i]);
  }
  std::map<MultiIndex, Rational> values;
  for (const auto& [k, v] : values_) {
    MultiIndex nk;
    for (std::size_t i : order)
      nk.exponents.push_back(k[i]);
    values.emplace(std::move(nk), v);
  }
  return MomentTable(std::move(basis), std::move(bound), std::move(values));
}

namespace {

void check_one_type(const MomentTable& t)
{
  if (t.basis().size() != 1)
    throw InputError("expected a one-type moment table, basis has " + std::to_string(t.basis().size()) + " types");
}

} // namespace

Rational partial_sum(const MomentTable& one_type, unsigned r)
{
  check_one_type(one_type);
  if (r > one_type.bound()[0])
    throw InputError("truncation " + std::to_string(r) + " exceeds available moments up to "
                     + std::to_string(one_type.bound()[0]));
  Rational s = 0;
  for (unsigned k = 0; k <= r; ++k)
    s += inversion_coefficient(one_type.basis()[0], k) * one_type.at(MultiIndex{k});
  return s;
}

Bracket invert_zero(const MomentTable& one_type, unsigned r_max)
{
  check_one_type(one_type);
  return multi_invert_zero(one_type, MultiIndex{r_max});
}

Bracket multi_invert_zero(const MomentTable& moments, const MultiIndex& r_max)
{
  const std::size_t m = moments.basis().size();
  if (r_max.size() != m)
    throw InputError("truncation vector " + r_max.to_string() + " does not match basis size " + std::to_string(m));
  for (std::size_t i = 0; i < m; ++i)
    if (r_max[i] > moments.bound()[i])
      throw InputError("truncation " + r_max.to_string() + " exceeds available moments up to "
                       + moments.bound().to_string());
  if (m == 0) {
    const Rational& v = moments.at(MultiIndex{});
    return Bracket{v, v};
  }

  // Intervals indexed by the not-yet-eliminated coordinates j..m-1.
  std::map<MultiIndex, Bracket> current;
  for (const MultiIndex& k : grid(r_max)) {
    const Rational& v = moments.at(k);
    current.emplace(k, Bracket{v, v});
  }

  for (std::size_t j = 0; j < m; ++j) {
    const SimpleType& type = moments.basis()[j];
    std::vector<Rational> coeffs;
    for (unsigned k = 0; k <= r_max[j]; ++k)
      coeffs.push_back(inversion_coefficient(type, k));

    const MultiIndex rest_bound(std::vector<unsigned>(r_max.exponents.begin() + j + 1, r_max.exponents.end()));
    std::map<MultiIndex, Bracket> next;
    for (const MultiIndex& rest : grid(rest_bound)) {
      Rational up = 0;
      Rational lo = 0;
      std::optional<Rational> upper;
      Rational lower = 0;
      MultiIndex key;
      key.exponents.reserve(rest.size() + 1);
      for (unsigned k = 0; k <= r_max[j]; ++k) {
        key.exponents.assign(1, k);
        key.exponents.insert(key.exponents.end(), rest.exponents.begin(), rest.exponents.end());
        const Bracket& iv = current.at(key);
        if (coeffs[k] > 0) {
          up += coeffs[k] * iv.upper;
          lo += coeffs[k] * iv.lower;
        } else {
          up += coeffs[k] * iv.lower;
          lo += coeffs[k] * iv.upper;
        }
        if (k % 2 == 0) {
          if (!upper || up < *upper)
            upper = up;
        } else if (lo > lower) {
          lower = lo;
        }
      }
      // The restricted measure's moment never exceeds the full one with the
      // eliminated coordinates at zero.
      MultiIndex full(std::vector<unsigned>(j + 1, 0));
      full.exponents.insert(full.exponents.end(), rest.exponents.begin(), rest.exponents.end());
      const Rational& cap = moments.at(full);
      if (cap < *upper)
        upper = cap;
      if (lower > *upper)
        throw InputError("moments are inconsistent with any nonnegative measure: stage " + std::to_string(j)
                         + " at " + rest.to_string() + " gives [" + to_string(lower) + ", " + to_string(*upper)
                         + "]");
      next.emplace(rest, Bracket{lower, *upper});
    }
    current = std::move(next);
  }
  return current.at(MultiIndex{});
}

} // namespace momentforge
