#include "momentforge/localize.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {

ModuleMomentTable::ModuleMomentTable(std::set<std::uint64_t> primes, std::uint64_t order_bound,
                                     std::map<FinAbGroup, Rational> values)
    : primes_(std::move(primes)), order_bound_(order_bound), values_(std::move(values))
{
  for (std::uint64_t p : primes_)
    if (!is_prime(p))
      throw InputError("non-prime " + std::to_string(p) + " in module moment table");
  if (order_bound_ == 0)
    throw InputError("module moment table order bound must be positive");
  for (const auto& [g, v] : values_) {
    for (std::uint64_t p : g.primes())
      if (!primes_.count(p))
        throw InputError("moment for " + g.to_string() + " uses prime " + std::to_string(p)
                         + " outside the table's prime set");
    if (g.order() > order_bound_)
      throw InputError("moment for " + g.to_string() + " exceeds order bound " + std::to_string(order_bound_));
    if (v < 0)
      throw InputError("negative moment " + to_string(v) + " for " + g.to_string());
  }
}

const Rational* ModuleMomentTable::find(const FinAbGroup& g) const
{
  auto it = values_.find(g);
  return it == values_.end() ? nullptr : &it->second;
}

std::vector<FinAbGroup> ModuleMomentTable::missing() const
{
  std::vector<FinAbGroup> out;
  for (const FinAbGroup& g : enumerate_groups(primes_, order_bound_))
    if (!values_.count(g))
      out.push_back(g);
  return out;
}

std::vector<FinAbGroup> required_middles(const FinAbGroup& m, const TypeBasis& basis, const MultiIndex& k_bound)
{
  std::set<FinAbGroup> middles;
  for (const MultiIndex& k : grid(k_bound))
    for (const auto& [middle, classes] : extension_table(semisimple_group(basis, k), m).entries)
      middles.insert(middle);
  return {middles.begin(), middles.end()};
}

namespace {

void check_basis_covers(const ModuleMomentTable& table, const FinAbGroup& m, const TypeBasis& basis)
{
  std::set<std::uint64_t> basis_primes;
  for (const SimpleType& t : basis.types) {
    if (!t.is_abelian() || !is_prime(t.h()))
      throw InputError("localization basis entry " + t.describe() + " is not a prime field");
    basis_primes.insert(t.h());
  }
  for (std::uint64_t p : table.primes())
    if (!basis_primes.count(p))
      throw InputError("basis is missing F_" + std::to_string(p) + " for the table's prime set");
  for (std::uint64_t p : m.primes())
    if (!table.primes().count(p))
      throw InputError("group " + m.to_string() + " uses prime " + std::to_string(p)
                       + " outside the table's prime set");
}

} // namespace

MomentTable localized_moments(const ModuleMomentTable& table, const FinAbGroup& m, const TypeBasis& basis,
                              const MultiIndex& k_bound)
{
  check_basis_covers(table, m, basis);
  if (k_bound.size() != basis.size())
    throw InputError("k bound " + k_bound.to_string() + " does not match basis size");

  struct Pending {
    MultiIndex k;
    FinAbGroup n;
    ExtensionTable ext;
  };
  std::vector<Pending> work;
  std::set<FinAbGroup> missing;
  for (const MultiIndex& k : grid(k_bound)) {
    FinAbGroup n = semisimple_group(basis, k);
    ExtensionTable ext = extension_table(n, m);
    for (const auto& [middle, classes] : ext.entries)
      if (middle.order() > table.order_bound() || !table.find(middle))
        missing.insert(middle);
    work.push_back({k, std::move(n), std::move(ext)});
  }
  if (!missing.empty()) {
    std::string names;
    for (const FinAbGroup& g : missing)
      names += (names.empty() ? "" : "; ") + g.to_string();
    throw InputError("module moment table lacks " + std::to_string(missing.size()) + " middle module(s) needed to localize at "
                     + m.to_string() + ": " + names);
  }

  std::map<MultiIndex, Rational> values;
  for (const Pending& item : work) {
    Rational sum = 0;
    for (const auto& [middle, classes] : item.ext.entries)
      sum += classes * *table.find(middle);
    values.emplace(item.k, sum / Rational(hom_count(m, item.n)));
  }
  return MomentTable(basis, k_bound, std::move(values));
}

Rational mu_local_direct(const Measure& mu, const FinAbGroup& m, const FinAbGroup& n, const EnumerationBudget& budget)
{
  if (!n.is_semisimple())
    throw InputError("mu_local_direct needs a semisimple N, got " + n.to_string());
  Rational total = 0;
  for (const auto& [x, mass] : mu.masses) {
    Integer count = 0;
    for (const auto& [kernel, surjections] : surjection_kernel_types(x, m, budget))
      if (semisimple_quotient(kernel) == n)
        count += surjections;
    total += mass * Rational(count);
  }
  return total;
}

Bracket reconstruct_probability(const ModuleMomentTable& table, const FinAbGroup& m, const TypeBasis& basis,
                                const MultiIndex& r_max)
{
  const MomentTable local = localized_moments(table, m, basis, r_max);
  return multi_invert_zero(local, r_max).scaled(make_rational(1, aut_count(m)));
}

} // namespace momentforge
