#ifndef MOMENTFORGE_LOCALIZE_HPP
#define MOMENTFORGE_LOCALIZE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "momentforge/finab.hpp"
#include "momentforge/inversion.hpp"

namespace momentforge {

/* Module moments mu~(M') = integral of Sur(X, M') dmu(X), for groups M'
 * supported on `primes` with |M'| <= order_bound. Entries may be partial;
 * consumers check for the entries they need. */
class ModuleMomentTable {
public:
  /// InputError on non-primes, groups off the prime set or over the bound, negative values.
  ModuleMomentTable(std::set<std::uint64_t> primes, std::uint64_t order_bound,
                    std::map<FinAbGroup, Rational> values);

  const std::set<std::uint64_t>& primes() const { return primes_; }
  std::uint64_t order_bound() const { return order_bound_; }
  const std::map<FinAbGroup, Rational>& values() const { return values_; }
  const Rational* find(const FinAbGroup& g) const;

  /// Groups on the prime set within the bound that have no entry.
  std::vector<FinAbGroup> missing() const;

private:
  std::set<std::uint64_t> primes_;
  std::uint64_t order_bound_;
  std::map<FinAbGroup, Rational> values_;
};

/// Middle terms M' needed to localize at M for every k <= k_bound.
std::vector<FinAbGroup> required_middles(const FinAbGroup& m, const TypeBasis& basis, const MultiIndex& k_bound);

/* Moments of mu^M at N_k = prod F_{p_i}^{k_i}:
 *   sum over extension middles M' of classes(M') mu~(M') / |Hom(M, N_k)|.
 * InputError listing every missing middle when the table is incomplete. */
MomentTable localized_moments(const ModuleMomentTable& table, const FinAbGroup& m, const TypeBasis& basis,
                              const MultiIndex& k_bound);

/// mu^M(N) = sum_X mu(X) #{pi: X ->> M with (ker pi)/I ~ N}, by enumeration.
Rational mu_local_direct(const Measure& mu, const FinAbGroup& m, const FinAbGroup& n,
                         const EnumerationBudget& budget = {});

/// Bracket on mu(M): inversion of the localized moments, divided by |Aut M|.
Bracket reconstruct_probability(const ModuleMomentTable& table, const FinAbGroup& m, const TypeBasis& basis,
                                const MultiIndex& r_max);

} // namespace momentforge

#endif // MOMENTFORGE_LOCALIZE_HPP
