#ifndef MOMENTFORGE_FINAB_HPP
#define MOMENTFORGE_FINAB_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "momentforge/arith.hpp"
#include "momentforge/surjcount.hpp"

namespace momentforge {

/// Weakly decreasing positive parts.
using Partition = std::vector<unsigned>;

/* A finite abelian group in canonical form: for each prime p a partition
 * lambda_p, standing for the sum over p and i of Z/p^{lambda_{p,i}}.
 * Absent primes are trivial p-parts, so equal groups compare equal. */
class FinAbGroup {
public:
  FinAbGroup() = default;
  /// Sorts parts, drops empty partitions; InputError on non-primes or zero parts.
  explicit FinAbGroup(std::map<std::uint64_t, Partition> components);

  static FinAbGroup cyclic(std::uint64_t n);
  static FinAbGroup elementary(std::uint64_t p, unsigned rank);
  /// Direct sum of cyclic groups of the given orders, e.g. {4, 2, 3}.
  static FinAbGroup from_cyclic_orders(std::initializer_list<std::uint64_t> orders);

  const std::map<std::uint64_t, Partition>& components() const { return components_; }
  const Partition& partition(std::uint64_t p) const;
  std::set<std::uint64_t> primes() const;

  std::uint64_t order() const { return order_; }
  unsigned rank(std::uint64_t p) const { return static_cast<unsigned>(partition(p).size()); }
  bool is_trivial() const { return components_.empty(); }
  /// Every part equals 1, i.e. a product of F_p's.
  bool is_semisimple() const;

  /// Orders of the cyclic factors: primes ascending, parts descending.
  std::vector<std::uint64_t> cyclic_moduli() const;

  /// "Z/4 x Z/2 x Z/3", or "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) { return a.components_ == b.components_; }
  /// Orders by group order first, then lexicographically by (prime, partition).
  friend std::strong_ordering operator<=>(const FinAbGroup& a, const FinAbGroup& b);

private:
  std::map<std::uint64_t, Partition> components_;
  std::uint64_t order_ = 1;
};

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

/// A / IA, i.e. the sum over p of A/pA.
FinAbGroup semisimple_quotient(const FinAbGroup& a);

/// Finite-support measure on isomorphism classes; masses are nonnegative.
struct Measure {
  std::map<FinAbGroup, Rational> masses;

  /// Adds to the mass at g; InputError on negative mass.
  void add(const FinAbGroup& g, const Rational& mass);
  Rational mass(const FinAbGroup& g) const;
  Rational total() const;
};

/* Number of isomorphism classes of exact sequences 0 -> N -> M' -> M -> 0,
 * keyed by the middle term M'. Zero entries are omitted. */
struct ExtensionTable {
  std::map<FinAbGroup, Rational> entries;
};

/* Limits for the brute-force oracles. Defaults keep the whole oracle suite
 * within minutes; MOMENTFORGE_BUDGET overrides them, either as a single
 * integer (target order) or as "target=..,kernel=..,work=..". */
struct EnumerationBudget {
  std::uint64_t max_target_order = 1024;
  std::uint64_t max_kernel_source_order = 256;
  std::uint64_t max_work = std::uint64_t{1} << 27;

  static EnumerationBudget parse(const std::string& setting);
  static EnumerationBudget from_environment();
};

/// All groups on `primes` of order <= order_bound, sorted, no duplicates.
std::vector<FinAbGroup> enumerate_groups(const std::set<std::uint64_t>& primes, std::uint64_t order_bound);
/// All groups of exactly the given order; empty when order has a prime outside `primes`.
std::vector<FinAbGroup> groups_of_order(const std::set<std::uint64_t>& primes, std::uint64_t order);
/// All partitions of n, each weakly decreasing, in lexicographically decreasing order.
std::vector<Partition> partitions_of(unsigned n);

// Closed forms.
Integer hom_count(const FinAbGroup& a, const FinAbGroup& b);
Integer aut_count(const FinAbGroup& a);
/// Exact Sur(A, B) by Moebius inversion over subgroups of B containing the Frattini subgroup.
Integer sur_count(const FinAbGroup& a, const FinAbGroup& b);

/* Number of subgroups K of an abelian p-group of type lambda with K
 * elementary abelian of rank |lambda|-|mu| and quotient of type mu.
 * Zero unless lambda/mu is a vertical strip. */
Integer hall_number_vertical_strip(const Partition& lambda, const Partition& mu, std::uint64_t p);

// Brute-force oracles. All throw ResourceError beyond the budget.
Integer hom_count_bruteforce(const FinAbGroup& a, const FinAbGroup& b, const EnumerationBudget& budget = {});
Integer aut_count_bruteforce(const FinAbGroup& a, const EnumerationBudget& budget = {});
Integer sur_bruteforce(const FinAbGroup& a, const FinAbGroup& b, const EnumerationBudget& budget = {});

/// Basis [F_p for p in primes], primes ascending.
TypeBasis prime_basis(const std::set<std::uint64_t>& primes);

/* Exponents of A / IA over a basis of prime fields. InputError when the
 * basis has a non-prime h or misses a prime of A. */
MultiIndex semisimplify(const FinAbGroup& a, const TypeBasis& basis);
/// prod_i F_{p_i}^{k_i}.
FinAbGroup semisimple_group(const TypeBasis& basis, const MultiIndex& k);

/// Surjections X ->> M grouped by the isomorphism type of their kernel, by enumeration.
std::map<FinAbGroup, Integer> surjection_kernel_types(const FinAbGroup& x, const FinAbGroup& m,
                                                      const EnumerationBudget& budget = {});

/// #{(pi: X ->> M, f: (ker pi)/I ->> N)}, by enumeration. N must be semisimple.
Integer kernel_pair_count(const FinAbGroup& x, const FinAbGroup& m, const FinAbGroup& n,
                          const EnumerationBudget& budget = {});

/* Extension classes via Hall numbers:
 *   classes(M') = g^{M'}_{M,N} |Aut M| |Aut N| |Hom(M,N)| / |Aut M'|.
 * N must be semisimple; ConsistencyError on a non-integer entry. */
ExtensionTable extension_table(const FinAbGroup& n, const FinAbGroup& m);

/* Same table by orbit-stabilizer over enumerated pairs (iota, pi):
 *   classes(M') = P(N, M', M) |Hom(M,N)| / |Aut M'|. */
ExtensionTable extension_table_bruteforce(const FinAbGroup& n, const FinAbGroup& m,
                                          const EnumerationBudget& budget = {});

} // namespace momentforge

#endif // MOMENTFORGE_FINAB_HPP
