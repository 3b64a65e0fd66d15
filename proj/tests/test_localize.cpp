#include <doctest.h>

#include <random>

#include "momentforge/errors.hpp"
#include "momentforge/localize.hpp"
#include "oracles.hpp"

using namespace momentforge;

namespace {

const FinAbGroup Z2 = FinAbGroup::cyclic(2);
const FinAbGroup Z4 = FinAbGroup::cyclic(4);

Measure half_half()
{
  Measure mu;
  mu.add(FinAbGroup(), Rational(1, 2));
  mu.add(Z2, Rational(1, 2));
  return mu;
}

// Exact module moments of mu for the given groups, by enumeration of surjections.
ModuleMomentTable moments_of(const Measure& mu, const std::set<std::uint64_t>& primes, std::uint64_t bound,
                             const std::vector<FinAbGroup>& groups)
{
  std::map<FinAbGroup, Rational> values;
  for (const FinAbGroup& g : groups) {
    Rational v = 0;
    for (const auto& [x, mass] : mu.masses)
      if (g.order() <= x.order())
        v += mass * Rational(sur_bruteforce(x, g));
    values[g] = v;
  }
  return ModuleMomentTable(primes, bound, values);
}

ModuleMomentTable moments_of(const Measure& mu, const std::set<std::uint64_t>& primes, std::uint64_t bound)
{
  return moments_of(mu, primes, bound, enumerate_groups(primes, bound));
}

Measure random_measure(std::mt19937_64& rng, std::size_t support)
{
  const auto candidates = enumerate_groups({2, 3}, 72);
  Measure mu;
  while (mu.masses.size() < support) {
    const FinAbGroup& x = candidates[rng() % candidates.size()];
    if (72 % x.order() == 0)
      mu.add(x, oracle::random_rational(rng, 9, 5) + Rational(1, 10));
  }
  return mu;
}

} // namespace

TEST_CASE("localized moments examples")
{
  const ModuleMomentTable table = moments_of(half_half(), {2}, 8);
  const TypeBasis basis = prime_basis({2});
  const MomentTable at_trivial = localized_moments(table, FinAbGroup(), basis, {1});
  CHECK(at_trivial.at({0}) == 1);
  CHECK(at_trivial.at({1}) == Rational(1, 2));
  const MomentTable at_z2 = localized_moments(table, Z2, basis, {1});
  CHECK(at_z2.at({0}) == Rational(1, 2));
  CHECK(at_z2.at({1}) == 0);
  for (const FinAbGroup& m : enumerate_groups({2}, 8))
    CHECK(localized_moments(table, m, basis, {0}).at({0}) == *table.find(m));
}

TEST_CASE("missing middles are reported together")
{
  const ModuleMomentTable table = moments_of(half_half(), {2}, 4);
  try {
    localized_moments(table, Z2, prime_basis({2}), {2});
    FAIL("expected an input error");
  } catch (const InputError& e) {
    const std::string what = e.what();
    CHECK(what.find("Z/4 x Z/2") != std::string::npos);
    CHECK(what.find("Z/2 x Z/2 x Z/2") != std::string::npos);
  }
  CHECK(required_middles(Z2, prime_basis({2}), {1})
        == std::vector<FinAbGroup>{Z2, FinAbGroup::elementary(2, 2), Z4});
}

TEST_CASE("direct localized measure examples")
{
  const Measure mu = half_half();
  CHECK(mu_local_direct(mu, Z2, FinAbGroup()) == Rational(1, 2));
  CHECK(mu_local_direct(mu, FinAbGroup(), Z2) == Rational(1, 2));
  CHECK(mu_local_direct(mu, Z4, FinAbGroup()) == 0);
  CHECK(mu_local_direct(mu, Z4, Z2) == 0);
}

TEST_CASE("localized moments agree with the direct definition")
{
  std::mt19937_64 rng(21);
  const TypeBasis basis = prime_basis({2, 3});
  for (int trial = 0; trial < 4; ++trial) {
    const Measure mu = random_measure(rng, 5);
    const ModuleMomentTable table = moments_of(mu, {2, 3}, 72);
    for (const FinAbGroup& m : enumerate_groups({2, 3}, 12)) {
      const MultiIndex k_bound{static_cast<unsigned>(m.order() <= 6 ? 2 : 1), 1};
      const MomentTable local = localized_moments(table, m, basis, k_bound);
      std::map<MultiIndex, Rational> direct;
      for (const MultiIndex& j : grid({3, 2})) {
        const FinAbGroup n_prime = semisimple_group(basis, j);
        const Rational mass = mu_local_direct(mu, m, n_prime);
        for (const MultiIndex& k : grid(k_bound))
          direct[k] += mass * Rational(sur_product(basis, j, k));
      }
      for (const MultiIndex& k : grid(k_bound))
        CHECK(local.at(k) == direct[k]);
      CHECK(mu_local_direct(mu, m, FinAbGroup()) == Rational(aut_count(m)) * mu.mass(m));
    }
  }
}

TEST_CASE("reconstruction examples")
{
  const ModuleMomentTable table = moments_of(half_half(), {2}, 16);
  const TypeBasis basis = prime_basis({2});
  CHECK(reconstruct_probability(table, Z2, basis, {3}) == Bracket{Rational(1, 2), Rational(1, 2)});
  CHECK(reconstruct_probability(table, Z4, basis, {2}) == Bracket{0, 0});
  CHECK(reconstruct_probability(table, FinAbGroup(), basis, {3}) == Bracket{Rational(1, 2), Rational(1, 2)});
}

TEST_CASE("exact recovery of a synthetic measure")
{
  std::mt19937_64 rng(22);
  const TypeBasis basis = prime_basis({2, 3});
  const Measure mu = random_measure(rng, 6);
  for (const FinAbGroup& m : enumerate_groups({2, 3}, 12)) {
    const MultiIndex r_max{4, 3};
    const auto middles = required_middles(m, basis, r_max);
    std::uint64_t bound = 1;
    for (const FinAbGroup& g : middles)
      bound = std::max(bound, g.order());
    const ModuleMomentTable table = moments_of(mu, {2, 3}, bound, middles);
    const Bracket b = reconstruct_probability(table, m, basis, r_max);
    CHECK(b == Bracket{mu.mass(m), mu.mass(m)});
    CHECK(reconstruct_probability(table, m, basis, {1, 1}).contains(mu.mass(m)));
  }
}

TEST_CASE("Cohen-Lenstra fixed point")
{
  for (std::uint64_t p : {2, 3}) {
    const TypeBasis basis = prime_basis({p});
    const double eta = oracle::euler_product(static_cast<double>(p));
    for (const FinAbGroup& m : {FinAbGroup(), FinAbGroup::cyclic(p), FinAbGroup::cyclic(p * p)}) {
      std::map<FinAbGroup, Rational> ones;
      std::uint64_t bound = 1;
      for (const FinAbGroup& g : required_middles(m, basis, {12})) {
        ones[g] = 1;
        bound = std::max(bound, g.order());
      }
      const ModuleMomentTable table({p}, bound, ones);
      const Bracket b = reconstruct_probability(table, m, basis, {12});
      const double expected = eta / to_double(Rational(aut_count(m)));
      CHECK(to_double(b.width()) < 1e-4);
      // the 30-factor product overshoots the limit by about 3e-10
      CHECK(to_double(b.lower) <= expected + 1e-9);
      CHECK(to_double(b.upper) >= expected - 1e-9);
    }
  }
}

TEST_CASE("table validation")
{
  CHECK_THROWS_AS(ModuleMomentTable({4}, 8, {}), InputError);
  CHECK_THROWS_AS(ModuleMomentTable({2}, 8, {{FinAbGroup::cyclic(3), 1}}), InputError);
  CHECK_THROWS_AS(ModuleMomentTable({2}, 8, {{FinAbGroup::cyclic(16), 1}}), InputError);
  CHECK_THROWS_AS(ModuleMomentTable({2}, 8, {{Z2, -1}}), InputError);
  const ModuleMomentTable partial({2}, 4, {{FinAbGroup(), 1}, {Z2, 1}});
  CHECK(partial.missing() == std::vector<FinAbGroup>{FinAbGroup::elementary(2, 2), Z4});
  CHECK_THROWS_AS(localized_moments(partial, FinAbGroup::cyclic(3), prime_basis({2}), {1}), InputError);
}
