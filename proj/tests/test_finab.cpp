#include <doctest.h>

#include <set>

#include "momentforge/errors.hpp"
#include "momentforge/finab.hpp"
#include "momentforge/json_io.hpp"
#include "momentforge/surjcount.hpp"
#include "oracles.hpp"

using namespace momentforge;

namespace {

const FinAbGroup Z2 = FinAbGroup::cyclic(2);
const FinAbGroup Z4 = FinAbGroup::cyclic(4);
const FinAbGroup Z2xZ2 = FinAbGroup::elementary(2, 2);

} // namespace

TEST_CASE("canonical form")
{
  CHECK(FinAbGroup::from_cyclic_orders({2, 4, 3}) == FinAbGroup(std::map<std::uint64_t, Partition>{{2, {2, 1}}, {3, {1}}}));
  CHECK(FinAbGroup::cyclic(12) == FinAbGroup::from_cyclic_orders({4, 3}));
  CHECK(FinAbGroup::cyclic(1).is_trivial());
  CHECK(FinAbGroup::from_cyclic_orders({4, 2}).to_string() == "Z/4 x Z/2");
  CHECK(FinAbGroup().to_string() == "0");
  CHECK(FinAbGroup::from_cyclic_orders({4, 2, 3}).order() == 24);
  CHECK(Z2xZ2.is_semisimple());
  CHECK_FALSE(Z4.is_semisimple());
  CHECK_THROWS_AS(FinAbGroup(std::map<std::uint64_t, Partition>{{4, {1}}}), InputError);
  CHECK(semisimple_quotient(FinAbGroup::from_cyclic_orders({8, 2, 9})) == FinAbGroup::from_cyclic_orders({2, 2, 3}));
}

TEST_CASE("enumeration counts")
{
  CHECK(enumerate_groups({2}, 1) == std::vector<FinAbGroup>{FinAbGroup()});
  CHECK(enumerate_groups({2}, 8).size() == 7);
  CHECK(enumerate_groups({2, 3}, 12).size() == 13);
  for (unsigned n = 0; n <= 10; ++n) {
    // p(n): number of groups of order 2^n
    static const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    CHECK(partitions_of(n).size() == p[n]);
    CHECK(groups_of_order({2}, std::uint64_t{1} << n).size() == p[n]);
  }
}

TEST_CASE("enumeration has no duplicates and round-trips through JSON")
{
  const auto all = enumerate_groups({2, 3}, 72);
  std::set<FinAbGroup> unique(all.begin(), all.end());
  CHECK(unique.size() == all.size());
  for (const FinAbGroup& g : all) {
    CHECK(g.order() <= 72);
    CHECK(group_from_json(parse_json(to_json(g).dump(), "test")) == g);
  }
}

TEST_CASE("hom, aut and sur examples")
{
  CHECK(hom_count(Z4, Z2) == 2);
  CHECK(hom_count(Z2xZ2, FinAbGroup()) == 1);
  CHECK(hom_count(Z2xZ2, Z4) == 4);
  CHECK(aut_count(FinAbGroup()) == 1);
  CHECK(aut_count(Z2xZ2) == 6);
  CHECK(aut_count(FinAbGroup::from_cyclic_orders({4, 2})) == 8);
  CHECK(aut_count_bruteforce(FinAbGroup::from_cyclic_orders({4, 2})) == 8);
  CHECK(sur_bruteforce(Z2xZ2, Z2) == 3);
  CHECK(sur_bruteforce(Z2, Z4) == 0);
  CHECK(sur_bruteforce(Z4, Z2) == 1);
  CHECK(sur_count(Z4, Z2) == 1);
}

TEST_CASE("closed forms agree with naive enumeration on small groups")
{
  const auto groups = enumerate_groups({2, 3}, 16);
  for (const FinAbGroup& a : groups) {
    CHECK(aut_count(a) == Integer(oracle::aut_count(a)));
    for (const FinAbGroup& b : groups) {
      if (a.order() * b.order() > 128)
        continue;
      CHECK(hom_count(a, b) == Integer(oracle::hom_count(a, b)));
      CHECK(sur_count(a, b) == Integer(oracle::sur_count(a, b)));
      CHECK(sur_bruteforce(a, b) == sur_count(a, b));
    }
  }
}

TEST_CASE("hom and aut agree with enumeration up to order 64 on {2} and 81 on {3}")
{
  for (std::set<std::uint64_t> primes : {std::set<std::uint64_t>{2}, std::set<std::uint64_t>{3}}) {
    const std::uint64_t bound = primes.count(2) ? 64 : 81;
    const auto groups = enumerate_groups(primes, bound);
    for (const FinAbGroup& a : groups) {
      CHECK(aut_count(a) == aut_count_bruteforce(a));
      for (const FinAbGroup& b : groups)
        CHECK(hom_count(a, b) == hom_count_bruteforce(a, b));
    }
  }
}

TEST_CASE("sur_count on larger groups agrees with the enumeration oracle")
{
  for (const FinAbGroup& a : enumerate_groups({2, 3}, 144))
    for (const FinAbGroup& b : enumerate_groups({2, 3}, 24))
      CHECK(sur_count(a, b) == sur_bruteforce(a, b));
}

TEST_CASE("semisimplification")
{
  const TypeBasis b2 = prime_basis({2});
  const TypeBasis b23 = prime_basis({2, 3});
  CHECK(semisimplify(FinAbGroup(), b23) == MultiIndex{0, 0});
  CHECK(semisimplify(FinAbGroup::from_cyclic_orders({8, 2}), b2) == MultiIndex{2});
  CHECK(semisimplify(FinAbGroup::from_cyclic_orders({4, 3}), b23) == MultiIndex{1, 1});
  CHECK_THROWS_AS(semisimplify(FinAbGroup::cyclic(3), b2), InputError);
  CHECK(semisimple_group(b23, {2, 1}) == FinAbGroup::from_cyclic_orders({2, 2, 3}));
}

TEST_CASE("semisimplification respects surjections onto semisimple groups")
{
  const TypeBasis basis = prime_basis({2, 3});
  for (const FinAbGroup& x : enumerate_groups({2, 3}, 72))
    for (const MultiIndex& k : grid({3, 2})) {
      const FinAbGroup n = semisimple_group(basis, k);
      if (n.order() > x.order())
        continue;
      CHECK(sur_bruteforce(x, n) == sur_product(basis, semisimplify(x, basis), k));
    }
}

TEST_CASE("kernel type examples")
{
  CHECK(kernel_pair_count(Z4, Z2, Z2) == 1);
  CHECK(kernel_pair_count(Z2, Z2, FinAbGroup()) == 1);
  CHECK(kernel_pair_count(Z2xZ2, Z2, Z2) == 3);
  const auto kernels = surjection_kernel_types(FinAbGroup::from_cyclic_orders({4, 2}), Z2);
  Integer total = 0;
  for (const auto& [k, n] : kernels)
    total += n;
  CHECK(total == sur_count(FinAbGroup::from_cyclic_orders({4, 2}), Z2));
  CHECK(kernels.at(Z4) == 2);
  CHECK(kernels.at(Z2xZ2) == 1);
}

TEST_CASE("extension table examples")
{
  const ExtensionTable t = extension_table(Z2, Z2);
  CHECK(t.entries == std::map<FinAbGroup, Rational>{{Z4, 1}, {Z2xZ2, 1}});
  CHECK(extension_table_bruteforce(Z2, Z2).entries == t.entries);
  const FinAbGroup m = FinAbGroup::from_cyclic_orders({4, 3});
  CHECK(extension_table(FinAbGroup(), m).entries == std::map<FinAbGroup, Rational>{{m, 1}});
  CHECK(extension_table(Z2, FinAbGroup()).entries == std::map<FinAbGroup, Rational>{{Z2, 1}});
  CHECK_THROWS_AS(extension_table(Z4, Z2), InputError);
}

TEST_CASE("extension tables: closed form vs enumeration, orbit-stabilizer consistency")
{
  for (const FinAbGroup& n : enumerate_groups({2, 3}, 36)) {
    if (!n.is_semisimple())
      continue;
    for (const FinAbGroup& m : enumerate_groups({2, 3}, 36 / n.order())) {
      const ExtensionTable t = extension_table(n, m);
      CHECK(t.entries == extension_table_bruteforce(n, m).entries);
      for (const auto& [middle, classes] : t.entries) {
        CHECK(classes.get_den() == 1);
        CHECK(classes > 0);
        // classes * |Aut M'| / |Hom(M,N)| recovers P, the number of exact pairs (iota, pi)
        const Rational p = classes * Rational(aut_count(middle)) / Rational(hom_count(m, n));
        const auto kernels = surjection_kernel_types(middle, m);
        CHECK(p == Rational(kernels.at(n) * aut_count(n)));
      }
    }
  }
}

TEST_CASE("Hall numbers for small vertical strips")
{
  // Z/4 has one subgroup Z/2 with quotient Z/2; Z/2^2 has three
  CHECK(hall_number_vertical_strip({2}, {1}, 2) == 1);
  CHECK(hall_number_vertical_strip({1, 1}, {1}, 2) == 3);
  CHECK(hall_number_vertical_strip({1, 1}, {1}, 3) == 4);
  CHECK(hall_number_vertical_strip({2}, {}, 2) == 0);
}

TEST_CASE("budgets")
{
  EnumerationBudget tiny;
  tiny.max_target_order = 4;
  CHECK_THROWS_AS(sur_bruteforce(FinAbGroup::cyclic(8), FinAbGroup::cyclic(8), tiny), ResourceError);
  tiny = EnumerationBudget{};
  tiny.max_work = 10;
  CHECK_THROWS_AS(aut_count_bruteforce(FinAbGroup::elementary(2, 4), tiny), ResourceError);
  const EnumerationBudget parsed = EnumerationBudget::parse("target=64,kernel=32,work=1000");
  CHECK(parsed.max_target_order == 64);
  CHECK(parsed.max_kernel_source_order == 32);
  CHECK(parsed.max_work == 1000);
  CHECK(EnumerationBudget::parse("500").max_target_order == 500);
  CHECK_THROWS_AS(EnumerationBudget::parse("bogus=1"), InputError);
}

TEST_CASE("measures")
{
  Measure mu;
  mu.add(FinAbGroup(), Rational(1, 2));
  mu.add(Z2, Rational(1, 2));
  mu.add(Z4, 0);
  CHECK(mu.total() == 1);
  CHECK(mu.mass(Z4) == 0);
  CHECK(mu.masses.size() == 2);
  CHECK_THROWS_AS(mu.add(Z2, -1), InputError);
}
