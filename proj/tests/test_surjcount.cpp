#include <doctest.h>

#include "momentforge/errors.hpp"
#include "momentforge/finab.hpp"
#include "momentforge/nonab_oracle.hpp"
#include "momentforge/surjcount.hpp"
#include "oracles.hpp"

using namespace momentforge;

TEST_CASE("single-type examples")
{
  CHECK(sur_single(SimpleType::abelian(2), 2, 1) == 3);
  CHECK(sur_single(SimpleType::abelian(5), 0, 0) == 1);
  CHECK(sur_single(SimpleType::non_abelian(120), 0, 0) == 1);
  CHECK(sur_single(SimpleType::non_abelian(120), 2, 1) == 240);
  CHECK(sur_single(SimpleType::non_abelian(120), 2, 2) == 28800);
}

TEST_CASE("abelian count matches surjective matrices")
{
  for (std::uint64_t h : {2, 3})
    for (unsigned e = 0; e <= 4; ++e)
      for (unsigned k = 0; k <= 4; ++k)
        CHECK(sur_single(SimpleType::abelian(h), e, k) == Integer(oracle::surjective_matrices(h, e, k)));
}

TEST_CASE("non-abelian count matches A5 enumeration")
{
  for (unsigned e = 0; e <= 2; ++e)
    for (unsigned k = 0; k <= 2; ++k)
      CHECK(sur_single(SimpleType::non_abelian(120), e, k) == sur_a5_bruteforce(e, k));
}

TEST_CASE("vanishing and monotonicity")
{
  for (const SimpleType& t : {SimpleType::abelian(2), SimpleType::abelian(4), SimpleType::non_abelian(60)})
    for (unsigned k = 0; k <= 6; ++k)
      for (unsigned e = 0; e <= 6; ++e) {
        CHECK((sur_single(t, e, k) == 0) == (k > e));
        if (e > 0)
          CHECK(sur_single(t, e - 1, k) <= sur_single(t, e, k));
      }
}

TEST_CASE("product examples")
{
  const TypeBasis basis{{SimpleType::abelian(2), SimpleType::abelian(3)}};
  CHECK(sur_product(basis, {2, 1}, {1, 1}) == 6);
  CHECK(sur_product(basis, {0, 0}, {0, 0}) == 1);
  CHECK(sur_product(basis, {1, 0}, {0, 1}) == 0);
  CHECK_THROWS_AS(sur_product(basis, {1}, {0, 1}), InputError);
}

TEST_CASE("product splitting matches group enumeration")
{
  const TypeBasis basis{{SimpleType::abelian(2), SimpleType::abelian(3)}};
  for (const MultiIndex& e : grid({2, 2}))
    for (const MultiIndex& k : grid({2, 2})) {
      const FinAbGroup a = semisimple_group(basis, e);
      const FinAbGroup b = semisimple_group(basis, k);
      CHECK(sur_product(basis, e, k) == Integer(oracle::sur_count(a, b)));
    }
}

TEST_CASE("grid enumerates every index")
{
  CHECK(grid({}).size() == 1);
  CHECK(grid({2, 1}).size() == 6);
  CHECK(grid({2, 1}).front() == MultiIndex{0, 0});
  CHECK(grid({2, 1}).back() == MultiIndex{2, 1});
  CHECK(MultiIndex{1, 2}.to_string() == "(1,2)");
}
