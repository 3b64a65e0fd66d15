#include "momentforge/verify.hpp"

#include <sstream>

#include "momentforge/errors.hpp"
#include "momentforge/inversion.hpp"
#include "momentforge/localize.hpp"
#include "momentforge/nonab_oracle.hpp"
#include "momentforge/sampler.hpp"
#include "momentforge/surjcount.hpp"

namespace momentforge {

namespace {

// Rank of a k x e matrix over F_p, entries given row-major.
unsigned rank_mod_p(std::vector<std::uint64_t> m, unsigned rows, unsigned cols, std::uint64_t p)
{
  unsigned rank = 0;
  for (unsigned c = 0; c < cols && rank < rows; ++c) {
    unsigned pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    for (unsigned j = 0; j < cols; ++j)
      std::swap(m[pivot * cols + j], m[rank * cols + j]);
    std::uint64_t inv = 1;
    for (std::uint64_t x = 1; x < p; ++x)
      if (m[rank * cols + c] * x % p == 1)
        inv = x;
    for (unsigned i = 0; i < rows; ++i) {
      if (i == rank || m[i * cols + c] == 0)
        continue;
      const std::uint64_t f = m[i * cols + c] * inv % p;
      for (unsigned j = 0; j < cols; ++j)
        m[i * cols + j] = (m[i * cols + j] + p * p - f * m[rank * cols + j] % p) % p;
    }
    ++rank;
  }
  return rank;
}

Integer surjective_matrix_count(std::uint64_t p, unsigned e, unsigned k)
{
  const unsigned cells = e * k;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < cells; ++i)
    total *= p;
  Integer count = 0;
  std::vector<std::uint64_t> m(cells);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& x : m) {
      x = c % p;
      c /= p;
    }
    if (rank_mod_p(m, k, e, p) == k)
      ++count;
  }
  return count;
}

CheckResult check(std::string name, const std::function<std::string()>& body)
{
  CheckResult r{std::move(name), false, ""};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
    if (r.passed)
      r.detail = "ok";
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& progress)
{
  std::vector<CheckResult> results;
  auto record = [&](CheckResult r) {
    if (progress)
      progress(r);
    results.push_back(std::move(r));
  };
  const unsigned mat_max = options.quick ? 3 : 4;
  const std::uint64_t ext_bound = options.quick ? 24 : 72;
  const unsigned trials = options.quick ? 40 : 200;

  record(check("abelian surjection count vs matrix enumeration", [&]() -> std::string {
    for (std::uint64_t h : {2, 3})
      for (unsigned e = 0; e <= mat_max; ++e)
        for (unsigned k = 0; k <= mat_max; ++k)
          if (sur_single(SimpleType::abelian(h), e, k) != surjective_matrix_count(h, e, k))
            return "mismatch at h=" + std::to_string(h) + " e=" + std::to_string(e) + " k=" + std::to_string(k);
    return "";
  }));

  record(check("product splitting vs group enumeration", [&]() -> std::string {
    const TypeBasis basis = prime_basis({2, 3});
    for (const MultiIndex& e : grid(MultiIndex{2, 2}))
      for (const MultiIndex& k : grid(MultiIndex{2, 2}))
        if (sur_product(basis, e, k)
            != sur_bruteforce(semisimple_group(basis, e), semisimple_group(basis, k), options.budget))
          return "mismatch at e=" + e.to_string() + " k=" + k.to_string();
    return "";
  }));

  record(check("non-abelian surjection count vs A5 enumeration", [&]() -> std::string {
    const SimpleType a5 = SimpleType::non_abelian(120);
    for (unsigned e = 0; e <= 2; ++e)
      for (unsigned k = 0; k <= 2; ++k)
        if (sur_single(a5, e, k) != sur_a5_bruteforce(e, k))
          return "mismatch at e=" + std::to_string(e) + " k=" + std::to_string(k);
    if (hom_a5_count(1) != 121)
      return "|Hom(A5, A5)| != 121";
    return "";
  }));

  record(check("q-binomial Pascal and telescoping identities", [&]() -> std::string {
    for (std::uint64_t h : {2, 3, 5})
      for (unsigned e = 1; e <= 8; ++e)
        for (unsigned r = 0; r <= 8; ++r) {
          if (r <= e && r > 0 && q_binomial(e, r, h) != ipow(h, r) * q_binomial(e - 1, r, h) + q_binomial(e - 1, r - 1, h))
            return "Pascal fails at e=" + std::to_string(e) + " k=" + std::to_string(r);
          Integer lhs = 0;
          for (unsigned k = 0; k <= r; ++k) {
            Integer term = q_binomial(e, k, h) * ipow(h, k * (k - (k > 0)) / 2);
            lhs += k % 2 ? -term : term;
          }
          Integer rhs = q_binomial(e - 1, r, h) * ipow(h, (r + 1) * r / 2);
          if (r % 2)
            rhs = -rhs;
          if (lhs != rhs)
            return "telescoping fails at e=" + std::to_string(e) + " r=" + std::to_string(r);
        }
    return "";
  }));

  record(check("closed-form counts vs enumeration", [&]() -> std::string {
    const auto groups = enumerate_groups({2, 3}, 36);
    for (const FinAbGroup& a : groups) {
      if (aut_count(a) != aut_count_bruteforce(a, options.budget))
        return "aut mismatch at " + a.to_string();
      for (const FinAbGroup& b : groups) {
        if (hom_count(a, b) != hom_count_bruteforce(a, b, options.budget))
          return "hom mismatch at " + a.to_string() + " -> " + b.to_string();
        if (sur_count(a, b) != sur_bruteforce(a, b, options.budget))
          return "sur mismatch at " + a.to_string() + " -> " + b.to_string();
      }
    }
    return "";
  }));

  record(check("extension tables: Hall numbers vs enumeration", [&]() -> std::string {
    for (const FinAbGroup& n : enumerate_groups({2, 3}, ext_bound)) {
      if (!n.is_semisimple())
        continue;
      for (const FinAbGroup& m : enumerate_groups({2, 3}, ext_bound / n.order()))
        if (extension_table(n, m).entries != extension_table_bruteforce(n, m, options.budget).entries)
          return "table mismatch at N=" + n.to_string() + " M=" + m.to_string();
    }
    return "";
  }));

  record(check("extension-sum identity", [&]() -> std::string {
    const auto all = enumerate_groups({2, 3}, ext_bound);
    for (const FinAbGroup& n : all) {
      if (!n.is_semisimple())
        continue;
      for (const FinAbGroup& m : enumerate_groups({2, 3}, ext_bound / n.order())) {
        const ExtensionTable table = extension_table_bruteforce(n, m, options.budget);
        const Rational homs(hom_count(m, n));
        for (const FinAbGroup& x : all) {
          if (ext_bound % x.order() != 0)
            continue;
          Rational via_table = 0;
          for (const auto& [middle, classes] : table.entries)
            via_table += classes * Rational(sur_bruteforce(x, middle, options.budget));
          if (via_table / homs != Rational(kernel_pair_count(x, m, n, options.budget)))
            return "mismatch at X=" + x.to_string() + " M=" + m.to_string() + " N=" + n.to_string();
        }
      }
    }
    return "";
  }));

  record(check("bracketing soundness on random measures", [&]() -> std::string {
    CounterRng rng(options.seed, 0x62726b74);
    const TypeBasis two = prime_basis({2, 3});
    for (unsigned trial = 0; trial < trials; ++trial) {
      const bool one_type = trial % 2 == 0;
      const TypeBasis basis = one_type ? TypeBasis{{SimpleType::abelian(trial % 4 == 0 ? 2 : 3)}} : two;
      const MultiIndex support_bound = one_type ? MultiIndex{8} : MultiIndex{2, 2};
      std::map<MultiIndex, Rational> mass;
      for (const MultiIndex& e : grid(support_bound))
        if (rng.below(3) != 0)
          mass[e] = make_rational(rng.below(20), 1 + rng.below(20));
      MultiIndex r_max = one_type ? MultiIndex{9} : MultiIndex{3, 3};
      std::map<MultiIndex, Rational> moments;
      for (const MultiIndex& k : grid(r_max)) {
        Rational s = 0;
        for (const auto& [e, w] : mass)
          s += w * Rational(sur_product(basis, e, k));
        moments[k] = s;
      }
      const Rational truth = mass.count(MultiIndex(std::vector<unsigned>(basis.size(), 0)))
          ? mass.at(MultiIndex(std::vector<unsigned>(basis.size(), 0)))
          : Rational(0);
      const MomentTable table(basis, r_max, moments);
      if (one_type)
        for (unsigned r = 0; r <= r_max[0]; ++r) {
          const Rational s = partial_sum(table, r);
          if ((r % 2 == 0 && s < truth) || (r % 2 == 1 && s > truth))
            return "truncation " + std::to_string(r) + " on the wrong side in trial " + std::to_string(trial);
        }
      if (!multi_invert_zero(table, r_max).contains(truth))
        return "bracket misses the true mass in trial " + std::to_string(trial);
    }
    return "";
  }));

  return results;
}

} // namespace momentforge
