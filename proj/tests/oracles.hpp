// Independent reference computations for the test suites. Nothing here calls
// into the library's counting code.
#ifndef MOMENTFORGE_TESTS_ORACLES_HPP
#define MOMENTFORGE_TESTS_ORACLES_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "momentforge/arith.hpp"
#include "momentforge/finab.hpp"

namespace oracle {

using momentforge::Integer;
using momentforge::Rational;

/* Number of k x e matrices over F_p of rank k, i.e. surjections F_p^e ->> F_p^k.
 * Rows are chosen one at a time as vectors of F_p^e (base-p integers); a row
 * is kept only when it lies outside the span of the earlier rows, and the
 * span is maintained explicitly as a membership table. */
inline std::uint64_t surjective_matrices(std::uint64_t p, unsigned e, unsigned k)
{
  if (k > e)
    return 0;
  std::uint64_t n = 1;
  for (unsigned i = 0; i < e; ++i)
    n *= p;
  auto add = [&](std::uint64_t x, std::uint64_t y) {
    std::uint64_t out = 0;
    for (std::uint64_t w = 1; w < n; w *= p)
      out += (x / w % p + y / w % p) % p * w;
    return out;
  };
  std::function<std::uint64_t(const std::vector<char>&, unsigned)> rows = [&](const std::vector<char>& span,
                                                                             unsigned left) -> std::uint64_t {
    if (left == 0)
      return 1;
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
      if (span[v])
        continue;
      if (left == 1) {
        ++count;
        continue;
      }
      std::vector<char> bigger(span);
      std::vector<std::uint64_t> members;
      for (std::uint64_t x = 0; x < n; ++x)
        if (span[x])
          members.push_back(x);
      std::uint64_t multiple = v;
      for (std::uint64_t c = 1; c < p; ++c, multiple = add(multiple, v))
        for (std::uint64_t x : members)
          bigger[add(x, multiple)] = 1;
      count += rows(bigger, left - 1);
    }
    return count;
  };
  std::vector<char> zero(n, 0);
  zero[0] = 1;
  return rows(zero, k);
}

// Number of k-dimensional subspaces of F_2^e, by testing every subset of vectors for closure.
inline std::uint64_t subspaces_f2(unsigned e, unsigned k)
{
  const unsigned n = 1u << e;
  std::uint64_t count = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    if (!(subset & 1) || std::popcount(subset) != (1u << k))
      continue;
    bool closed = true;
    for (unsigned x = 0; x < n && closed; ++x)
      for (unsigned y = 0; y < n && closed; ++y)
        if ((subset >> x & 1) && (subset >> y & 1) && !(subset >> (x ^ y) & 1))
          closed = false;
    if (closed)
      ++count;
  }
  return count;
}

// prod_{k=1}^{factors} (1 - h^{-k}) in double precision.
inline double euler_product(double h, int factors = 30)
{
  double out = 1.0;
  double power = 1.0;
  for (int k = 1; k <= factors; ++k) {
    power /= h;
    out *= 1.0 - power;
  }
  return out;
}

// Solves A x = b exactly by Gauss-Jordan elimination; A square and invertible.
inline std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0)
      ++pivot;
    if (pivot == n)
      throw std::runtime_error("singular system");
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0)
        continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    b[i] /= a[i][i];
  return b;
}

// Elements of a finite abelian group as residue vectors against its cyclic moduli.
struct Elements {
  std::vector<std::uint64_t> moduli;
  std::vector<std::vector<std::uint64_t>> all;

  explicit Elements(const momentforge::FinAbGroup& g) : moduli(g.cyclic_moduli())
  {
    std::vector<std::uint64_t> x(moduli.size(), 0);
    while (true) {
      all.push_back(x);
      std::size_t i = 0;
      while (i < x.size() && ++x[i] == moduli[i])
        x[i++] = 0;
      if (i == x.size())
        break;
    }
  }

  std::vector<std::uint64_t> add(const std::vector<std::uint64_t>& x, const std::vector<std::uint64_t>& y) const
  {
    std::vector<std::uint64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      out[i] = (x[i] + y[i]) % moduli[i];
    return out;
  }

  std::vector<std::uint64_t> scale(const std::vector<std::uint64_t>& x, std::uint64_t k) const
  {
    std::vector<std::uint64_t> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      out[i] = x[i] * (k % moduli[i]) % moduli[i];
    return out;
  }

  bool is_zero(const std::vector<std::uint64_t>& x) const
  {
    for (std::uint64_t v : x)
      if (v)
        return false;
    return true;
  }

  // Size of the subgroup generated by gens, by closure under addition.
  std::size_t span_size(const std::vector<std::vector<std::uint64_t>>& gens) const
  {
    std::set<std::vector<std::uint64_t>> seen{std::vector<std::uint64_t>(moduli.size(), 0)};
    std::vector<std::vector<std::uint64_t>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<std::vector<std::uint64_t>> next;
      for (const auto& x : frontier)
        for (const auto& g : gens) {
          auto y = add(x, g);
          if (seen.insert(y).second)
            next.push_back(y);
        }
      frontier = std::move(next);
    }
    return seen.size();
  }
};

/* Visits every homomorphism A -> B as the list of images of A's cyclic
 * generators: the image of a generator of order n must be killed by n. */
inline void for_each_hom(const momentforge::FinAbGroup& a, const momentforge::FinAbGroup& b,
                         const std::function<void(const std::vector<std::vector<std::uint64_t>>&)>& visit)
{
  const Elements ae(a);
  const Elements be(b);
  std::vector<std::vector<std::vector<std::uint64_t>>> choices;
  for (std::uint64_t n : ae.moduli) {
    choices.emplace_back();
    for (const auto& y : be.all)
      if (be.is_zero(be.scale(y, n)))
        choices.back().push_back(y);
  }
  std::vector<std::size_t> pick(choices.size(), 0);
  std::vector<std::vector<std::uint64_t>> images(choices.size());
  while (true) {
    for (std::size_t i = 0; i < choices.size(); ++i)
      images[i] = choices[i][pick[i]];
    visit(images);
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size())
      pick[i++] = 0;
    if (i == pick.size())
      break;
  }
}

inline std::uint64_t hom_count(const momentforge::FinAbGroup& a, const momentforge::FinAbGroup& b)
{
  std::uint64_t n = 0;
  for_each_hom(a, b, [&](const auto&) { ++n; });
  return n;
}

inline std::uint64_t sur_count(const momentforge::FinAbGroup& a, const momentforge::FinAbGroup& b)
{
  const Elements be(b);
  std::uint64_t n = 0;
  for_each_hom(a, b, [&](const auto& images) {
    if (be.span_size(images) == be.all.size())
      ++n;
  });
  return n;
}

// Endomorphisms of A that are bijective, by checking the kernel is trivial.
inline std::uint64_t aut_count(const momentforge::FinAbGroup& a)
{
  const Elements ae(a);
  std::uint64_t n = 0;
  for_each_hom(a, a, [&](const auto& images) {
    if (ae.span_size(images) == ae.all.size())
      ++n;
  });
  return n;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 7)
{
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return momentforge::make_rational(num(rng), den(rng));
}

} // namespace oracle

#endif // MOMENTFORGE_TESTS_ORACLES_HPP
