#include "momentforge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

std::uint64_t mix64(std::uint64_t z)
{
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod)
{
  // extended Euclid on signed 128-bit to stay exact
  __int128 t = 0, new_t = 1;
  __int128 r = mod, new_r = a % mod;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1)
    throw ConsistencyError("pivot is not a unit");
  if (t < 0)
    t += mod;
  return static_cast<std::uint64_t>(t);
}

} // namespace

void SamplerConfig::validate() const
{
  if (!is_prime(p))
    throw InputError("sampler prime " + std::to_string(p) + " is not prime");
  if (exponent_cap == 0)
    throw InputError("sampler exponent cap must be at least 1");
  const auto modulus = checked_pow(p, exponent_cap);
  if (!modulus || *modulus > (std::uint64_t{1} << 31))
    throw InputError("p^cap must stay below 2^31");
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : state_(mix64(seed) ^ mix64(stream + kGamma)) {}

std::uint64_t CounterRng::next()
{
  state_ += kGamma;
  return mix64(state_);
}

std::uint64_t CounterRng::below(std::uint64_t bound)
{
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

FinAbGroup sample_cokernel(const SamplerConfig& config, std::uint64_t draw)
{
  config.validate();
  const std::uint64_t p = config.p;
  const unsigned cap = config.exponent_cap;
  const std::uint64_t modulus = *checked_pow(p, cap);
  const unsigned rows = config.n;
  const unsigned cols = config.n + config.extra_cols;

  CounterRng rng(config.seed, draw);
  std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * cols);
  for (auto& x : a)
    x = rng.below(modulus);
  auto at = [&](unsigned i, unsigned j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * cols + j]; };
  auto valuation = [&](std::uint64_t x) {
    if (x == 0)
      return cap;
    unsigned v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };

  Partition parts;
  for (unsigned t = 0; t < rows; ++t) {
    unsigned best = cap;
    unsigned bi = t, bj = t;
    for (unsigned i = t; i < rows && best > 0; ++i)
      for (unsigned j = t; j < cols; ++j) {
        const unsigned v = valuation(at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0)
            break;
        }
      }
    if (best == cap) {
      // remaining block is zero: each leftover row contributes Z/p^cap
      for (unsigned i = t; i < rows; ++i)
        parts.push_back(cap);
      break;
    }
    if (bi != t)
      for (unsigned j = 0; j < cols; ++j)
        std::swap(at(t, j), at(bi, j));
    if (bj != t)
      for (unsigned i = 0; i < rows; ++i)
        std::swap(at(i, t), at(i, bj));
    if (best > 0)
      parts.push_back(best);

    // Clear the pivot column below the diagonal; the pivot row then no
    // longer interacts with the remaining block.
    const std::uint64_t pv = *checked_pow(p, best);
    const std::uint64_t reduced_mod = modulus / pv;
    const std::uint64_t unit_inv = inverse_mod(at(t, t) / pv % reduced_mod, reduced_mod);
    for (unsigned i = t + 1; i < rows; ++i) {
      if (at(i, t) == 0)
        continue;
      const std::uint64_t f = (at(i, t) / pv) % reduced_mod * unit_inv % reduced_mod;
      for (unsigned j = t; j < cols; ++j)
        at(i, j) = (at(i, j) + modulus - f * at(t, j) % modulus) % modulus;
    }
  }
  if (parts.empty())
    return FinAbGroup();
  return FinAbGroup({{p, parts}});
}

std::vector<FinAbGroup> sample_cokernels(const SamplerConfig& config, unsigned threads)
{
  config.validate();
  std::vector<FinAbGroup> out(config.count);
  threads = std::max(1u, threads);
  auto worker = [&](unsigned id) {
    for (std::uint64_t d = id; d < config.count; d += threads)
      out[d] = sample_cokernel(config, d);
  };
  if (threads == 1) {
    worker(0);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned id = 0; id < threads; ++id)
    pool.emplace_back(worker, id);
  for (auto& th : pool)
    th.join();
  return out;
}

Measure empirical_measure(const std::vector<FinAbGroup>& draws, std::uint64_t t)
{
  if (t == 0 || t > draws.size())
    throw InputError("empirical measure needs 1 <= t <= " + std::to_string(draws.size()));
  std::map<FinAbGroup, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < t; ++i)
    ++counts[draws[i]];
  Measure mu;
  for (const auto& [g, c] : counts)
    mu.add(g, make_rational(Integer(std::to_string(c)), Integer(std::to_string(t))));
  return mu;
}

ModuleMomentTable empirical_moments(const Measure& mu, const std::vector<FinAbGroup>& targets)
{
  std::set<std::uint64_t> primes;
  std::uint64_t bound = 1;
  for (const FinAbGroup& g : targets) {
    for (std::uint64_t p : g.primes())
      primes.insert(p);
    bound = std::max(bound, g.order());
  }
  std::map<FinAbGroup, Rational> values;
  for (const FinAbGroup& target : targets) {
    Rational v = 0;
    for (const auto& [x, mass] : mu.masses)
      v += mass * Rational(sur_count(x, target));
    values[target] = v;
  }
  return ModuleMomentTable(std::move(primes), bound, std::move(values));
}

MomentEstimate moment_estimate(const std::vector<FinAbGroup>& draws, std::uint64_t t, const FinAbGroup& target)
{
  if (t == 0 || t > draws.size())
    throw InputError("moment estimate needs 1 <= t <= " + std::to_string(draws.size()));
  std::map<FinAbGroup, double> cache;
  double sum = 0;
  double sum_sq = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    auto it = cache.find(draws[i]);
    if (it == cache.end())
      it = cache.emplace(draws[i], sur_count(draws[i], target).get_d()).first;
    sum += it->second;
    sum_sq += it->second * it->second;
  }
  const double n = static_cast<double>(t);
  const double mean = sum / n;
  const double var = t > 1 ? (sum_sq - n * mean * mean) / (n - 1) : 0.0;
  return {mean, std::sqrt(std::max(var, 0.0) / n)};
}

double cohen_lenstra_mass(std::uint64_t p, unsigned u, const FinAbGroup& m)
{
  double product = 1;
  const double inv_p = 1.0 / static_cast<double>(p);
  double term = std::pow(inv_p, u + 1);
  for (int k = 0; k < 200 && term > 1e-300; ++k) {
    product *= 1 - term;
    term *= inv_p;
  }
  return product / (std::pow(static_cast<double>(m.order()), u) * aut_count(m).get_d());
}

std::vector<ReportRecord> convergence_report(const SamplerConfig& config, const std::vector<std::uint64_t>& counts,
                                             const std::vector<FinAbGroup>& targets, unsigned r_max,
                                             unsigned threads)
{
  config.validate();
  if (counts.empty() || !std::is_sorted(counts.begin(), counts.end())
      || std::adjacent_find(counts.begin(), counts.end()) != counts.end() || counts.front() == 0)
    throw InputError("sample counts must be positive and strictly increasing");
  for (const FinAbGroup& m : targets) {
    for (std::uint64_t q : m.primes())
      if (q != config.p)
        throw InputError("target " + m.to_string() + " is not a " + std::to_string(config.p) + "-group");
    const Partition& parts = m.partition(config.p);
    if (!parts.empty() && parts.front() >= config.exponent_cap)
      throw InputError("target " + m.to_string() + " has exponent >= cap " + std::to_string(config.exponent_cap)
                       + "; cokernels are truncated there");
  }

  SamplerConfig run = config;
  run.count = counts.back();
  const std::vector<FinAbGroup> draws = sample_cokernels(run, threads);
  const TypeBasis basis = prime_basis({config.p});
  const MultiIndex bound{r_max};

  std::vector<ReportRecord> out;
  for (std::uint64_t t : counts) {
    const Measure mu = empirical_measure(draws, t);
    for (const FinAbGroup& m : targets) {
      const ModuleMomentTable table = empirical_moments(mu, required_middles(m, basis, bound));
      ModuleMomentTable scoped({config.p}, std::max(table.order_bound(), m.order()), table.values());
      out.push_back({t, m, mu.mass(m), reconstruct_probability(scoped, m, basis, bound),
                     cohen_lenstra_mass(config.p, config.extra_cols, m)});
    }
  }
  return out;
}

} // namespace momentforge
