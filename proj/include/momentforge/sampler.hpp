#ifndef MOMENTFORGE_SAMPLER_HPP
#define MOMENTFORGE_SAMPLER_HPP

#include <cstdint>
#include <vector>

#include "momentforge/finab.hpp"
#include "momentforge/inversion.hpp"
#include "momentforge/localize.hpp"

namespace momentforge {

/* Random cokernels of n x (n+u) matrices over Z/p^cap. Exponents above cap
 * are truncated to cap, so only targets of exponent <= cap-1 are reported. */
struct SamplerConfig {
  std::uint64_t p = 2;
  unsigned exponent_cap = 3;
  unsigned n = 8;
  unsigned extra_cols = 0;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;

  /// InputError on non-prime p, cap == 0, or p^cap too large for 64-bit arithmetic.
  void validate() const;
};

/* Counter-based generator: the stream for (seed, draw) is a fixed function
 * of both, so draws can be generated in any order on any thread. */
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

private:
  std::uint64_t state_;
};

/// Cokernel of the matrix drawn for (config.seed, draw).
FinAbGroup sample_cokernel(const SamplerConfig& config, std::uint64_t draw);

/// Draws 0..config.count-1; identical output for every thread count.
std::vector<FinAbGroup> sample_cokernels(const SamplerConfig& config, unsigned threads = 1);

/// Empirical measure of draws[0..t).
Measure empirical_measure(const std::vector<FinAbGroup>& draws, std::uint64_t t);

/// value(M') = sum_X mu(X) Sur(X, M') for each target M'.
ModuleMomentTable empirical_moments(const Measure& mu, const std::vector<FinAbGroup>& targets);

/// Sample mean of Sur(X, target) over draws[0..t) with its standard error.
struct MomentEstimate {
  double mean = 0;
  double standard_error = 0;
};
MomentEstimate moment_estimate(const std::vector<FinAbGroup>& draws, std::uint64_t t, const FinAbGroup& target);

/* Limiting mass of M under random cokernels with u extra columns:
 *   prod_{k > u} (1 - p^{-k}) / (|M|^u |Aut M|). Float, for reports only. */
double cohen_lenstra_mass(std::uint64_t p, unsigned u, const FinAbGroup& m);

struct ReportRecord {
  std::uint64_t t;
  FinAbGroup group;
  Rational frequency;
  Bracket bracket;
  double reference;
};

/* For each t in `counts` (increasing) and each target M: the empirical
 * frequency of M among the first t draws, the bracket reconstructed from
 * the exact moments of that empirical measure, and the reference mass. */
std::vector<ReportRecord> convergence_report(const SamplerConfig& config, const std::vector<std::uint64_t>& counts,
                                             const std::vector<FinAbGroup>& targets, unsigned r_max,
                                             unsigned threads = 1);

} // namespace momentforge

#endif // MOMENTFORGE_SAMPLER_HPP
