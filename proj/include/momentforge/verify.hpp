#ifndef MOMENTFORGE_VERIFY_HPP
#define MOMENTFORGE_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "momentforge/finab.hpp"

namespace momentforge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  /// Smaller grids; the full suite takes minutes on one core.
  bool quick = false;
  std::uint64_t seed = 1;
  EnumerationBudget budget{};
};

/* Runs the oracle suite: closed-form counts against enumeration, the
 * q-binomial identities, the extension-sum identity and randomized
 * bracketing soundness. `progress` sees each result as it completes. */
std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const CheckResult&)>& progress = {});

} // namespace momentforge

#endif // MOMENTFORGE_VERIFY_HPP
