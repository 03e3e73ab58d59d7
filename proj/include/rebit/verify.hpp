#pragma once

// Verification suites behind `rebit verify`. Each returns report rows whose
// pass flag follows |computed - target| <= tolerance. One-sided bounds are
// reported as an excess over the bound with target 0.

#include "rebit/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace rebit {

struct VerifyOptions {
  std::optional<int> n;       // restrict n-dependent suites to one size
  std::uint64_t seed = 7;
  std::optional<int> trials;  // suite-specific default when unset
};

/// Orthonormality of {mu_s, nu_s}, pairwise C_R, the sigma_y expansion of
/// rho_s and the signed pair marginals. Default n = 2..6.
Report verify_states(const VerifyOptions &options);
/// Factorization and s-independence of rho_s statistics. Default n = 3 and 6,
/// 200 trials.
Report verify_factorization_suite(const VerifyOptions &options);
/// Haar-random monogamy sweep (default n = 3, 10^4 trials) and the real-field
/// exhibit sum_j C_R^2 = n - 1 for n = 3..6.
Report verify_monogamy(const VerifyOptions &options);
/// Oracle against both closed forms (default 50 samples per field) plus the
/// ordering C <= C_R on the real corpus.
Report verify_oracle(const VerifyOptions &options);
/// Recovery, zero leakage and sampling checks for the hiding protocol. Default
/// n = 3, 4, 5 and 1000 trials per secret.
Report verify_hiding(const VerifyOptions &options);
/// Coin distribution counts and pairwise mutual information. Default n = 2..10.
Report verify_coins(const VerifyOptions &options);

/// Dispatch by suite name: states, factorization, monogamy, oracle, hiding,
/// coins or all. Throws std::invalid_argument for unknown names.
Report run_suite(const std::string &suite, const VerifyOptions &options);

}  // namespace rebit
