#include "rebit/verify.hpp"

#include "rebit/decomposition.hpp"
#include "rebit/entanglement.hpp"
#include "rebit/hiding.hpp"
#include "rebit/measurement.hpp"

#include <set>

namespace rebit {

namespace {

std::vector<int> sizes(const VerifyOptions &options, std::vector<int> defaults) {
  if (options.n) return {*options.n};
  return defaults;
}

std::string tag(const char *suite, int n, const char *check) {
  return std::string(suite) + ".n" + std::to_string(n) + "." + check;
}

double excess(double value, double bound) { return std::max(0.0, value - bound); }

// sigma_y (x) sigma_y marginal predicted by the expansion: (I + s_i s_j YY) / 4.
MatR signed_pair_marginal(int sign) {
  return (MatR::Identity(4, 4) + static_cast<double>(sign) * sigma_yy()) / 4.0;
}

}  // namespace

Report verify_states(const VerifyOptions &options) {
  Report report;
  for (int n : sizes(options, {2, 3, 4, 5, 6})) {
    if (n < 2) throw std::invalid_argument("verify states: n must be at least 2");
    const auto labels = SIndex::all(n);
    MatR basis(Eigen::Index{1} << n, static_cast<Eigen::Index>(2 * labels.size()));
    double cr_deviation = 0, expansion_diff = 0, marginal_diff = 0, spectrum_diff = 0;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const auto &s = labels[k];
      const RealState mu = mu_state(s), nu = nu_state(s);
      basis.col(static_cast<Eigen::Index>(2 * k)) = mu.amplitudes();
      basis.col(static_cast<Eigen::Index>(2 * k + 1)) = nu.amplitudes();
      for (const auto *state : {&mu, &nu}) {
        const auto map = pairwise_concurrences(*state, Field::Real);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) cr_deviation = std::max(cr_deviation, std::abs(map.at(i, j) - 1.0));
      }
      const RealDensity rho = rho_s(s);
      expansion_diff = std::max(expansion_diff, (rho.matrix() - rho_s_expansion(s).matrix()).cwiseAbs().maxCoeff());
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const MatR expected = signed_pair_marginal(s.sign(i) * s.sign(j));
          marginal_diff = std::max(marginal_diff, (rho.marginal(i, j).matrix() - expected).cwiseAbs().maxCoeff());
        }
      VecR expected_spectrum = VecR::Zero(rho.dim());
      expected_spectrum.head(2).setConstant(0.5);
      spectrum_diff = std::max(spectrum_diff, (eig_hermitian(rho.matrix()).values - expected_spectrum).cwiseAbs().maxCoeff());
    }
    report.add(ReportRow::numeric(tag("states", n, "mu_nu_gram_deviation"), 0, orthonormality_error(basis), 1e-12));
    report.add(ReportRow::numeric(tag("states", n, "pairwise_cr_deviation"), 0, cr_deviation, 1e-12));
    report.add(ReportRow::numeric(tag("states", n, "rho_s_expansion_diff"), 0, expansion_diff, 1e-12));
    report.add(ReportRow::numeric(tag("states", n, "rho_s_pair_marginal_diff"), 0, marginal_diff, 1e-12));
    report.add(ReportRow::numeric(tag("states", n, "rho_s_spectrum_diff"), 0, spectrum_diff, 1e-10));
  }
  return report;
}

Report verify_factorization_suite(const VerifyOptions &options) {
  Report report;
  const int trials = options.trials.value_or(200);
  for (int n : sizes(options, {3, 6})) {
    double deviation = 0;
    for (const auto &s : SIndex::all(n)) deviation = std::max(deviation, verify_factorization(s, trials, options.seed));
    report.add(ReportRow::numeric(tag("factorization", n, "max_product_deviation"), 0, deviation, 1e-12));
    report.add(ReportRow::numeric(tag("factorization", n, "max_s_spread"), 0,
                                  verify_s_independence(n, trials, options.seed), 1e-12));
  }
  return report;
}

Report verify_monogamy(const VerifyOptions &options) {
  Report report;
  const int trials = options.trials.value_or(10000);
  const int haar_n = options.n.value_or(3);
  if (haar_n < 2) throw std::invalid_argument("verify monogamy: n must be at least 2");
  double worst = 0;
  int violations = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(t));
    const auto state = haar_random_state(haar_n, rng);
    const auto map = pairwise_concurrences(state, Field::Complex);
    for (int hub = 0; hub < haar_n; ++hub) {
      const double lhs = map.squared_sum(hub);
      worst = std::max(worst, lhs);
      if (lhs > 1.0 + kMonogamyTol) ++violations;
    }
  }
  report.add(ReportRow::numeric(tag("monogamy", haar_n, "haar_max_excess_over_1"), 0, excess(worst, 1.0), kMonogamyTol));
  report.add(ReportRow::numeric(tag("monogamy", haar_n, "haar_violations"), 0, violations, 0));

  for (int n : sizes(options, {3, 4, 5, 6})) {
    if (n < 3) continue;
    double deviation = 0;
    for (const auto &s : SIndex::all(n))
      for (const auto &state : {mu_state(s), nu_state(s)}) {
        const auto map = pairwise_concurrences(state, Field::Real);
        for (int hub = 0; hub < n; ++hub)
          deviation = std::max(deviation, std::abs(map.squared_sum(hub) - (n - 1)));
      }
    report.add(ReportRow::numeric(tag("monogamy", n, "real_sum_cr2_minus_n_minus_1"), 0, deviation, 1e-12));
  }
  return report;
}

Report verify_oracle(const VerifyOptions &options) {
  Report report;
  const int corpus = options.trials.value_or(50);
  OracleOptions oracle;
  const auto real = certify_formulas(corpus, options.seed, Field::Real, oracle);
  const auto complex = certify_formulas(corpus, options.seed, Field::Complex, oracle);
  report.add(ReportRow::numeric("oracle.real.max_abs_gap", 0, real.max_abs_gap(), 1e-4));
  report.add(ReportRow::numeric("oracle.real.undercut", 0, excess(-real.min_gap(), 0), 1e-6));
  report.add(ReportRow::numeric("oracle.complex.overshoot", 0, excess(complex.max_gap(), 0), 1e-3));
  report.add(ReportRow::numeric("oracle.complex.undercut", 0, excess(-complex.min_gap(), 0), 1e-6));

  double ordering = 0;
  for (const auto &rho : random_corpus<double>(corpus, options.seed))
    ordering = std::max(ordering, excess(concurrence_complex(rho), concurrence_real(rho)));
  report.add(ReportRow::numeric("oracle.real.complex_minus_real_concurrence", 0, ordering, 1e-9));
  return report;
}

Report verify_hiding(const VerifyOptions &options) {
  Report report;
  const int trials = options.trials.value_or(1000);
  for (int n : sizes(options, {3, 4, 5})) {
    int failures = 0;
    double branch_deviation = 0;
    for (const auto &s : SIndex::all(n)) {
      const auto record = encode(s);
      int mu_hits = 0;
      for (int t = 0; t < trials; ++t) {
        Rng rng = make_rng(derive_seed(options.seed, s.id()), static_cast<std::uint64_t>(t));
        const auto outcome = joint_measure(record, rng);
        if (!(outcome.secret == s)) ++failures;
        if (outcome.mu_branch) ++mu_hits;
      }
      branch_deviation = std::max(branch_deviation, std::abs(mu_hits / static_cast<double>(trials) - 0.5));
    }
    report.add(ReportRow::numeric(tag("hiding", n, "recovery_failures"), 0, failures, 0));
    report.add(ReportRow::numeric(tag("hiding", n, "mu_branch_frequency_minus_half"), 0, branch_deviation,
                                  5.0 / std::sqrt(static_cast<double>(trials))));

    std::vector<LocalStrategy> strategies{computational_strategy(n)};
    for (int k = 0; k < 3; ++k) {
      Rng rng = make_rng(options.seed ^ 0x5EC2E7ULL, static_cast<std::uint64_t>(k));
      strategies.push_back(random_strategy(n, rng));
    }
    double spread = 0, leakage = 0, sampling = 0;
    for (std::size_t k = 0; k < strategies.size(); ++k) {
      spread = std::max(spread, secret_spread(n, strategies[k]));
      leakage = std::max(leakage, exact_leakage(n, strategies[k]));
      for (const auto &s : SIndex::all(n)) {
        const auto record = encode(s);
        const VecR exact = outcome_distribution(record.state, strategies[k]);
        const auto transcript = local_attack(record, strategies[k], trials, derive_seed(options.seed, k));
        sampling = std::max(sampling, (transcript.frequencies() - exact).cwiseAbs().maxCoeff());
      }
    }
    report.add(ReportRow::numeric(tag("hiding", n, "exact_secret_spread"), 0, spread, 1e-12));
    report.add(ReportRow::numeric(tag("hiding", n, "exact_leakage_bits"), 0, leakage, 1e-10));
    report.add(ReportRow::numeric(tag("hiding", n, "sampled_frequency_deviation"), 0, sampling,
                                  5.0 / std::sqrt(static_cast<double>(trials))));
  }
  return report;
}

Report verify_coins(const VerifyOptions &options) {
  Report report;
  std::vector<int> defaults;
  for (int n = 2; n <= 10; ++n) defaults.push_back(n);
  for (int n : sizes(options, defaults)) {
    const auto dists = coin_distributions(n);
    std::set<std::vector<bool>> supports;
    double mi_deviation = 0;
    for (const auto &d : dists) {
      supports.insert(std::min(d.pattern, d.opposite()));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          mi_deviation = std::max(mi_deviation, std::abs(pairwise_mutual_information(d, i, j) - 1.0));
    }
    report.add(ReportRow::numeric(tag("coins", n, "distribution_count"), std::ldexp(1.0, n - 1),
                                  static_cast<double>(dists.size()), 0));
    report.add(ReportRow::numeric(tag("coins", n, "distinct_distributions"), std::ldexp(1.0, n - 1),
                                  static_cast<double>(supports.size()), 0));
    report.add(ReportRow::numeric(tag("coins", n, "pairwise_mi_deviation_bits"), 0, mi_deviation, 1e-12));
  }
  return report;
}

Report run_suite(const std::string &suite, const VerifyOptions &options) {
  if (suite == "states") return verify_states(options);
  if (suite == "factorization") return verify_factorization_suite(options);
  if (suite == "monogamy") return verify_monogamy(options);
  if (suite == "oracle") return verify_oracle(options);
  if (suite == "hiding") return verify_hiding(options);
  if (suite == "coins") return verify_coins(options);
  if (suite == "all") {
    Report report;
    for (const char *name : {"states", "factorization", "monogamy", "oracle", "hiding", "coins"})
      report.append(run_suite(name, options));
    return report;
  }
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (expected states|factorization|monogamy|oracle|hiding|coins|all)");
}

}  // namespace rebit
