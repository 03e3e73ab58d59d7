#pragma once

// Local measurement statistics: single-site effects, product effects, joint
// outcome probabilities, and the checks that rho_s statistics factorize and do
// not depend on s. Also the classical coin distributions and a plug-in mutual
// information estimator.

#include "rebit/random.hpp"
#include "rebit/states.hpp"

#include <vector>

namespace rebit {

/// 2x2 effect 0 <= E <= I (within 1e-10), Hermitian (symmetric if real).
template <typename Scalar>
class LocalEffect {
 public:
  static constexpr double kTol = 1e-10;

  explicit LocalEffect(Mat<Scalar> matrix);

  const Mat<Scalar> &matrix() const { return matrix_; }
  /// I - E, the complementary outcome of a binary POVM.
  LocalEffect complement() const;
  /// Tr(E) / 2: the outcome probability on the maximally mixed site.
  double half_trace() const { return std::real(matrix_.trace()) / 2.0; }

 private:
  Mat<Scalar> matrix_;
};

template <typename Scalar>
using ProductEffect = std::vector<LocalEffect<Scalar>>;

/// |0><0| or |1><1|.
LocalEffect<double> computational_effect(int bit);
/// Q diag(u1, u2) Q^T with Q a random rotation and u_i uniform on [0, 1].
LocalEffect<double> random_real_effect(Rng &rng);
/// U diag(u1, u2) U^dagger with U Haar-random unitary.
LocalEffect<Complex> random_complex_effect(Rng &rng);

ProductEffect<double> random_real_product_effect(int n_systems, Rng &rng);

/// Tr[(E_1 (x) ... (x) E_n) rho], clamped to [0, 1].
template <typename Scalar>
double joint_probability(const DensityMatrix<Scalar> &rho, const ProductEffect<Scalar> &effect);
/// <psi| E_1 (x) ... (x) E_n |psi>, clamped to [0, 1].
template <typename Scalar>
double joint_probability(const StateVector<Scalar> &state, const ProductEffect<Scalar> &effect);

/// prod_i Tr(E_i) / 2.
template <typename Scalar>
double product_of_half_traces(const ProductEffect<Scalar> &effect);

/// Largest |joint - product of half traces| for rho_s over `trials` random real
/// product effects.
double verify_factorization(const SIndex &s, int trials, std::uint64_t seed);

/// Same deviation for random complex product effects on rho_s (cast to the
/// complex field). Nonzero: factorization needs symmetric effects.
double complex_factorization_deviation(const SIndex &s, int trials, std::uint64_t seed);

/// Largest spread max_s p - min_s p of joint probabilities over all 2^(n-1)
/// sign strings, for `trials` random real product effects on rho_s.
double verify_s_independence(int n_systems, int trials, std::uint64_t seed);

/// Largest s-spread of |mu_s> joint probabilities over all 5^n products of
/// {|0><0|, |1><1|, |+><+|, |-><-|, I}. Computational effects alone give zero
/// spread.
double mu_state_max_spread(int n_systems);

/// Two complementary head/tail strings, each with probability 1/2. `pattern`
/// is the string whose first coin shows heads (true = heads).
struct CoinDistribution {
  std::vector<bool> pattern;

  int n() const { return static_cast<int>(pattern.size()); }
  std::vector<bool> opposite() const;
  /// Joint table of coins i and j: rows coin i (H, T), columns coin j.
  Eigen::Matrix2d pair_table(int i, int j) const;
  std::string to_string() const;
};

/// All 2^(n-1) distributions; n >= 2.
std::vector<CoinDistribution> coin_distributions(int n);

/// I(X; Y) in bits of a joint probability table (0 log 0 = 0).
double mutual_information(const MatR &joint);

double pairwise_mutual_information(const CoinDistribution &dist, int i, int j);

}  // namespace rebit
