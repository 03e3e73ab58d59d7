#pragma once

// Independent oracle for mixed-state concurrence: search over pure-state
// decompositions of a two-system density matrix, restricted to the scalar
// field, for the smallest average pure-state concurrence.
//
// Every decomposition of rho with m members is obtained from its eigen-ensemble
// (lambda_k, v_k) and an m x r matrix U with orthonormal columns:
//
//   w_j = sum_k U(j, k) sqrt(lambda_k) v_k,   p_j = |w_j|^2,   phi_j = w_j / |w_j|.
//
// Real U gives the real decompositions, unitary U the complex ones. The search
// never evaluates the closed-form concurrences, so it can certify them.

#include "rebit/entanglement.hpp"
#include "rebit/random.hpp"
#include "rebit/states.hpp"

#include <string>
#include <vector>

namespace rebit {

inline constexpr double kRankCut = 1e-10;
inline constexpr double kReconstructionTol = 1e-9;

template <typename Scalar>
struct Decomposition {
  std::vector<double> weights;
  std::vector<StateVector<Scalar>> states;

  Mat<Scalar> mixture() const;
  /// max-norm distance between the mixture and `target`.
  double reconstruction_error(const Mat<Scalar> &target) const;
  /// sum_j p_j C(phi_j) using concurrence_pure.
  double average_concurrence() const;
};

/// Eigenvalues above the rank cut and their eigenvectors (columns).
template <typename Scalar>
struct EigenEnsemble {
  VecR weights;
  Mat<Scalar> vectors;

  Eigen::Index rank() const { return weights.size(); }
};

template <typename Scalar>
EigenEnsemble<Scalar> eigen_ensemble(const DensityMatrix<Scalar> &rho);

/// Decomposition steered from an eigen-ensemble by `mix` (m x r, orthonormal
/// columns within 1e-10). Members with zero weight are dropped.
template <typename Scalar>
Decomposition<Scalar> decomposition_from_isometry(const EigenEnsemble<Scalar> &ensemble, const Mat<Scalar> &mix);
template <typename Scalar>
Decomposition<Scalar> decomposition_from_isometry(const DensityMatrix<Scalar> &rho, const Mat<Scalar> &mix);

struct OracleOptions {
  int extra_states = 2;  // ensemble size m = rank + extra_states
  int restarts = 64;
  int steps = 2000;
  double initial_step = 0.5;
  double step_decay = 0.95;
  int decay_every = 50;
  double min_step = 1e-9;
  int patience = 40;  // consecutive rejections before the step is halved
  /// Gradient iterations per smoothing level in the final polish; 0 disables it.
  int polish_iterations = 200;
  std::uint64_t seed = 1;
};

template <typename Scalar>
struct OracleResult {
  double best_value = 0;
  Decomposition<Scalar> best_decomposition;
  int restarts_used = 0;
  /// At least two restarts ended within kOracleAgreement of the best value.
  bool converged = false;
  std::vector<double> restart_values;  // final value of each restart
  std::vector<double> best_so_far;     // running minimum after each restart
};

inline constexpr double kOracleAgreement = 1e-4;

/// Upper bound on the decomposition infimum of average concurrence, searched
/// over decompositions with `rank + options.extra_states` members.
template <typename Scalar>
OracleResult<Scalar> minimize_average_concurrence(const DensityMatrix<Scalar> &rho, const OracleOptions &options = {});

/// Average concurrence of the decomposition steered by `mix`, computed from
/// the unnormalized members as sum_j 2 |det W_j| (W_j the 2x2 amplitude block).
template <typename Scalar>
double steered_average_concurrence(const EigenEnsemble<Scalar> &ensemble, const Mat<Scalar> &mix);

/// rho = A A^dagger / Tr(A A^dagger) with A a 4x4 Gaussian matrix over the field.
template <typename Scalar>
DensityMatrix<Scalar> random_density(int n_systems, Rng &rng);

/// The seeded corpus used by certify_formulas: sample k is drawn from
/// make_rng(seed, k).
template <typename Scalar>
std::vector<DensityMatrix<Scalar>> random_corpus(int size, std::uint64_t seed);

struct CertificationRow {
  int sample_id = 0;
  double formula = 0;
  double oracle = 0;
  double gap = 0;  // oracle - formula
};

struct CertificationTolerance {
  double below = 1e-6;  // oracle may undercut the formula by at most this
  double above = 1e-4;  // and exceed it by at most this
};

/// 1e-6 below / 1e-4 above for the real field; 1e-6 / 1e-3 for the complex one.
CertificationTolerance default_tolerance(Field field);

struct CertificationReport {
  Field field = Field::Real;
  CertificationTolerance tolerance;
  std::vector<CertificationRow> rows;

  double max_abs_gap() const;
  double min_gap() const;
  double max_gap() const;
  bool passed() const;
  /// "sample_id,formula,oracle,gap" followed by one row per sample.
  std::string to_csv() const;
};

/// Draw `corpus_size` random densities over `field` and compare the oracle with
/// concurrence_real (real field) or concurrence_complex (complex field).
CertificationReport certify_formulas(int corpus_size, std::uint64_t seed, Field field,
                                     const OracleOptions &options = {});

}  // namespace rebit
