#pragma once

// Entanglement measures for two-level systems: Schmidt coefficients, pure-state
// concurrence and entropy, the closed-form mixed-state concurrences over the
// complex and real fields, pairwise maps over n systems, and the monogamy
// (CKW) inequality check.

#include "rebit/random.hpp"
#include "rebit/states.hpp"

namespace rebit {

/// Schmidt coefficients of a two-system pure state, alpha >= beta >= 0.
struct SchmidtPair {
  double alpha = 0;
  double beta = 0;
};

template <typename Scalar>
SchmidtPair schmidt(const StateVector<Scalar> &state);

/// 2 * alpha * beta.
template <typename Scalar>
double concurrence_pure(const StateVector<Scalar> &state);

/// -(a^2 lg a^2 + b^2 lg b^2) in ebits, with 0 lg 0 = 0.
template <typename Scalar>
double entropy_of_entanglement(const StateVector<Scalar> &state);

/// Which spectrum of R = rho (Y (x) Y) rho* (Y (x) Y) supplies the lambdas.
/// Eigenvalues is the reading used by concurrence_complex; SingularValues is
/// kept so the two can be compared against the decomposition oracle.
enum class LambdaReading { Eigenvalues, SingularValues };

/// Square roots of the chosen spectrum of R, descending. Tiny negative
/// eigenvalues (above -1e-12) are clamped to zero.
template <typename Scalar>
VecR concurrence_lambdas(const DensityMatrix<Scalar> &rho, LambdaReading reading = LambdaReading::Eigenvalues);

/// max(l1 - l2 - l3 - l4, 0): the infimum of average concurrence over all
/// complex pure-state decompositions. Real inputs are accepted (conjugation is
/// in the standard basis).
template <typename Scalar>
double concurrence_complex(const DensityMatrix<Scalar> &rho,
                           LambdaReading reading = LambdaReading::Eigenvalues);

/// |Tr[(Y (x) Y) rho]|: the infimum over real decompositions. Throws
/// std::invalid_argument for complex-tagged input, where it is not a
/// decomposition infimum.
template <typename Scalar>
double concurrence_real(const DensityMatrix<Scalar> &rho);

/// <sigma_y^(i) sigma_y^(j)> on an n-system state, identities elsewhere.
template <typename Scalar>
double yy_expectation(const DensityMatrix<Scalar> &rho, int i, int j);
template <typename Scalar>
double yy_expectation(const StateVector<Scalar> &state, int i, int j);

/// Concurrence for every unordered pair of an n-system state.
struct PairwiseConcurrenceMap {
  int n_systems = 0;
  Field field = Field::Complex;
  MatR values;  // symmetric, zero diagonal

  double at(int i, int j) const;
  /// Sum over j != hub of C(hub, j)^2.
  double squared_sum(int hub) const;
};

/// Real branch: |<sigma_y^(i) sigma_y^(j)>| evaluated on the full state.
/// Complex branch: each pair reduced by partial trace to (min, max), then
/// concurrence_complex.
template <typename Scalar>
PairwiseConcurrenceMap pairwise_concurrences(const DensityMatrix<Scalar> &rho, Field field);
template <typename Scalar>
PairwiseConcurrenceMap pairwise_concurrences(const StateVector<Scalar> &state, Field field);

/// Real branch computed through explicit two-system marginals; must agree with
/// the direct route.
PairwiseConcurrenceMap pairwise_real_via_marginals(const RealDensity &rho);

struct MonogamyResult {
  double lhs = 0;
  bool satisfied = false;
};

inline constexpr double kMonogamyTol = 1e-9;

/// Sum over B != hub of C(hub, B)^2 with satisfied <=> lhs <= 1 + 1e-9. Only
/// meaningful in the complex theory; real-tagged states are rejected.
template <typename Scalar>
MonogamyResult monogamy_check(const StateVector<Scalar> &state, int hub);

/// Normalized vector of independent standard complex Gaussians.
ComplexState haar_random_state(int n_systems, Rng &rng);

}  // namespace rebit
