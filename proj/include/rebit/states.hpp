#pragma once

// Pure and mixed states of n two-level systems, plus the catalog of named
// states: Bell states, omega / omega', the xi and y eigenstates, and the
// mu / nu / rho_s families indexed by sign strings.
//
// Basis ordering is lexicographic with system 0 most significant, so the
// amplitude index of |b0 b1 ... b_{n-1}> is the binary number b0 b1 ... b_{n-1}.

#include "rebit/linalg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rebit {

/// Unit-norm pure state of n two-level systems.
template <typename ScalarT>
class StateVector {
 public:
  using Scalar = ScalarT;
  static constexpr double kNormTol = 1e-12;

  /// Throws std::invalid_argument unless the length is 2^n (n >= 1) and the
  /// norm is 1 within kNormTol.
  explicit StateVector(Vec<Scalar> amplitudes);

  /// Rescales a nonzero vector to unit norm first.
  static StateVector normalized(Vec<Scalar> amplitudes);

  int n_systems() const { return n_systems_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const Vec<Scalar> &amplitudes() const { return amplitudes_; }
  Scalar operator[](Eigen::Index i) const { return amplitudes_(i); }
  static constexpr Field field() { return field_of_v<Scalar>; }

  Mat<Scalar> projector() const { return outer<Scalar>(amplitudes_); }

  StateVector<Complex> to_complex() const;

 private:
  int n_systems_ = 0;
  Vec<Scalar> amplitudes_;
};

/// Trace-one positive semidefinite operator on n two-level systems.
template <typename ScalarT>
class DensityMatrix {
 public:
  using Scalar = ScalarT;
  static constexpr double kHermTol = 1e-10;
  static constexpr double kPsdTol = 1e-10;
  static constexpr double kTraceTol = 1e-12;

  /// Throws std::invalid_argument naming the violated invariant (shape,
  /// Hermiticity, positivity or trace).
  explicit DensityMatrix(Mat<Scalar> matrix);
  explicit DensityMatrix(const StateVector<Scalar> &pure) : DensityMatrix(pure.projector()) {}

  int n_systems() const { return n_systems_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const Mat<Scalar> &matrix() const { return matrix_; }
  static constexpr Field field() { return field_of_v<Scalar>; }

  /// Reduced state on the listed systems (ascending order).
  DensityMatrix marginal(std::span<const int> keep) const;
  DensityMatrix marginal(int i, int j) const;

  DensityMatrix<Complex> to_complex() const;

 private:
  int n_systems_ = 0;
  Mat<Scalar> matrix_;
};

using RealState = StateVector<double>;
using ComplexState = StateVector<Complex>;
using RealDensity = DensityMatrix<double>;
using ComplexDensity = DensityMatrix<Complex>;

/// n_systems such that 2^n == dim, or -1.
int systems_for_dim(Eigen::Index dim);

/// Sign string (s_1, ..., s_{n-1}) labelling the mu / nu / rho_s families.
/// The implicit s_n is +1.
class SIndex {
 public:
  explicit SIndex(std::vector<int> signs);

  /// Parses "+-+" style strings; also accepts the Unicode minus sign.
  static SIndex parse(const std::string &text);
  /// The k-th of the 2^(n-1) sign strings for n systems; bit (n-2-i) of k set
  /// means s_{i+1} = -1, so k = 0 is all plus.
  static SIndex from_id(int n_systems, std::uint32_t id);
  static std::vector<SIndex> all(int n_systems);

  int n_systems() const { return static_cast<int>(signs_.size()) + 1; }
  std::size_t size() const { return signs_.size(); }
  /// s_i for i in [0, n): the stored signs followed by the implicit +1.
  int sign(int i) const;
  const std::vector<int> &signs() const { return signs_; }
  std::uint32_t id() const;
  std::string to_string() const;

  friend bool operator==(const SIndex &, const SIndex &) = default;

 private:
  std::vector<int> signs_;
};

/// Computational basis state |bits>, bits[0] being system 0.
RealState basis_state(const std::vector<int> &bits);

enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };
Bell parse_bell(const std::string &name);
RealState bell(Bell which);

/// (1/2)(|Phi+><Phi+| + |Phi-><Phi-|).
RealDensity omega();
/// (1/2)(|Phi-><Phi-| + |Psi+><Psi+|) = (1/4)(I + sigma_y (x) sigma_y).
RealDensity omega_prime();

/// Eigenstates of sigma_y: (1, +-i)/sqrt(2).
ComplexState y_eigenstate(int sign);
/// (1/sqrt 2)(|Phi-> +- i|Psi+>), the product states |y+-> (x) |y+->.
ComplexState xi_state(int sign);

/// |y_{s_1}> (x) ... (x) |y_{s_{n-1}}> (x) |y_+>.
VecC y_product(const SIndex &s);
/// sqrt(2) Re(y_product(s)).
RealState mu_state(const SIndex &s);
/// sqrt(2) Im(y_product(s)).
RealState nu_state(const SIndex &s);

/// (1/2)(|mu_s><mu_s| + |nu_s><nu_s|).
RealDensity rho_s(const SIndex &s);
/// The same state assembled from the sigma_y tensor expansion: 2^-n times the
/// sum over exponent tuples with an even number of sigma_y factors.
RealDensity rho_s_expansion(const SIndex &s);

/// Uniform mixture I / 2^n.
RealDensity maximally_mixed(int n_systems);

}  // namespace rebit
