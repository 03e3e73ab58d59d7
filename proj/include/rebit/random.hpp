#pragma once

// Seeded random generation of states, matrices and rotations. Every sweep in
// the library derives per-task generators from a root seed with
// `derive_seed`, so results do not depend on evaluation order.

#include "rebit/linalg.hpp"

#include <cstdint>
#include <random>

namespace rebit {

using Rng = std::mt19937_64;

/// SplitMix64 mixing of (root, stream) into an independent seed.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

inline Rng make_rng(std::uint64_t root, std::uint64_t stream = 0) { return Rng(derive_seed(root, stream)); }

/// Matrix of independent standard Gaussians; complex entries have independent
/// real and imaginary parts, each N(0, 1/2).
template <typename Scalar>
Mat<Scalar> gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Mat<Scalar> m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      if constexpr (is_complex_v<Scalar>) {
        const double re = normal(rng), im = normal(rng);
        m(i, j) = Complex(re, im) / std::sqrt(2.0);
      } else {
        m(i, j) = normal(rng);
      }
    }
  return m;
}

/// Orthonormalize the columns of `m` (thin QR, with the phase of R's diagonal
/// absorbed so that Gaussian inputs give Haar-distributed outputs).
template <typename Scalar>
Mat<Scalar> orthonormalize(const Mat<Scalar> &m) {
  Eigen::HouseholderQR<Mat<Scalar>> qr(m);
  Mat<Scalar> q = qr.householderQ() * Mat<Scalar>::Identity(m.rows(), m.cols());
  const Mat<Scalar> r = qr.matrixQR().topRows(m.cols()).template triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    const Scalar d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

/// Haar-random m x r matrix with orthonormal columns (m >= r).
template <typename Scalar>
Mat<Scalar> random_isometry(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
  if (rows < cols) throw std::invalid_argument("random_isometry: rows < cols");
  return orthonormalize<Scalar>(gaussian_matrix<Scalar>(rows, cols, rng));
}

/// Uniformly random unit vector of dimension `dim` over the field.
template <typename Scalar>
Vec<Scalar> random_unit_vector(Eigen::Index dim, Rng &rng) {
  Vec<Scalar> v = gaussian_matrix<Scalar>(dim, 1, rng);
  return v / v.norm();
}

/// 2x2 rotation by a uniform angle (determinant +1).
MatR random_rotation2(Rng &rng);

}  // namespace rebit
