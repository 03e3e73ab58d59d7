#pragma once

// Dense small-matrix numerics shared by every module. Everything is templated
// on the scalar type: `double` is the real (rebit) theory and
// `std::complex<double>` the ordinary complex theory.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace rebit {

using Complex = std::complex<double>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatR = Mat<double>;
using MatC = Mat<Complex>;
using VecR = Vec<double>;
using VecC = Vec<Complex>;

enum class Field { Real, Complex };

template <typename Scalar>
struct FieldOf;
template <>
struct FieldOf<double> {
  static constexpr Field value = Field::Real;
};
template <>
struct FieldOf<Complex> {
  static constexpr Field value = Field::Complex;
};
template <typename Scalar>
inline constexpr Field field_of_v = FieldOf<Scalar>::value;

template <typename Scalar>
inline constexpr bool is_complex_v = std::is_same_v<Scalar, Complex>;

std::string to_string(Field f);
Field parse_field(const std::string &s);

/// Tolerance for accepting a matrix as Hermitian (symmetric when real).
inline constexpr double kSymTol = 1e-10;
/// Residual tolerance for eigendecompositions.
inline constexpr double kEigTol = 1e-10;

/// Kronecker product. Dimensions multiply; system `a` is the more significant
/// index.
template <typename DerivedA, typename DerivedB>
Mat<typename DerivedA::Scalar> tensor(const Eigen::MatrixBase<DerivedA> &a,
                                      const Eigen::MatrixBase<DerivedB> &b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "tensor: operands must belong to the same field");
  using Scalar = typename DerivedA::Scalar;
  Mat<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Left-to-right Kronecker product of a list of factors.
template <typename Scalar>
Mat<Scalar> tensor_all(std::span<const Mat<Scalar>> factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_all: no factors");
  Mat<Scalar> out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor(out, factors[k]);
  return out;
}

/// Real part of a complex matrix, leaving real matrices untouched.
template <typename Scalar>
MatR real_part(const Mat<Scalar> &m) {
  if constexpr (is_complex_v<Scalar>)
    return m.real();
  else
    return m;
}

template <typename Scalar>
MatC to_complex(const Mat<Scalar> &m) {
  return m.template cast<Complex>();
}

/// Pauli matrices. sigma_y is the only purely imaginary one.
MatC pauli_y();
MatR pauli_x();
MatR pauli_z();
/// sigma_y (x) sigma_y, which is real: antidiag(-1, 1, 1, -1).
MatR sigma_yy();

/// Embed the two-level operators `ops[k]` acting on `sites[k]` into an
/// n-system operator, with identities on the remaining systems.
template <typename Scalar>
Mat<Scalar> embed(std::span<const Mat<Scalar>> ops, std::span<const int> sites, int n_systems) {
  if (ops.size() != sites.size()) throw std::invalid_argument("embed: ops/sites size mismatch");
  std::vector<Mat<Scalar>> factors(static_cast<std::size_t>(n_systems), Mat<Scalar>::Identity(2, 2));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= n_systems) throw std::out_of_range("embed: site out of range");
    factors[static_cast<std::size_t>(sites[k])] = ops[k];
  }
  return tensor_all<Scalar>(factors);
}

namespace detail {

inline std::vector<int> strides_for(std::span<const int> dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

}  // namespace detail

/// Trace out every subsystem not listed in `keep`. `keep` is interpreted as a
/// set; the kept subsystems appear in ascending order in the result.
template <typename Scalar>
Mat<Scalar> partial_trace(const Mat<Scalar> &m, std::span<const int> dims, std::span<const int> keep) {
  if (dims.empty()) throw std::invalid_argument("partial_trace: empty dims");
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: nonpositive subsystem dimension");
    total *= d;
  }
  if (m.rows() != total || m.cols() != total)
    throw std::invalid_argument("partial_trace: dims inconsistent with matrix shape");

  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(static_cast<std::size_t>(n), false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw std::out_of_range("partial_trace: keep index out of range");
    kept[static_cast<std::size_t>(k)] = true;
  }
  std::vector<int> keep_dims, drop_dims, keep_sites, drop_sites;
  for (int k = 0; k < n; ++k) {
    if (kept[static_cast<std::size_t>(k)]) {
      keep_sites.push_back(k);
      keep_dims.push_back(dims[k]);
    } else {
      drop_sites.push_back(k);
      drop_dims.push_back(dims[k]);
    }
  }
  const auto full_strides = detail::strides_for(dims);
  auto product = [](const std::vector<int> &v) {
    return std::accumulate(v.begin(), v.end(), 1, std::multiplies<>());
  };
  const int keep_total = product(keep_dims);
  const int drop_total = product(drop_dims);

  // Offset into the full index contributed by a multi-index over a subset of sites.
  auto offsets = [&](const std::vector<int> &sites, const std::vector<int> &sub_dims, int count) {
    std::vector<Eigen::Index> out(static_cast<std::size_t>(count));
    for (int flat = 0; flat < count; ++flat) {
      int rem = flat;
      Eigen::Index off = 0;
      for (int k = static_cast<int>(sites.size()) - 1; k >= 0; --k) {
        off += (rem % sub_dims[k]) * full_strides[sites[k]];
        rem /= sub_dims[k];
      }
      out[static_cast<std::size_t>(flat)] = off;
    }
    return out;
  };
  const auto keep_off = offsets(keep_sites, keep_dims, keep_total);
  const auto drop_off = offsets(drop_sites, drop_dims, drop_total);

  Mat<Scalar> out = Mat<Scalar>::Zero(keep_total, keep_total);
  for (int r = 0; r < keep_total; ++r)
    for (int c = 0; c < keep_total; ++c) {
      Scalar acc(0);
      for (auto e : drop_off) acc += m(keep_off[r] + e, keep_off[c] + e);
      out(r, c) = acc;
    }
  return out;
}

/// Convenience overload for n two-level systems.
template <typename Scalar>
Mat<Scalar> partial_trace_qubits(const Mat<Scalar> &m, int n_systems, std::span<const int> keep) {
  std::vector<int> dims(static_cast<std::size_t>(n_systems), 2);
  return partial_trace<Scalar>(m, dims, keep);
}

template <typename Scalar>
double hermiticity_error(const Mat<Scalar> &m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Scalar>
bool is_hermitian(const Mat<Scalar> &m, double tol = kSymTol) {
  return m.rows() == m.cols() && hermiticity_error(m) <= tol;
}

/// max |V^dagger V - I|; zero for exactly orthonormal columns.
template <typename Scalar>
double orthonormality_error(const Mat<Scalar> &cols) {
  const Mat<Scalar> gram = cols.adjoint() * cols;
  return (gram - Mat<Scalar>::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

template <typename Scalar>
struct HermitianEigen {
  VecR values;           // descending
  Mat<Scalar> vectors;   // orthonormal columns, matching `values`
};

/// Eigendecomposition of a Hermitian (symmetric) matrix. Eigenvalues come out
/// in descending order and each eigenvector is rotated so that its first
/// nonzero component is positive real. Degenerate eigenspaces carry an
/// arbitrary orthonormal basis; compare projectors, not vectors.
template <typename Scalar>
HermitianEigen<Scalar> eig_hermitian(const Mat<Scalar> &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_hermitian: matrix is not square");
  if (!is_hermitian(m)) throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  const Mat<Scalar> sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat<Scalar>> solver(sym);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: solver failed");

  const Eigen::Index dim = m.rows();
  HermitianEigen<Scalar> out{VecR(dim), Mat<Scalar>(dim, dim)};
  for (Eigen::Index k = 0; k < dim; ++k) {
    const Eigen::Index src = dim - 1 - k;  // solver sorts ascending
    out.values(k) = solver.eigenvalues()(src);
    Vec<Scalar> v = solver.eigenvectors().col(src);
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (std::abs(v(i)) > 1e-12) {
        if constexpr (is_complex_v<Scalar>)
          v *= std::conj(v(i)) / std::abs(v(i));
        else if (v(i) < 0)
          v = -v;
        break;
      }
    }
    out.vectors.col(k) = v;
  }
  return out;
}

/// Singular values in descending order.
template <typename Scalar>
VecR singular_values(const Mat<Scalar> &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("singular_values: matrix is not square");
  Eigen::JacobiSVD<Mat<Scalar>> svd(m);
  return svd.singularValues();  // Eigen returns them sorted descending
}

/// Projector onto the span of one vector.
template <typename Scalar>
Mat<Scalar> outer(const Vec<Scalar> &v) {
  return v * v.adjoint();
}

/// Largest imaginary magnitude among the entries; 0 for real matrices.
template <typename Derived>
double max_imag(const Eigen::MatrixBase<Derived> &m) {
  if constexpr (is_complex_v<typename Derived::Scalar>)
    return m.imag().cwiseAbs().maxCoeff();
  else
    return 0.0;
}

}  // namespace rebit
