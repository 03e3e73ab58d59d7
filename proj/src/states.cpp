#include "rebit/states.hpp"

#include <bit>
#include <cmath>

namespace rebit {

int systems_for_dim(Eigen::Index dim) {
  if (dim < 2) return -1;
  const auto u = static_cast<std::uint64_t>(dim);
  if (!std::has_single_bit(u)) return -1;
  return std::countr_zero(u);
}

// ---------------------------------------------------------------------------
// StateVector

template <typename Scalar>
StateVector<Scalar>::StateVector(Vec<Scalar> amplitudes) : amplitudes_(std::move(amplitudes)) {
  n_systems_ = systems_for_dim(amplitudes_.size());
  if (n_systems_ < 1)
    throw std::invalid_argument("state vector: length " + std::to_string(amplitudes_.size()) +
                                " is not 2^n with n >= 1");
  if (!amplitudes_.allFinite()) throw std::invalid_argument("state vector: non-finite amplitude");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > kNormTol)
    throw std::invalid_argument("state vector: norm " + std::to_string(norm) + " is not 1");
}

template <typename Scalar>
StateVector<Scalar> StateVector<Scalar>::normalized(Vec<Scalar> amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0)) throw std::invalid_argument("state vector: cannot normalize a zero vector");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

template <typename Scalar>
StateVector<Complex> StateVector<Scalar>::to_complex() const {
  return StateVector<Complex>(amplitudes_.template cast<Complex>());
}

// ---------------------------------------------------------------------------
// DensityMatrix

template <typename Scalar>
DensityMatrix<Scalar>::DensityMatrix(Mat<Scalar> matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("density matrix: not square");
  n_systems_ = systems_for_dim(matrix_.rows());
  if (n_systems_ < 1) throw std::invalid_argument("density matrix: dimension is not 2^n with n >= 1");
  if (!matrix_.allFinite()) throw std::invalid_argument("density matrix: non-finite entry");
  if (!is_hermitian(matrix_, kHermTol)) throw std::invalid_argument("density matrix: not Hermitian");
  const Scalar tr = matrix_.trace();
  if (std::abs(tr - Scalar(1)) > kTraceTol)
    throw std::invalid_argument("density matrix: trace " + std::to_string(std::real(tr)) + " is not 1");
  const double min_eig = eig_hermitian(matrix_).values.minCoeff();
  if (min_eig < -kPsdTol)
    throw std::invalid_argument("density matrix: not positive semidefinite (eigenvalue " +
                                std::to_string(min_eig) + ")");
}

template <typename Scalar>
DensityMatrix<Scalar> DensityMatrix<Scalar>::marginal(std::span<const int> keep) const {
  return DensityMatrix(partial_trace_qubits<Scalar>(matrix_, n_systems_, keep));
}

template <typename Scalar>
DensityMatrix<Scalar> DensityMatrix<Scalar>::marginal(int i, int j) const {
  if (i == j) throw std::invalid_argument("marginal: pair must name two distinct systems");
  const int keep[] = {std::min(i, j), std::max(i, j)};
  return marginal(keep);
}

template <typename Scalar>
DensityMatrix<Complex> DensityMatrix<Scalar>::to_complex() const {
  return DensityMatrix<Complex>(matrix_.template cast<Complex>());
}

template class StateVector<double>;
template class StateVector<Complex>;
template class DensityMatrix<double>;
template class DensityMatrix<Complex>;

// ---------------------------------------------------------------------------
// SIndex

SIndex::SIndex(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw std::invalid_argument("sign index: needs at least one sign (n >= 2)");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("sign index: entries must be +1 or -1");
}

SIndex SIndex::parse(const std::string &text) {
  std::vector<int> signs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else if (text.compare(i, 3, "\xE2\x88\x92") == 0) {  // U+2212 minus sign
      signs.push_back(-1);
      i += 2;
    } else {
      throw std::invalid_argument("sign index: malformed sign string '" + text + "'");
    }
  }
  return SIndex(std::move(signs));
}

SIndex SIndex::from_id(int n_systems, std::uint32_t id) {
  if (n_systems < 2) throw std::invalid_argument("sign index: n must be at least 2");
  const int len = n_systems - 1;
  if (len < 32 && id >= (1u << len)) throw std::out_of_range("sign index: id out of range");
  std::vector<int> signs(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) signs[static_cast<std::size_t>(i)] = (id >> (len - 1 - i)) & 1u ? -1 : 1;
  return SIndex(std::move(signs));
}

std::vector<SIndex> SIndex::all(int n_systems) {
  if (n_systems < 2) throw std::invalid_argument("sign index: n must be at least 2");
  std::vector<SIndex> out;
  const std::uint32_t count = 1u << (n_systems - 1);
  out.reserve(count);
  for (std::uint32_t id = 0; id < count; ++id) out.push_back(from_id(n_systems, id));
  return out;
}

int SIndex::sign(int i) const {
  if (i < 0 || i >= n_systems()) throw std::out_of_range("sign index: system out of range");
  return i < static_cast<int>(signs_.size()) ? signs_[static_cast<std::size_t>(i)] : 1;
}

std::uint32_t SIndex::id() const {
  std::uint32_t id = 0;
  for (int s : signs_) id = (id << 1) | (s < 0 ? 1u : 0u);
  return id;
}

std::string SIndex::to_string() const {
  std::string out;
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

RealState basis_state(const std::vector<int> &bits) {
  if (bits.empty()) throw std::invalid_argument("basis_state: no systems");
  VecR v = VecR::Zero(Eigen::Index{1} << bits.size());
  Eigen::Index idx = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("basis_state: bits must be 0 or 1");
    idx = (idx << 1) | b;
  }
  v(idx) = 1.0;
  return RealState(std::move(v));
}

Bell parse_bell(const std::string &name) {
  if (name == "phi+" || name == "Phi+") return Bell::PhiPlus;
  if (name == "phi-" || name == "Phi-") return Bell::PhiMinus;
  if (name == "psi+" || name == "Psi+") return Bell::PsiPlus;
  if (name == "psi-" || name == "Psi-") return Bell::PsiMinus;
  throw std::invalid_argument("unknown Bell state '" + name + "' (expected phi+|phi-|psi+|psi-)");
}

RealState bell(Bell which) {
  const double h = 1.0 / std::sqrt(2.0);
  VecR v(4);
  switch (which) {
    case Bell::PhiPlus: v << h, 0, 0, h; break;
    case Bell::PhiMinus: v << h, 0, 0, -h; break;
    case Bell::PsiPlus: v << 0, h, h, 0; break;
    case Bell::PsiMinus: v << 0, h, -h, 0; break;
  }
  return RealState(std::move(v));
}

RealDensity omega() {
  return RealDensity(0.5 * (bell(Bell::PhiPlus).projector() + bell(Bell::PhiMinus).projector()));
}

RealDensity omega_prime() {
  return RealDensity(0.5 * (bell(Bell::PhiMinus).projector() + bell(Bell::PsiPlus).projector()));
}

ComplexState y_eigenstate(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("y_eigenstate: sign must be +1 or -1");
  const double h = 1.0 / std::sqrt(2.0);
  VecC v(2);
  v << h, Complex(0, sign * h);
  return ComplexState(std::move(v));
}

ComplexState xi_state(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("xi_state: sign must be +1 or -1");
  const VecC phi_minus = bell(Bell::PhiMinus).amplitudes().cast<Complex>();
  const VecC psi_plus = bell(Bell::PsiPlus).amplitudes().cast<Complex>();
  return ComplexState::normalized((phi_minus + Complex(0, sign) * psi_plus) / std::sqrt(2.0));
}

VecC y_product(const SIndex &s) {
  VecC out = y_eigenstate(s.sign(0)).amplitudes();
  for (int i = 1; i < s.n_systems(); ++i) out = tensor(out, y_eigenstate(s.sign(i)).amplitudes());
  return out;
}

RealState mu_state(const SIndex &s) { return RealState(std::sqrt(2.0) * y_product(s).real()); }

RealState nu_state(const SIndex &s) { return RealState(std::sqrt(2.0) * y_product(s).imag()); }

RealDensity rho_s(const SIndex &s) {
  return RealDensity(0.5 * (mu_state(s).projector() + nu_state(s).projector()));
}

RealDensity rho_s_expansion(const SIndex &s) {
  const int n = s.n_systems();
  const Eigen::Index dim = Eigen::Index{1} << n;
  const MatC identity = MatC::Identity(2, 2);
  const MatC y = pauli_y();
  MatC sum = MatC::Zero(dim, dim);
  std::vector<MatC> factors(static_cast<std::size_t>(n));
  for (std::uint32_t exponents = 0; exponents < (1u << n); ++exponents) {
    if (std::popcount(exponents) % 2 != 0) continue;  // odd terms are purely imaginary
    for (int i = 0; i < n; ++i) {
      const bool has_y = (exponents >> (n - 1 - i)) & 1u;
      factors[static_cast<std::size_t>(i)] = has_y ? MatC(static_cast<double>(s.sign(i)) * y) : identity;
    }
    sum += tensor_all<Complex>(factors);
  }
  return RealDensity(sum.real() / static_cast<double>(dim));
}

RealDensity maximally_mixed(int n_systems) {
  if (n_systems < 1) throw std::invalid_argument("maximally_mixed: n must be positive");
  const Eigen::Index dim = Eigen::Index{1} << n_systems;
  return RealDensity(MatR::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace rebit
