#include "rebit/measurement.hpp"

#include <algorithm>
#include <limits>

namespace rebit {

template <typename Scalar>
LocalEffect<Scalar>::LocalEffect(Mat<Scalar> matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != 2 || matrix_.cols() != 2) throw std::invalid_argument("local effect: must be 2x2");
  if (!is_hermitian(matrix_, kTol)) throw std::invalid_argument("local effect: not Hermitian/symmetric");
  const VecR ev = eig_hermitian(matrix_).values;
  if (ev.minCoeff() < -kTol || ev.maxCoeff() > 1.0 + kTol)
    throw std::invalid_argument("local effect: eigenvalues outside [0, 1]");
}

template <typename Scalar>
LocalEffect<Scalar> LocalEffect<Scalar>::complement() const {
  return LocalEffect(Mat<Scalar>::Identity(2, 2) - matrix_);
}

template class LocalEffect<double>;
template class LocalEffect<Complex>;

LocalEffect<double> computational_effect(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("computational_effect: bit must be 0 or 1");
  MatR m = MatR::Zero(2, 2);
  m(bit, bit) = 1.0;
  return LocalEffect<double>(std::move(m));
}

LocalEffect<double> random_real_effect(Rng &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const MatR q = random_rotation2(rng);
  const double u1 = unit(rng), u2 = unit(rng);
  MatR m = q * Eigen::Vector2d(u1, u2).asDiagonal() * q.transpose();
  m = (m + m.transpose()).eval() / 2.0;
  return LocalEffect<double>(std::move(m));
}

LocalEffect<Complex> random_complex_effect(Rng &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const MatC u = random_isometry<Complex>(2, 2, rng);
  const double u1 = unit(rng), u2 = unit(rng);
  MatC m = u * Eigen::Vector2cd(u1, u2).asDiagonal() * u.adjoint();
  m = (m + m.adjoint()).eval() / 2.0;
  return LocalEffect<Complex>(std::move(m));
}

ProductEffect<double> random_real_product_effect(int n_systems, Rng &rng) {
  ProductEffect<double> out;
  for (int i = 0; i < n_systems; ++i) out.push_back(random_real_effect(rng));
  return out;
}

namespace {

template <typename Scalar>
Mat<Scalar> product_operator(const ProductEffect<Scalar> &effect, int n_systems) {
  if (static_cast<int>(effect.size()) != n_systems)
    throw std::invalid_argument("joint_probability: effect has " + std::to_string(effect.size()) +
                                " sites, state has " + std::to_string(n_systems));
  std::vector<Mat<Scalar>> factors;
  factors.reserve(effect.size());
  for (const auto &e : effect) factors.push_back(e.matrix());
  return tensor_all<Scalar>(factors);
}

double clamp_probability(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

template <typename Scalar>
double joint_probability(const DensityMatrix<Scalar> &rho, const ProductEffect<Scalar> &effect) {
  const Mat<Scalar> op = product_operator(effect, rho.n_systems());
  return clamp_probability(std::real((op * rho.matrix()).trace()));
}

template <typename Scalar>
double joint_probability(const StateVector<Scalar> &state, const ProductEffect<Scalar> &effect) {
  const Mat<Scalar> op = product_operator(effect, state.n_systems());
  return clamp_probability(std::real(state.amplitudes().dot(op * state.amplitudes())));
}

template <typename Scalar>
double product_of_half_traces(const ProductEffect<Scalar> &effect) {
  double p = 1.0;
  for (const auto &e : effect) p *= e.half_trace();
  return p;
}

template double joint_probability(const DensityMatrix<double> &, const ProductEffect<double> &);
template double joint_probability(const DensityMatrix<Complex> &, const ProductEffect<Complex> &);
template double joint_probability(const StateVector<double> &, const ProductEffect<double> &);
template double joint_probability(const StateVector<Complex> &, const ProductEffect<Complex> &);
template double product_of_half_traces(const ProductEffect<double> &);
template double product_of_half_traces(const ProductEffect<Complex> &);

double verify_factorization(const SIndex &s, int trials, std::uint64_t seed) {
  const RealDensity rho = rho_s(s);
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
    const auto effect = random_real_product_effect(s.n_systems(), rng);
    worst = std::max(worst, std::abs(joint_probability(rho, effect) - product_of_half_traces(effect)));
  }
  return worst;
}

double complex_factorization_deviation(const SIndex &s, int trials, std::uint64_t seed) {
  const ComplexDensity rho = rho_s(s).to_complex();
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
    ProductEffect<Complex> effect;
    for (int i = 0; i < s.n_systems(); ++i) effect.push_back(random_complex_effect(rng));
    worst = std::max(worst, std::abs(joint_probability(rho, effect) - product_of_half_traces(effect)));
  }
  return worst;
}

double verify_s_independence(int n_systems, int trials, std::uint64_t seed) {
  std::vector<RealDensity> family;
  for (const auto &s : SIndex::all(n_systems)) family.push_back(rho_s(s));
  double worst = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(t));
    const auto effect = random_real_product_effect(n_systems, rng);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto &rho : family) {
      const double p = joint_probability(rho, effect);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

double mu_state_max_spread(int n_systems) {
  std::vector<RealState> family;
  for (const auto &s : SIndex::all(n_systems)) family.push_back(mu_state(s));
  const MatR plus = MatR::Constant(2, 2, 0.5);
  const MatR minus = MatR::Identity(2, 2) - plus;
  const LocalEffect<double> choices[] = {computational_effect(0), computational_effect(1), LocalEffect<double>(plus),
                                         LocalEffect<double>(minus), LocalEffect<double>(MatR::Identity(2, 2))};
  constexpr int kChoices = 5;
  int combos = 1;
  for (int i = 0; i < n_systems; ++i) combos *= kChoices;
  double worst = 0;
  for (int c = 0; c < combos; ++c) {
    ProductEffect<double> effect;
    for (int i = 0, rem = c; i < n_systems; ++i, rem /= kChoices) effect.push_back(choices[rem % kChoices]);
    double lo = 1.0, hi = 0.0;
    for (const auto &mu : family) {
      const double p = joint_probability(mu, effect);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    worst = std::max(worst, hi - lo);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Coins

std::vector<bool> CoinDistribution::opposite() const {
  std::vector<bool> out(pattern.size());
  std::transform(pattern.begin(), pattern.end(), out.begin(), [](bool b) { return !b; });
  return out;
}

Eigen::Matrix2d CoinDistribution::pair_table(int i, int j) const {
  if (i < 0 || j < 0 || i >= n() || j >= n() || i == j)
    throw std::out_of_range("coin distribution: invalid coin pair");
  Eigen::Matrix2d table = Eigen::Matrix2d::Zero();
  // Row/column 0 = heads.
  for (const auto &outcome : {pattern, opposite()})
    table(outcome[static_cast<std::size_t>(i)] ? 0 : 1, outcome[static_cast<std::size_t>(j)] ? 0 : 1) += 0.5;
  return table;
}

std::string CoinDistribution::to_string() const {
  std::string a, b;
  for (bool h : pattern) {
    a.push_back(h ? 'H' : 'T');
    b.push_back(h ? 'T' : 'H');
  }
  return a + "/" + b;
}

std::vector<CoinDistribution> coin_distributions(int n) {
  if (n < 2) throw std::invalid_argument("coin_distributions: n must be at least 2");
  if (n > 31) throw std::invalid_argument("coin_distributions: n too large");
  std::vector<CoinDistribution> out;
  for (std::uint32_t k = 0; k < (1u << (n - 1)); ++k) {
    CoinDistribution d;
    d.pattern.push_back(true);
    for (int i = 1; i < n; ++i) d.pattern.push_back(((k >> (n - 1 - i)) & 1u) == 0);
    out.push_back(std::move(d));
  }
  return out;
}

double mutual_information(const MatR &joint) {
  if (joint.size() == 0) throw std::invalid_argument("mutual_information: empty table");
  if ((joint.array() < 0).any()) throw std::invalid_argument("mutual_information: negative probability");
  const double total = joint.sum();
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("mutual_information: table does not sum to 1");
  const VecR row = joint.rowwise().sum();
  const Eigen::RowVectorXd col = joint.colwise().sum();
  double mi = 0;
  for (Eigen::Index r = 0; r < joint.rows(); ++r)
    for (Eigen::Index c = 0; c < joint.cols(); ++c) {
      const double p = joint(r, c);
      if (p > 0) mi += p * std::log2(p / (row(r) * col(c)));
    }
  return std::max(mi, 0.0);
}

double pairwise_mutual_information(const CoinDistribution &dist, int i, int j) {
  return mutual_information(dist.pair_table(i, j));
}

}  // namespace rebit
