#include "rebit/entanglement.hpp"

#include <cmath>

namespace rebit {

namespace {

template <typename Scalar>
void require_two_systems(int n, const char *what) {
  if (n != 2)
    throw std::invalid_argument(std::string(what) + ": expected a two-system state, got " + std::to_string(n));
}

double xlog2x(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

}  // namespace

template <typename Scalar>
SchmidtPair schmidt(const StateVector<Scalar> &state) {
  require_two_systems<Scalar>(state.n_systems(), "schmidt");
  Mat<Scalar> amp(2, 2);
  amp << state[0], state[1], state[2], state[3];
  const VecR sv = singular_values(amp);
  return {sv(0), sv(1)};
}

template <typename Scalar>
double concurrence_pure(const StateVector<Scalar> &state) {
  const auto [alpha, beta] = schmidt(state);
  return 2.0 * alpha * beta;
}

template <typename Scalar>
double entropy_of_entanglement(const StateVector<Scalar> &state) {
  const auto [alpha, beta] = schmidt(state);
  return -(xlog2x(alpha * alpha) + xlog2x(beta * beta));
}

constexpr double kRoundingFloor = 1e-14;

template <typename Scalar>
VecR concurrence_lambdas(const DensityMatrix<Scalar> &rho, LambdaReading reading) {
  require_two_systems<Scalar>(rho.n_systems(), "concurrence");
  const MatC r = rho.matrix().template cast<Complex>();
  const MatC yy = sigma_yy().cast<Complex>();
  const MatC flipped = yy * r.conjugate() * yy;

  VecR spectrum;
  if (reading == LambdaReading::SingularValues) {
    spectrum = singular_values<Complex>(r * flipped);
  } else {
    // With rho = W W^dagger, the lambdas are the singular values of
    // W^T (sigma_y x sigma_y) W. Eigenvalues of rho at rounding level are
    // dropped from W so that rank-deficient inputs stay exact.
    const auto e = eig_hermitian<Complex>(r);
    const VecR root = (e.values.array() > kRoundingFloor).select(e.values.cwiseSqrt(), 0.0);
    const MatC w = e.vectors * root.cast<Complex>().asDiagonal();
    const VecR sv = singular_values<Complex>(w.transpose() * yy * w);
    spectrum = sv.cwiseProduct(sv);
  }
  VecR lambdas(spectrum.size());
  for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
    double v = spectrum(k);
    if (v < 0) {
      if (v < -1e-12) throw std::runtime_error("concurrence: spectrum has a significantly negative value");
      v = 0;
    }
    lambdas(k) = std::sqrt(v);
  }
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
  return lambdas;
}

template <typename Scalar>
double concurrence_complex(const DensityMatrix<Scalar> &rho, LambdaReading reading) {
  const VecR l = concurrence_lambdas(rho, reading);
  return std::max(l(0) - l(1) - l(2) - l(3), 0.0);
}

template <typename Scalar>
double concurrence_real(const DensityMatrix<Scalar> &rho) {
  if constexpr (is_complex_v<Scalar>) {
    throw std::invalid_argument("concurrence_real: requires a real-tagged density matrix");
  } else {
    require_two_systems<Scalar>(rho.n_systems(), "concurrence_real");
    return std::abs((sigma_yy() * rho.matrix()).trace());
  }
}

namespace {

MatR embedded_yy(int n, int i, int j) {
  if (i == j) throw std::invalid_argument("sigma_y pair: sites must differ");
  const MatC y = pauli_y();
  const MatC ops[] = {y, y};
  const int sites[] = {i, j};
  // An even number of sigma_y factors gives a real operator.
  return embed<Complex>(ops, sites, n).real();
}

}  // namespace

template <typename Scalar>
double yy_expectation(const DensityMatrix<Scalar> &rho, int i, int j) {
  const MatR op = embedded_yy(rho.n_systems(), i, j);
  return std::real((op.cast<Scalar>() * rho.matrix()).trace());
}

template <typename Scalar>
double yy_expectation(const StateVector<Scalar> &state, int i, int j) {
  const MatR op = embedded_yy(state.n_systems(), i, j);
  const auto &a = state.amplitudes();
  return std::real(a.dot(op.cast<Scalar>() * a));
}

double PairwiseConcurrenceMap::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_systems || j >= n_systems || i == j)
    throw std::out_of_range("pairwise concurrence: invalid pair");
  return values(i, j);
}

double PairwiseConcurrenceMap::squared_sum(int hub) const {
  if (hub < 0 || hub >= n_systems) throw std::out_of_range("pairwise concurrence: hub out of range");
  double sum = 0;
  for (int j = 0; j < n_systems; ++j)
    if (j != hub) sum += values(hub, j) * values(hub, j);
  return sum;
}

namespace {

PairwiseConcurrenceMap empty_map(int n, Field field) {
  if (n < 2) throw std::invalid_argument("pairwise concurrence: need at least two systems");
  return {n, field, MatR::Zero(n, n)};
}

template <typename Scalar, typename PairValue>
PairwiseConcurrenceMap fill_map(int n, Field field, PairValue value) {
  auto map = empty_map(n, field);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) map.values(i, j) = map.values(j, i) = value(i, j);
  return map;
}

template <typename Scalar>
void require_real_branch_allowed(Field field) {
  if (field == Field::Real && is_complex_v<Scalar>)
    throw std::invalid_argument("pairwise concurrence: real branch requires real-tagged data");
}

}  // namespace

template <typename Scalar>
PairwiseConcurrenceMap pairwise_concurrences(const DensityMatrix<Scalar> &rho, Field field) {
  require_real_branch_allowed<Scalar>(field);
  const int n = rho.n_systems();
  if (field == Field::Real)
    return fill_map<Scalar>(n, field, [&](int i, int j) { return std::abs(yy_expectation(rho, i, j)); });
  return fill_map<Scalar>(n, field, [&](int i, int j) { return concurrence_complex(rho.marginal(i, j)); });
}

template <typename Scalar>
PairwiseConcurrenceMap pairwise_concurrences(const StateVector<Scalar> &state, Field field) {
  require_real_branch_allowed<Scalar>(field);
  const int n = state.n_systems();
  if (field == Field::Real)
    return fill_map<Scalar>(n, field, [&](int i, int j) { return std::abs(yy_expectation(state, i, j)); });
  const Mat<Scalar> projector = state.projector();
  return fill_map<Scalar>(n, field, [&](int i, int j) {
    const int keep[] = {i, j};
    return concurrence_complex(DensityMatrix<Scalar>(partial_trace_qubits<Scalar>(projector, n, keep)));
  });
}

PairwiseConcurrenceMap pairwise_real_via_marginals(const RealDensity &rho) {
  return fill_map<double>(rho.n_systems(), Field::Real,
                          [&](int i, int j) { return concurrence_real(rho.marginal(i, j)); });
}

template <typename Scalar>
MonogamyResult monogamy_check(const StateVector<Scalar> &state, int hub) {
  if constexpr (!is_complex_v<Scalar>) {
    throw std::invalid_argument("monogamy_check: the inequality is a complex-theory claim; "
                                "real-tagged states are rejected");
  } else {
    const auto map = pairwise_concurrences(state, Field::Complex);
    const double lhs = map.squared_sum(hub);
    return {lhs, lhs <= 1.0 + kMonogamyTol};
  }
}

ComplexState haar_random_state(int n_systems, Rng &rng) {
  if (n_systems < 1) throw std::invalid_argument("haar_random_state: n must be positive");
  return ComplexState(random_unit_vector<Complex>(Eigen::Index{1} << n_systems, rng));
}

#define REBIT_INSTANTIATE(S)                                                                   \
  template SchmidtPair schmidt(const StateVector<S> &);                                        \
  template double concurrence_pure(const StateVector<S> &);                                    \
  template double entropy_of_entanglement(const StateVector<S> &);                             \
  template VecR concurrence_lambdas(const DensityMatrix<S> &, LambdaReading);                  \
  template double concurrence_complex(const DensityMatrix<S> &, LambdaReading);                \
  template double concurrence_real(const DensityMatrix<S> &);                                  \
  template double yy_expectation(const DensityMatrix<S> &, int, int);                          \
  template double yy_expectation(const StateVector<S> &, int, int);                            \
  template PairwiseConcurrenceMap pairwise_concurrences(const DensityMatrix<S> &, Field);      \
  template PairwiseConcurrenceMap pairwise_concurrences(const StateVector<S> &, Field);        \
  template MonogamyResult monogamy_check(const StateVector<S> &, int);

REBIT_INSTANTIATE(double)
REBIT_INSTANTIATE(Complex)
#undef REBIT_INSTANTIATE

}  // namespace rebit
