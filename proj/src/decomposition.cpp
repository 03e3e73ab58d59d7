#include "rebit/decomposition.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

namespace rebit {

template <typename Scalar>
Mat<Scalar> Decomposition<Scalar>::mixture() const {
  if (states.empty()) throw std::logic_error("decomposition: empty");
  Mat<Scalar> sum = Mat<Scalar>::Zero(states.front().dim(), states.front().dim());
  for (std::size_t j = 0; j < states.size(); ++j) sum += weights[j] * states[j].projector();
  return sum;
}

template <typename Scalar>
double Decomposition<Scalar>::reconstruction_error(const Mat<Scalar> &target) const {
  return (mixture() - target).cwiseAbs().maxCoeff();
}

template <typename Scalar>
double Decomposition<Scalar>::average_concurrence() const {
  double sum = 0;
  for (std::size_t j = 0; j < states.size(); ++j) sum += weights[j] * concurrence_pure(states[j]);
  return sum;
}

template <typename Scalar>
EigenEnsemble<Scalar> eigen_ensemble(const DensityMatrix<Scalar> &rho) {
  const auto e = eig_hermitian(rho.matrix());
  Eigen::Index rank = 0;
  while (rank < e.values.size() && e.values(rank) > kRankCut) ++rank;
  return {e.values.head(rank), e.vectors.leftCols(rank)};
}

namespace {

template <typename Scalar>
void check_mix(const EigenEnsemble<Scalar> &ensemble, const Mat<Scalar> &mix) {
  if (mix.cols() != ensemble.rank())
    throw std::invalid_argument("decomposition: mix matrix must have rank(rho) = " +
                                std::to_string(ensemble.rank()) + " columns");
  if (mix.rows() < mix.cols()) throw std::invalid_argument("decomposition: ensemble size below rank");
  if (orthonormality_error(mix) > 1e-10)
    throw std::invalid_argument("decomposition: mix matrix columns are not orthonormal");
}

/// Unnormalized members as columns: W = V diag(sqrt lambda) U^T.
template <typename Scalar>
Mat<Scalar> steered_members(const EigenEnsemble<Scalar> &ensemble, const Mat<Scalar> &mix) {
  const Mat<Scalar> scaled = ensemble.vectors * ensemble.weights.cwiseSqrt().template cast<Scalar>().asDiagonal();
  return scaled * mix.transpose();
}

template <typename Scalar>
double members_concurrence(const Mat<Scalar> &members) {
  double sum = 0;
  for (Eigen::Index j = 0; j < members.cols(); ++j) {
    const auto w = members.col(j);
    sum += 2.0 * std::abs(w(0) * w(3) - w(1) * w(2));
  }
  return sum;
}

// Smoothed objective sum_j sqrt(|z_j|^2 + eps^2), z_j = (U tau U^T)_jj with
// tau = X^T (Y (x) Y) X, so |z_j| = 2 |det W_j|. Riemannian gradient descent on
// the Stiefel manifold with Armijo backtracking and a shrinking eps.
template <typename Scalar>
class Polisher {
 public:
  Polisher(const Mat<Scalar> &scaled, const OracleOptions &options)
      : tau_(scaled.transpose() * sigma_yy().cast<Scalar>() * scaled), options_(options) {}

  Mat<Scalar> run(Mat<Scalar> mix) const {
    for (double eps = 1e-2; eps >= 1e-10; eps *= 0.1) {
      double t = 1.0;
      double value = smoothed(mix, eps);
      for (int it = 0; it < options_.polish_iterations; ++it) {
        const Mat<Scalar> grad = riemannian_gradient(mix, eps);
        const double slope = grad.squaredNorm();
        if (slope < 1e-28) break;
        t = std::min(2.0 * t, 1.0);
        bool moved = false;
        while (t > 1e-14) {
          Mat<Scalar> trial = orthonormalize<Scalar>(mix - t * grad);
          const double trial_value = smoothed(trial, eps);
          if (trial_value <= value - 1e-4 * t * slope) {
            mix = std::move(trial);
            value = trial_value;
            moved = true;
            break;
          }
          t *= 0.5;
        }
        if (!moved) break;
      }
    }
    return mix;
  }

 private:
  Vec<Scalar> diag_z(const Mat<Scalar> &mix) const { return (mix * tau_).cwiseProduct(mix).rowwise().sum(); }

  double smoothed(const Mat<Scalar> &mix, double eps) const {
    const Vec<Scalar> z = diag_z(mix);
    double sum = 0;
    for (Eigen::Index j = 0; j < z.size(); ++j) sum += std::sqrt(std::norm(z(j)) + eps * eps);
    return sum;
  }

  Mat<Scalar> riemannian_gradient(const Mat<Scalar> &mix, double eps) const {
    const Vec<Scalar> z = diag_z(mix);
    const Mat<Scalar> u_tau = mix * tau_;
    Mat<Scalar> g(mix.rows(), mix.cols());
    for (Eigen::Index j = 0; j < mix.rows(); ++j) {
      const Scalar weight = 2.0 * z(j) / std::sqrt(std::norm(z(j)) + eps * eps);
      if constexpr (is_complex_v<Scalar>)
        g.row(j) = weight * u_tau.row(j).conjugate();
      else
        g.row(j) = weight * u_tau.row(j);
    }
    const Mat<Scalar> sym = (mix.adjoint() * g + g.adjoint() * mix) / 2.0;
    return g - mix * sym;
  }

  Mat<Scalar> tau_;
  const OracleOptions &options_;
};

}  // namespace

template <typename Scalar>
Decomposition<Scalar> decomposition_from_isometry(const EigenEnsemble<Scalar> &ensemble, const Mat<Scalar> &mix) {
  check_mix(ensemble, mix);
  const Mat<Scalar> members = steered_members(ensemble, mix);
  Decomposition<Scalar> out;
  for (Eigen::Index j = 0; j < members.cols(); ++j) {
    const double p = members.col(j).squaredNorm();
    if (p <= 0) continue;
    out.weights.push_back(p);
    out.states.push_back(StateVector<Scalar>::normalized(members.col(j)));
  }
  return out;
}

template <typename Scalar>
Decomposition<Scalar> decomposition_from_isometry(const DensityMatrix<Scalar> &rho, const Mat<Scalar> &mix) {
  return decomposition_from_isometry(eigen_ensemble(rho), mix);
}

template <typename Scalar>
double steered_average_concurrence(const EigenEnsemble<Scalar> &ensemble, const Mat<Scalar> &mix) {
  check_mix(ensemble, mix);
  return members_concurrence(steered_members(ensemble, mix));
}

template <typename Scalar>
OracleResult<Scalar> minimize_average_concurrence(const DensityMatrix<Scalar> &rho, const OracleOptions &options) {
  if (rho.n_systems() != 2) throw std::invalid_argument("oracle: expected a two-system density matrix");
  if (options.restarts < 1 || options.steps < 0) throw std::invalid_argument("oracle: invalid budget");
  const auto ensemble = eigen_ensemble(rho);
  const Eigen::Index rank = ensemble.rank();
  const Eigen::Index m = rank + options.extra_states;
  if (m < rank) throw std::invalid_argument("oracle: ensemble size below rank");

  const Mat<Scalar> scaled = ensemble.vectors * ensemble.weights.cwiseSqrt().template cast<Scalar>().asDiagonal();
  auto objective = [&](const Mat<Scalar> &mix) { return members_concurrence<Scalar>(scaled * mix.transpose()); };

  const Polisher<Scalar> polisher(scaled, options);

  OracleResult<Scalar> result;
  result.best_value = std::numeric_limits<double>::infinity();
  Mat<Scalar> best_mix;
  for (int restart = 0; restart < options.restarts; ++restart) {
    Rng rng = make_rng(options.seed, static_cast<std::uint64_t>(restart));
    Mat<Scalar> mix = random_isometry<Scalar>(m, rank, rng);
    double value = objective(mix);
    double step = options.initial_step;
    int rejected = 0;
    for (int it = 1; it <= options.steps && step >= options.min_step; ++it) {
      const Mat<Scalar> trial = orthonormalize<Scalar>(mix + step * gaussian_matrix<Scalar>(m, rank, rng));
      const double trial_value = objective(trial);
      if (trial_value < value) {
        mix = trial;
        value = trial_value;
        rejected = 0;
      } else if (++rejected >= options.patience) {
        step *= 0.5;
        rejected = 0;
      }
      if (it % options.decay_every == 0) step *= options.step_decay;
    }
    if (options.polish_iterations > 0) {
      Mat<Scalar> polished = polisher.run(mix);
      const double polished_value = objective(polished);
      if (polished_value < value) {
        mix = std::move(polished);
        value = polished_value;
      }
    }
    result.restart_values.push_back(value);
    if (value < result.best_value) {
      result.best_value = value;
      best_mix = mix;
    }
    result.best_so_far.push_back(result.best_value);
  }
  result.restarts_used = options.restarts;
  result.best_decomposition = decomposition_from_isometry(ensemble, best_mix);
  int agreeing = 0;
  for (double v : result.restart_values)
    if (v - result.best_value <= kOracleAgreement) ++agreeing;
  result.converged = agreeing >= 2;
  return result;
}

template <typename Scalar>
DensityMatrix<Scalar> random_density(int n_systems, Rng &rng) {
  const Eigen::Index dim = Eigen::Index{1} << n_systems;
  const Mat<Scalar> a = gaussian_matrix<Scalar>(dim, dim, rng);
  Mat<Scalar> rho = a * a.adjoint();
  rho /= std::real(rho.trace());
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityMatrix<Scalar>(std::move(rho));
}

template <typename Scalar>
std::vector<DensityMatrix<Scalar>> random_corpus(int size, std::uint64_t seed) {
  std::vector<DensityMatrix<Scalar>> out;
  for (int k = 0; k < size; ++k) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(k));
    out.push_back(random_density<Scalar>(2, rng));
  }
  return out;
}

CertificationTolerance default_tolerance(Field field) {
  return field == Field::Real ? CertificationTolerance{1e-6, 1e-4} : CertificationTolerance{1e-6, 1e-3};
}

double CertificationReport::max_abs_gap() const {
  double m = 0;
  for (const auto &r : rows) m = std::max(m, std::abs(r.gap));
  return m;
}

double CertificationReport::min_gap() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto &r : rows) m = std::min(m, r.gap);
  return m;
}

double CertificationReport::max_gap() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto &r : rows) m = std::max(m, r.gap);
  return m;
}

bool CertificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [&](const CertificationRow &r) {
    return r.gap >= -tolerance.below && r.gap <= tolerance.above;
  });
}

std::string CertificationReport::to_csv() const {
  std::ostringstream out;
  out << "sample_id,formula,oracle,gap\n";
  char buf[128];
  for (const auto &r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", r.sample_id, r.formula, r.oracle, r.gap);
    out << buf;
  }
  return out.str();
}

namespace {

template <typename Scalar>
CertificationReport certify(int corpus_size, std::uint64_t seed, const OracleOptions &options) {
  CertificationReport report;
  report.field = field_of_v<Scalar>;
  report.tolerance = default_tolerance(report.field);
  const auto corpus = random_corpus<Scalar>(corpus_size, seed);
  for (int k = 0; k < corpus_size; ++k) {
    const auto &rho = corpus[static_cast<std::size_t>(k)];
    double formula;
    if constexpr (is_complex_v<Scalar>)
      formula = concurrence_complex(rho);
    else
      formula = concurrence_real(rho);
    OracleOptions per_sample = options;
    per_sample.seed = derive_seed(seed ^ 0xA5A5A5A5ULL, static_cast<std::uint64_t>(k));
    const double oracle = minimize_average_concurrence(rho, per_sample).best_value;
    report.rows.push_back({k, formula, oracle, oracle - formula});
  }
  return report;
}

}  // namespace

CertificationReport certify_formulas(int corpus_size, std::uint64_t seed, Field field, const OracleOptions &options) {
  if (corpus_size < 0) throw std::invalid_argument("certify_formulas: negative corpus size");
  return field == Field::Real ? certify<double>(corpus_size, seed, options)
                              : certify<Complex>(corpus_size, seed, options);
}

#define REBIT_INSTANTIATE(S)                                                                          \
  template struct Decomposition<S>;                                                                   \
  template EigenEnsemble<S> eigen_ensemble(const DensityMatrix<S> &);                                 \
  template Decomposition<S> decomposition_from_isometry(const EigenEnsemble<S> &, const Mat<S> &);    \
  template Decomposition<S> decomposition_from_isometry(const DensityMatrix<S> &, const Mat<S> &);    \
  template double steered_average_concurrence(const EigenEnsemble<S> &, const Mat<S> &);              \
  template OracleResult<S> minimize_average_concurrence(const DensityMatrix<S> &, const OracleOptions &); \
  template DensityMatrix<S> random_density(int, Rng &);                                                \
  template std::vector<DensityMatrix<S>> random_corpus(int, std::uint64_t);

REBIT_INSTANTIATE(double)
REBIT_INSTANTIATE(Complex)
#undef REBIT_INSTANTIATE

}  // namespace rebit
