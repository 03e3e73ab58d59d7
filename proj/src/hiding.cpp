#include "rebit/hiding.hpp"

#include <map>
#include <sstream>

namespace rebit {

HiddenRecord encode(const SIndex &secret) { return {secret, rho_s(secret)}; }

LocalStrategy computational_strategy(int n_rebits) {
  return LocalStrategy(static_cast<std::size_t>(n_rebits), computational_effect(0));
}

LocalStrategy random_strategy(int n_rebits, Rng &rng) { return random_real_product_effect(n_rebits, rng); }

VecR outcome_distribution(const RealDensity &rho, const LocalStrategy &strategy) {
  const int n = rho.n_systems();
  if (static_cast<int>(strategy.size()) != n) throw std::invalid_argument("strategy: one effect per site required");
  const std::uint32_t count = 1u << n;
  VecR dist(count);
  ProductEffect<double> effect;
  effect.reserve(static_cast<std::size_t>(n));
  for (std::uint32_t outcome = 0; outcome < count; ++outcome) {
    effect.clear();
    for (int i = 0; i < n; ++i) {
      const auto &e = strategy[static_cast<std::size_t>(i)];
      effect.push_back((outcome >> (n - 1 - i)) & 1u ? e.complement() : e);
    }
    dist(outcome) = joint_probability(rho, effect);
  }
  return dist;
}

std::string outcome_bits(std::uint32_t outcome, int n_rebits) {
  std::string out;
  for (int i = 0; i < n_rebits; ++i) out.push_back((outcome >> (n_rebits - 1 - i)) & 1u ? '1' : '0');
  return out;
}

VecR AttackTranscript::frequencies() const {
  VecR f = VecR::Zero(Eigen::Index{1} << n_rebits);
  for (const auto &t : trials) f(t.outcome) += 1.0;
  if (!trials.empty()) f /= static_cast<double>(trials.size());
  return f;
}

std::string AttackTranscript::to_csv() const {
  std::ostringstream out;
  out << "trial_id,outcome_bits,secret_id\n";
  for (const auto &t : trials) out << t.trial_id << ',' << outcome_bits(t.outcome, n_rebits) << ',' << t.secret_id << '\n';
  return out.str();
}

namespace {

std::uint32_t sample_index(const VecR &probabilities, Rng &rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng) * probabilities.sum();
  double cumulative = 0;
  for (Eigen::Index k = 0; k < probabilities.size(); ++k) {
    cumulative += probabilities(k);
    if (u < cumulative) return static_cast<std::uint32_t>(k);
  }
  // Rounding at the top of the CDF: take the last outcome with nonzero mass.
  for (Eigen::Index k = probabilities.size() - 1; k >= 0; --k)
    if (probabilities(k) > 0) return static_cast<std::uint32_t>(k);
  throw std::runtime_error("sampling: distribution has no mass");
}

}  // namespace

AttackTranscript local_attack(const HiddenRecord &record, const LocalStrategy &strategy, int trials,
                              std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("local_attack: negative trial count");
  const VecR dist = outcome_distribution(record.state, strategy);
  AttackTranscript transcript{record.n_rebits(), {}};
  transcript.trials.reserve(static_cast<std::size_t>(trials));
  Rng rng = make_rng(seed, record.secret.id());
  for (int t = 0; t < trials; ++t) transcript.trials.push_back({t, sample_index(dist, rng), record.secret.id()});
  return transcript;
}

double secret_spread(int n_rebits, const LocalStrategy &strategy) {
  VecR lo, hi;
  for (const auto &s : SIndex::all(n_rebits)) {
    const VecR d = outcome_distribution(rho_s(s), strategy);
    if (lo.size() == 0) {
      lo = hi = d;
    } else {
      lo = lo.cwiseMin(d);
      hi = hi.cwiseMax(d);
    }
  }
  return (hi - lo).maxCoeff();
}

double exact_leakage(int n_rebits, const LocalStrategy &strategy) {
  const auto secrets = SIndex::all(n_rebits);
  const double prior = 1.0 / static_cast<double>(secrets.size());
  MatR joint(static_cast<Eigen::Index>(secrets.size()), Eigen::Index{1} << n_rebits);
  for (std::size_t k = 0; k < secrets.size(); ++k)
    joint.row(static_cast<Eigen::Index>(k)) = prior * outcome_distribution(rho_s(secrets[k]), strategy).transpose();
  joint /= joint.sum();  // absorb rounding so the table sums to 1
  return mutual_information(joint);
}

double empirical_leakage(const std::vector<AttackTranscript> &transcripts) {
  if (transcripts.empty()) throw std::invalid_argument("empirical_leakage: no transcripts");
  std::map<std::uint32_t, Eigen::Index> secret_rows;
  std::size_t total = 0;
  for (const auto &tr : transcripts)
    for (const auto &t : tr.trials) {
      secret_rows.emplace(t.secret_id, 0);
      ++total;
    }
  if (total == 0) throw std::invalid_argument("empirical_leakage: no trials");
  Eigen::Index next = 0;
  for (auto &[id, row] : secret_rows) row = next++;
  MatR joint = MatR::Zero(next, Eigen::Index{1} << transcripts.front().n_rebits);
  for (const auto &tr : transcripts)
    for (const auto &t : tr.trials) joint(secret_rows.at(t.secret_id), t.outcome) += 1.0;
  return mutual_information(joint / static_cast<double>(total));
}

RecoveryOutcome joint_measure(const RealDensity &state, Rng &rng) {
  if (state.n_systems() < 2) throw std::invalid_argument("joint_measure: need at least two rebits");
  const auto labels = SIndex::all(state.n_systems());
  // Basis order: mu_0, nu_0, mu_1, nu_1, ...
  VecR probabilities(static_cast<Eigen::Index>(2 * labels.size()));
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const VecR mu = mu_state(labels[k]).amplitudes();
    const VecR nu = nu_state(labels[k]).amplitudes();
    probabilities(static_cast<Eigen::Index>(2 * k)) = std::max(0.0, mu.dot(state.matrix() * mu));
    probabilities(static_cast<Eigen::Index>(2 * k + 1)) = std::max(0.0, nu.dot(state.matrix() * nu));
  }
  const std::uint32_t outcome = sample_index(probabilities, rng);
  return {labels[outcome / 2], outcome % 2 == 0};
}

RecoveryOutcome joint_measure(const HiddenRecord &record, Rng &rng) { return joint_measure(record.state, rng); }

SIndex joint_recover(const RealDensity &state, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return joint_measure(state, rng).secret;
}

SIndex joint_recover(const HiddenRecord &record, std::uint64_t seed) { return joint_recover(record.state, seed); }

}  // namespace rebit
