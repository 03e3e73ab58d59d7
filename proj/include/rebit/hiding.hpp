#pragma once

// Data hiding with the rho_s family: n-1 classical bits are stored in the sign
// string of rho_s. Separated observers measuring their own rebit learn nothing
// about the bits; an observer holding all n rebits reads them out exactly by
// measuring in the orthonormal {mu_s, nu_s} basis.

#include "rebit/measurement.hpp"
#include "rebit/random.hpp"
#include "rebit/states.hpp"

#include <string>
#include <vector>

namespace rebit {

struct HiddenRecord {
  SIndex secret;
  RealDensity state;

  int n_rebits() const { return state.n_systems(); }
};

HiddenRecord encode(const SIndex &secret);

/// Binary POVM per site: outcome 0 is the listed effect, outcome 1 its
/// complement. No feed-forward between sites.
using LocalStrategy = std::vector<LocalEffect<double>>;

LocalStrategy computational_strategy(int n_rebits);
LocalStrategy random_strategy(int n_rebits, Rng &rng);

/// Exact probability of each outcome tuple; index bit (n-1-i) is the outcome
/// of site i, so site 0 is the most significant bit.
VecR outcome_distribution(const RealDensity &rho, const LocalStrategy &strategy);

/// Outcome tuple rendered as a bit string, site 0 first.
std::string outcome_bits(std::uint32_t outcome, int n_rebits);

struct AttackTrial {
  int trial_id = 0;
  std::uint32_t outcome = 0;
  std::uint32_t secret_id = 0;
};

struct AttackTranscript {
  int n_rebits = 0;
  std::vector<AttackTrial> trials;

  /// Empirical frequency of each outcome tuple.
  VecR frequencies() const;
  /// "trial_id,outcome_bits,secret_id" header plus one row per trial.
  std::string to_csv() const;
};

/// Sample `trials` outcome tuples of `strategy` on the record's state by
/// inverse-CDF over the exact distribution.
AttackTranscript local_attack(const HiddenRecord &record, const LocalStrategy &strategy, int trials,
                              std::uint64_t seed);

/// Largest difference, over outcome tuples, between the exact outcome
/// probabilities of any two secrets.
double secret_spread(int n_rebits, const LocalStrategy &strategy);

/// Mutual information (bits) between a uniformly drawn secret and the outcome
/// tuple, from the exact distributions.
double exact_leakage(int n_rebits, const LocalStrategy &strategy);

/// Plug-in mutual information between secret and outcome over the pooled
/// trials of several transcripts.
double empirical_leakage(const std::vector<AttackTranscript> &transcripts);

struct RecoveryOutcome {
  SIndex secret;
  bool mu_branch = true;  // the projection landed on |mu_s> rather than |nu_s>
};

/// Projective measurement in the {|mu_s>, |nu_s>} basis of the full state.
RecoveryOutcome joint_measure(const RealDensity &state, Rng &rng);
RecoveryOutcome joint_measure(const HiddenRecord &record, Rng &rng);
/// The sign-string label of the measured basis vector.
SIndex joint_recover(const RealDensity &state, std::uint64_t seed = 0);
SIndex joint_recover(const HiddenRecord &record, std::uint64_t seed = 0);

}  // namespace rebit
