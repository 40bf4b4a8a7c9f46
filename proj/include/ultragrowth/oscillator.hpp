#pragma once

#include "ultragrowth/big_index.hpp"
#include "ultragrowth/block_sequence.hpp"
#include "ultragrowth/config.hpp"
#include "ultragrowth/relations.hpp"
#include "ultragrowth/sequence_source.hpp"
#include "ultragrowth/verdict.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ultragrowth {

// Sequence M whose quotients mu oscillate around the quotients nu of a target
// N. Quotients grow geometrically inside the blocks [Q^m, Q^(m+1) - 1] so
// that mu_(Q^(m+1)) / mu_(Q^m) = alpha_m; the anchors k_j = Q^(m_j) are
// where mu is pinned to nu: mu/nu = 1/4 at k_2, 8 at k_3, 2^j at odd j >= 3
// and 1/j at even j >= 4.

/// Checks 1 < liminf nu_(Qj)/nu_j (Q searched in 2..8) and
/// sup nu_(2j)/nu_j < inf on j <= window. Witness "Q" (smallest admissible
/// Q >= 3), "eps_hat", "B".
Verdict validate_target(const SequenceSource& n, long long window = 4096,
                        const Tolerances& tol = {});
Verdict validate_target(const LogSequence& n, const Tolerances& tol = {});

struct OscillatorPlan {
  int Q = 3;
  int J = 0;
  /// log(1 + eps_hat): half the liminf of log nu_(Qj) - log nu_j.
  double log1p_eps = 0.0;
  double eps_hat = 0.0;
  double B = 1.0;
  double A_hat = 1.0;
  double A_cap = 2.0;
  /// n_1..n_(J-1)
  std::vector<long long> n;
  /// m_1..m_J with k_j = Q^(m_j)
  std::vector<long long> m;
  std::vector<BigIndex> anchors;
  /// log alpha_m, m = 0..m_J - 1
  std::vector<double> log_alpha;
};

/// Chooses every n_j minimally under the stage rules. Requires J >= 2 and
/// nu evaluable far beyond any materialized range (closed form). Throws
/// std::invalid_argument when Q is not admissible or a constraint cannot be
/// met with n_j <= 10^6.
OscillatorPlan plan(const SequenceSource& n, int Q, int J, const Tolerances& tol = {});

struct StageRecord {
  int j = 0;
  BigIndex k;
  double log_mu = 0.0;
  double log_nu = 0.0;
  /// "start" for j <= 2, "I" for odd j >= 3, "II" for even j >= 4
  std::string stage_case;
  /// n_j, 0 for the last anchor
  long long n = 0;
};

struct OscillatorResult {
  OscillatorPlan plan;
  std::shared_ptr<const BlockSequence> M;
  std::shared_ptr<const SequenceSource> target;
  std::vector<StageRecord> trace;
};

OscillatorResult build(const OscillatorPlan& p, std::shared_ptr<const SequenceSource> target);

/// Sub-checks keyed "claim_I", "claim_II", "anchors", "moderate_growth",
/// "alpha_condition", "oscillation". The head is materialized up to
/// min(head_truncation, k_3).
std::vector<std::pair<std::string, Verdict>> verify(const OscillatorResult& r,
                                                    int head_truncation = 4096,
                                                    const Tolerances& tol = {});

/// log mu_(k_j) - log nu_(k_j) at every anchor, read from the block encoding.
std::vector<double> anchor_log_ratios(const OscillatorResult& r);

/// Indices Q^m for m = 1..m_J (block boundaries, including every anchor).
std::vector<BigIndex> block_boundaries(const OscillatorResult& r);

struct CriticalReport {
  Verdict validation;
  OscillatorResult result;
  std::vector<std::pair<std::string, Verdict>> checks;
  /// (M_p / p!^(1/2))^(1/p) at the even anchors must fall below 1/j
  RelationReport liminf_probe;
  Verdict m0;
  /// root ratio (M_p / N_p)^(1/p) across block boundaries
  RelationReport incomparability;
  /// log(omega_M(t) / t^2) at t = mu_(k_j)
  RelationReport omega_vs_square;
};

/// Oscillator around N = G^(1/2) with Q = 3. Requires J >= 5.
CriticalReport critical_case(int J, const Tolerances& tol = {});

}  // namespace ultragrowth
