#pragma once

#include "ultragrowth/config.hpp"
#include "ultragrowth/log_sequence.hpp"
#include "ultragrowth/verdict.hpp"

#include <string>
#include <string_view>

namespace ultragrowth {

enum class SequenceCondition {
  M1,               // log-convexity: mu_p nondecreasing
  normalized,       // M_0 = 1 <= M_1
  M2prime,          // derivation closedness
  M2,               // moderate growth
  algebra,          // M_p M_q <= M_{p+q}
  M0,               // (c(p+1))^p <= M_p
  root_divergence,  // M_p^(1/p) -> inf
  nonquasianalytic  // sum 1/mu_p < inf
};

std::string_view to_string(SequenceCondition c);
/// Accepts the enum spellings and a few aliases ("M2'", "nqa", "lc-root").
SequenceCondition sequence_condition_from_string(std::string_view s);

/// Decides one regularity condition on the window p = 1..P.
///
/// Sequences with +inf entries admit only M1 and normalized; any other
/// condition throws std::invalid_argument. Witness keys by condition:
/// M1 "min_increment"; normalized "log_M1"; M2prime "D"; M2 "C" (direct
/// scan) and "A" (quotient criterion); algebra "max_slack"; M0 "c";
/// root_divergence "rise_per_segment"; nonquasianalytic "partial_sum",
/// "tail_slope".
Verdict check_sequence_condition(const LogSequence& m, SequenceCondition cond,
                                 const Tolerances& tol = {});

/// normalized and M1 and root_divergence; status is the worst of the three.
Verdict check_LC(const LogSequence& m, const Tolerances& tol = {});

}  // namespace ultragrowth
