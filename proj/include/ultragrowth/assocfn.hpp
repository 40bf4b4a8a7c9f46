#pragma once

#include "ultragrowth/config.hpp"
#include "ultragrowth/log_sequence.hpp"
#include "ultragrowth/sequence_source.hpp"
#include "ultragrowth/verdict.hpp"
#include "ultragrowth/weight_fn.hpp"

#include <string_view>

namespace ultragrowth {

/// omega_M(t) = max_p (p log t - log M_p). Binary search on the quotients for
/// log-convex M, full scan otherwise. Throws on t < 0.
OmegaValue omega_of_sequence(const LogSequence& m, double t);

/// log M_p = sup_t (p log t - w(t)), p = 0..P, over the grid's log t range
/// with refinement. Entries are +inf where the objective is still rising at
/// the end of the (extended) range.
LogSequence sequence_of_omega(const WeightFn& w, int truncation, const GridSpec& grid = {});

enum class WeightCondition { alpha, beta, gamma, delta, omega6, om7, omega_nqa };

std::string_view to_string(WeightCondition c);
WeightCondition weight_condition_from_string(std::string_view s);

/// Witness keys: alpha "L"; beta "C"; gamma "rise_per_segment"; delta
/// "min_second_difference"; omega6 "H"; om7 "H", "C"; omega_nqa "integral",
/// "tail_slope".
Verdict check_weight_condition(const WeightFn& w, WeightCondition cond,
                               const RunConfig& cfg = {});

enum class Triviality { nontrivial, trivial, unknown };
enum class ClassCase { beurling, roumieu };

std::string_view to_string(Triviality t);
ClassCase class_case_from_string(std::string_view s);

struct TrivialityReport {
  Triviality result = Triviality::unknown;
  /// Trend verdict on log(w(t) / t^2) the classification was read from.
  Verdict evidence;
};

TrivialityReport classify_triviality(const WeightFn& w, ClassCase c, const RunConfig& cfg = {});

/// Grid points t in [lo, min(hi, w.domain_max())] from the run grid.
std::vector<double> weight_grid(const WeightFn& w, const GridSpec& grid, double lo, double hi);

}  // namespace ultragrowth
