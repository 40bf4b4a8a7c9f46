#pragma once

// Finite-window verdicts for asymptotic statements.
//
// Every routine here takes samples of a log-scale quantity, ordered by an
// increasing abscissa (sequence index, or a log-spaced t-grid), and decides
// a limit statement from the shape of the data:
//
//   bounded_above       holds when the sup over the first half of the window
//                       is within `stability` of the full-window sup
//                       (relative, on the exponentiated constant); fails when
//                       the running sup keeps climbing through both of the
//                       last two quarters.
//   tends_to_minus_inf  holds when the maxima over the dyadic segments
//                       [n/8,n/4), [n/4,n/2), [n/2,n) strictly fall by more
//                       than the stability margin; fails when the values are
//                       stably bounded below.
//   tends_to_plus_inf   mirror image.
//
// The remaining cases are inconclusive. When abscissae are supplied, windows
// and counterexamples are reported in those units, otherwise as positions.

#include "ultragrowth/verdict.hpp"

#include <cstddef>
#include <span>

namespace ultragrowth {

inline constexpr double kDefaultStability = 0.05;

struct SupSummary {
  double value = 0.0;
  std::size_t position = 0;
};

SupSummary sup_of(std::span<const double> values);
SupSummary inf_of(std::span<const double> values);

/// Verdict for "values are bounded above". Witness "log_sup" holds the
/// full-window sup.
Verdict bounded_above(std::span<const double> values,
                      std::span<const double> abscissae = {},
                      double stability = kDefaultStability);

/// Verdict for "values -> -inf". Witness "drop_per_segment" on success.
Verdict tends_to_minus_inf(std::span<const double> values,
                           std::span<const double> abscissae = {},
                           double stability = kDefaultStability);

/// Verdict for "values -> +inf". Witness "rise_per_segment" on success.
Verdict tends_to_plus_inf(std::span<const double> values,
                          std::span<const double> abscissae = {},
                          double stability = kDefaultStability);

/// Least-squares slope of y against x.
double ls_slope(std::span<const double> x, std::span<const double> y);

}  // namespace ultragrowth
