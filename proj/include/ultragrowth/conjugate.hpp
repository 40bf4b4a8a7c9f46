#pragma once

#include "ultragrowth/config.hpp"
#include "ultragrowth/verdict.hpp"
#include "ultragrowth/weight_fn.hpp"
#include "ultragrowth/weight_matrix.hpp"

#include <vector>

namespace ultragrowth {

/// phi*(s) = sup_{u >= 0} (s u - phi(u)) with phi(u) = w(e^u). +inf when the
/// objective still rises at the end of the extended u range. Throws on s < 0.
double young_conjugate(const WeightFn& w, double s, const GridSpec& grid = {});

struct ConjugateTable {
  WeightFn source;
  std::vector<double> s_grid;
  std::vector<double> values;
  /// Largest grid s with a finite value (-inf if none).
  double finite_threshold = 0.0;
};

/// s_grid must be nonnegative and strictly increasing.
ConjugateTable conjugate_table(const WeightFn& w, std::vector<double> s_grid,
                               const GridSpec& grid = {});

/// Nondecreasing, convex, and phi*(s)/s nondecreasing on the finite region.
Verdict check_conjugate_table(const ConjugateTable& table, const Tolerances& tol = {});

/// log W^(lambda)_p = phi*(lambda p) / lambda for p = 0..P. Requires
/// phi*(0) = 0 (w vanishing somewhere on [1, inf)); throws on empty or
/// nonpositive lambdas.
WeightMatrix matrix_of_weight(const WeightFn& w, std::vector<double> lambdas, int truncation,
                              const GridSpec& grid = {});

/// Structural properties every generated matrix has. Parts: "unit"
/// (W_0 = 1), "log_convex", "ordered", "splitting" (W^(l)_{p+q} <=
/// W^(2l)_p W^(2l)_q, over lambdas whose double is in the grid), "algebra"
/// (W^(l)_p W^(l)_q <= W^(l)_{p+q}).
Verdict check_generated_matrix(const WeightMatrix& m, const Tolerances& tol = {});

/// h^p W^(l)_p <= D W^(A l)_p for every lambda with A*lambda in the grid.
/// Searches A over the grid ratios in increasing order; witness "A" and the
/// largest fitted "D".
Verdict scaling_property(const WeightMatrix& m, double h, const Tolerances& tol = {});

}  // namespace ultragrowth
