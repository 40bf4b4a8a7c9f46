#pragma once

#include "ultragrowth/config.hpp"
#include "ultragrowth/verdict.hpp"
#include "ultragrowth/weight_matrix.hpp"

#include <string_view>

namespace ultragrowth {

// Quantifiers over lambda and kappa range over the matrix grid only, so every
// verdict here is relative to that grid. "exists kappa" searches kappa >=
// lambda (Roumieu) or kappa <= lambda (Beurling) starting next to lambda;
// when every grid kappa fails the verdict is fails with "grid exhausted" in
// the detail.
enum class MatrixCondition {
  c12L2R,
  c37LR,
  M2primeR,
  M2R,
  c12L2B,
  c37LB,
  M2primeB,
  M2B,
  beurling_square,
  monotone,
  constant,
  standard_log_convex
};

std::string_view to_string(MatrixCondition c);
MatrixCondition matrix_condition_from_string(std::string_view s);

/// Witnesses are keyed "lambda=<l>.kappa", "lambda=<l>.A" (or ".H" and
/// ".B@<C>" for the c12L2 pair).
Verdict check_matrix_condition(const WeightMatrix& m, MatrixCondition cond,
                               const Tolerances& tol = {});

enum class MatrixMode { roumieu, beurling, strong };

std::string_view to_string(MatrixMode m);
MatrixMode matrix_mode_from_string(std::string_view s);

/// roumieu: for all lambda exists kappa with M^(lambda) preceq N^(kappa);
/// beurling: for all lambda exists kappa with M^(kappa) preceq N^(lambda);
/// strong: M^(lambda) triangleleft N^(kappa) for every pair.
Verdict relate_matrices(const WeightMatrix& m, const WeightMatrix& n, MatrixMode mode,
                        const Tolerances& tol = {});

/// roumieu: some entry is non-quasianalytic; beurling: every entry is.
/// Throws for matrices with infinite entries.
Verdict matrix_nqa(const WeightMatrix& m, MatrixMode mode, const Tolerances& tol = {});

}  // namespace ultragrowth
