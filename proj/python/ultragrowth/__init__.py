"""Growth conditions and relations for weight sequences, weight functions and weight matrices."""

from ._core import (
    LogSequence,
    Verdict,
    Weight,
    check_matrix_condition,
    check_sequence_condition,
    check_weight_condition,
    classify_triviality,
    crosscheck_transfer,
    empirical_domination,
    gevrey,
    lambda_norm,
    matrix_of_weight,
    omega,
    oscillate,
    relate_matrices,
    run_suite,
    seq_relate,
    sequence_of_omega,
    young_conjugate,
)

__all__ = [
    "LogSequence",
    "Verdict",
    "Weight",
    "check_matrix_condition",
    "check_sequence_condition",
    "check_weight_condition",
    "classify_triviality",
    "crosscheck_transfer",
    "empirical_domination",
    "gevrey",
    "lambda_norm",
    "matrix_of_weight",
    "omega",
    "oscillate",
    "relate_matrices",
    "run_suite",
    "seq_relate",
    "sequence_of_omega",
    "young_conjugate",
]
