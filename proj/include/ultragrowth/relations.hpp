#pragma once

#include "ultragrowth/big_index.hpp"
#include "ultragrowth/config.hpp"
#include "ultragrowth/log_sequence.hpp"
#include "ultragrowth/sequence_source.hpp"
#include "ultragrowth/verdict.hpp"
#include "ultragrowth/weight_fn.hpp"

#include <string_view>
#include <vector>

namespace ultragrowth {

enum class Relation { preceq, triangleleft, equiv, sim, incomparable_probe };

std::string_view to_string(Relation r);
Relation relation_from_string(std::string_view s);

/// Relation verdict plus the audited ratio samples. For sequences the trace
/// holds r_p = (log M_p - log N_p) / p; for weights log(v(t) / w(t)).
/// liminf_est and limsup_est are exp of the min and max over the second
/// half of the trace.
struct RelationReport {
  Relation relation = Relation::preceq;
  Verdict verdict;
  std::vector<double> abscissae;
  std::vector<double> ratio_trace;
  double liminf_est = 0.0;
  double limsup_est = 0.0;
};

/// preceq: M_p <= C^p N_p (witness "C"); triangleleft: r_p -> -inf;
/// equiv: preceq both ways. Throws when the truncations differ or for
/// another relation.
RelationReport seq_relate(const LogSequence& m, const LogSequence& n, Relation rel,
                          const Tolerances& tol = {});

/// seq_relate evaluated at the given positive indices only.
RelationReport seq_relate(const SequenceSource& m, const SequenceSource& n,
                          const std::vector<BigIndex>& indices, Relation rel,
                          const Tolerances& tol = {});

/// w preceq v means v = O(w); triangleleft means v = o(w); sim is both
/// directions bounded. Sampled on the run grid over [e, t_max].
RelationReport wf_relate(const WeightFn& w, const WeightFn& v, Relation rel,
                         const RunConfig& cfg = {});

/// Decides M preceq N twice: on the sequences and through
/// omega_N(t) <= omega_M(A t) + B with A in {1, 2, 4, 8}. holds iff both
/// sides agree; fails on disagreement; inconclusive when either side is.
/// Witness "sequence_side" and "function_side" (1 holds, 0 fails), plus "A"
/// and "B" when the function side holds.
Verdict crosscheck_transfer(const LogSequence& m, const LogSequence& n,
                            const Tolerances& tol = {});

/// Same with closed-form or block sources: the sequence side is read at
/// `indices`, the function side on t in [1, t_max] with log-spaced samples.
Verdict crosscheck_transfer(const SequenceSource& m, const SequenceSource& n,
                            const std::vector<BigIndex>& indices, double log_t_max,
                            const Tolerances& tol = {});

/// Oscillation of r_k = (log M_k - log N_k) / k across the given indices
/// (usually anchors): holds iff both a new record low and a new record high
/// appear in the second half of the samples, which is how a liminf of 0 and
/// a limsup of +inf of (M_k / N_k)^(1/k) show on a finite window.
RelationReport oscillation_probe(const SequenceSource& m, const SequenceSource& n,
                                 const std::vector<BigIndex>& indices);

/// Same probe on an arbitrary trace of log ratios (e.g. quotient ratios
/// log mu_k - log nu_k at anchors).
RelationReport oscillation_probe(std::vector<double> abscissae, std::vector<double> log_ratios);

}  // namespace ultragrowth
