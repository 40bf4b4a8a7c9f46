#pragma once

#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/config.hpp"
#include "ultragrowth/verdict.hpp"
#include "ultragrowth/weight_fn.hpp"
#include "ultragrowth/weight_matrix.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace ultragrowth {

enum class CoeffKind { explicit_values, weight_witness, kronecker };

std::string_view to_string(CoeffKind k);
CoeffKind coeff_kind_from_string(std::string_view s);

/// Isotropic coefficient family c_k, k = 0..support().
class CoefficientFamily {
 public:
  static constexpr long long kDefaultSupport = 1000000;

  static CoefficientFamily explicit_values(std::vector<double> values);
  /// c_k = exp(-w(sqrt k))
  static CoefficientFamily weight_witness(WeightFn w, long long support = kDefaultSupport);
  /// c_k = 1 at k = i, 0 elsewhere
  static CoefficientFamily kronecker(long long i);

  CoeffKind kind() const { return kind_; }
  long long support() const { return support_; }
  /// log |c_k|; -inf for zero entries and indices beyond the support.
  double log_abs(long long k) const;
  /// Indices the sups run over: nonzero entries, or for a witness every
  /// k <= 10^4 and then 512 log-spaced indices per decade up to the support.
  std::vector<long long> probe_indices() const;

  const std::vector<double>& values() const { return values_; }
  long long index() const { return index_; }
  const std::optional<WeightFn>& weight() const { return weight_; }

 private:
  CoeffKind kind_ = CoeffKind::explicit_values;
  long long support_ = 0;
  long long index_ = 0;
  std::vector<double> values_;
  std::optional<WeightFn> weight_;
};

enum class NormKind { roumieu, beurling };

std::string_view to_string(NormKind k);
NormKind norm_kind_from_string(std::string_view s);

struct NormMode {
  NormKind kind = NormKind::roumieu;
  int j = 1;
};

struct NormResult {
  /// log of the norm; -inf for the zero family, +inf allowed
  double log_value = 0.0;
  long long argmax = 0;
  /// running term still increasing at the last probed index
  bool tail_rising = false;
  /// some argument fell past the last quotient of a finite matrix entry
  bool saturated = false;
  /// Beurling only: classifier verdict on w(t) = o(t^2), the hypothesis the
  /// sequence-space identification needs ("nontrivial" means it holds).
  std::optional<Triviality> hypothesis;

  double value() const;
};

/// roumieu(j): sup_k log|c_k| + w(sqrt(k)/j)/j; beurling(j): sup_k log|c_k| + j w(j sqrt k).
NormResult lambda_norm(const CoefficientFamily& c, const WeightFn& w, NormMode mode,
                       const RunConfig& cfg = {});

/// As lambda_norm with w replaced by omega of the entry at l (roumieu) or 1/l
/// (beurling), without the 1/l and l factors. Throws std::out_of_range when
/// the entry is missing.
NormResult matrix_norm(const CoefficientFamily& c, const WeightMatrix& m, NormMode mode);

struct DominationReport {
  /// witness keys l, C, C1, C2, a, b
  Verdict verdict;
  int l = 0;
  double log_C = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Takes c_k = exp(-w(sqrt(k)/j)/j) (norm 1 in the w-space of index j), finds
/// the least l in 1..16 with a finite v-norm C (log C <= 50, tail not
/// rising), fits w(r h) <= C1 w(h) + C2 with r = l/j, and checks the induced
/// bound v <= a w + b, a = r C1, b = l log C + r C2, on the probe grid.
DominationReport empirical_domination(const WeightFn& w, const WeightFn& v, int j_target = 1,
                                      const RunConfig& cfg = {});

}  // namespace ultragrowth
