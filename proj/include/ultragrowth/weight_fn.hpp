#pragma once

#include "ultragrowth/sequence_source.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ultragrowth {

enum class WeightKind { power, shifted_log, trunc_log, associated, sampled };

/// Weight function on [0, inf), evaluated as w(t) or through
/// phi(u) = w(e^u), which stays accurate for large u.
///
/// power(a, normalized=true) is max(0, t^a - 1) (vanishes on [0, 1]);
/// power(a, false) is t^a. shifted_log is log(1 + t), trunc_log is
/// max(0, log t). associated(M) is omega_M. sampled interpolates linearly
/// in t between the given points and throws outside their range.
class WeightFn {
 public:
  static WeightFn power(double a, bool normalized = true);
  static WeightFn shifted_log();
  static WeightFn trunc_log();
  /// `label` is what spec() reports, e.g. "gevrey:0.5" or "assoc:file.json".
  static WeightFn associated(std::shared_ptr<const SequenceSource> m, std::string label);
  static WeightFn sampled(std::vector<double> t, std::vector<double> values,
                          bool normalized = false);

  double operator()(double t) const;
  double phi(double u) const;

  WeightKind kind() const { return kind_; }
  bool normalized() const { return normalized_; }
  double exponent() const { return a_; }
  /// Largest t where the weight is meaningful: the last sample, or for an
  /// associated function of a finite sequence the last quotient mu_P (beyond
  /// it the sup saturates). +inf otherwise.
  double domain_max() const;
  const SequenceSource* source() const { return source_.get(); }
  const std::vector<double>& sample_t() const { return ts_; }
  const std::vector<double>& sample_values() const { return vs_; }

  /// Mini-language rendering: "t^a", "raw:t^a", "log1p", "logtrunc", the
  /// label of an associated weight, "sampled".
  std::string spec() const;

 private:
  WeightKind kind_ = WeightKind::power;
  double a_ = 1.0;
  bool normalized_ = true;
  std::shared_ptr<const SequenceSource> source_;
  std::string label_;
  std::vector<double> ts_;
  std::vector<double> vs_;
};

}  // namespace ultragrowth
