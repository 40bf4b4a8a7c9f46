#pragma once

#include "ultragrowth/big_index.hpp"
#include "ultragrowth/log_sequence.hpp"

#include <memory>
#include <optional>
#include <string>

namespace ultragrowth {

/// Read access to a weight sequence at arbitrary (possibly astronomically
/// large) indices: a materialized LogSequence, a closed-form Gevrey sequence,
/// or a block-encoded oscillator.
class SequenceSource {
 public:
  virtual ~SequenceSource() = default;

  virtual std::string name() const = 0;
  /// Largest index that can be evaluated; nullopt when unbounded.
  virtual std::optional<BigIndex> last_index() const = 0;
  /// log mu_p, p >= 1 (log mu_0 = 0).
  virtual double log_mu(const BigIndex& p) const = 0;
  virtual double log_m(const BigIndex& p) const = 0;
  /// Number of indices p >= 1 with log mu_p <= log_t. Requires nondecreasing
  /// quotients. Saturates at last_index().
  virtual BigIndex count_mu_le(double log_t) const = 0;
  /// omega value only; sources with machine-sized indices override this with
  /// a path that avoids big-integer arithmetic.
  virtual double omega_value(double log_t) const;
};

/// Associated function value sup_p (p log t - log M_p) at log t, read from
/// the argmax p = #{mu_p <= t}. `saturated` is set when the argmax hits the
/// last available index.
struct OmegaValue {
  double value = 0.0;
  BigIndex argmax;
  bool saturated = false;
};
OmegaValue omega_at_log(const SequenceSource& m, double log_t);

class LogSequenceSource final : public SequenceSource {
 public:
  explicit LogSequenceSource(std::shared_ptr<const LogSequence> seq);
  explicit LogSequenceSource(LogSequence seq);

  std::string name() const override { return seq_->name(); }
  std::optional<BigIndex> last_index() const override;
  double log_mu(const BigIndex& p) const override;
  double log_m(const BigIndex& p) const override;
  BigIndex count_mu_le(double log_t) const override;
  double omega_value(double log_t) const override;

  const LogSequence& sequence() const { return *seq_; }

 private:
  std::size_t checked(const BigIndex& p) const;
  std::shared_ptr<const LogSequence> seq_;
  std::vector<double> logmu_;
};

/// M_p = p!^s evaluated in closed form: log mu_p = s log p,
/// log M_p = s logGamma(p + 1).
class GevreySource final : public SequenceSource {
 public:
  explicit GevreySource(double s);

  std::string name() const override;
  std::optional<BigIndex> last_index() const override { return std::nullopt; }
  double log_mu(const BigIndex& p) const override;
  double log_m(const BigIndex& p) const override;
  BigIndex count_mu_le(double log_t) const override;

  double order() const { return s_; }

 private:
  double s_;
};

}  // namespace ultragrowth
