#include "ultragrowth/sequence_source.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ultragrowth {

OmegaValue omega_at_log(const SequenceSource& m, double log_t) {
  OmegaValue out;
  if (log_t == -INFINITY) {  // t = 0: only the p = 0 term, 0^0 = 1
    out.value = -m.log_m(0);
    out.argmax = 0;
    return out;
  }
  out.argmax = m.count_mu_le(log_t);
  const auto last = m.last_index();
  out.saturated = last.has_value() && out.argmax >= *last;
  if (out.argmax == 0) {
    out.value = -m.log_m(0);
    return out;
  }
  out.value = to_double(out.argmax) * log_t - m.log_m(out.argmax);
  return out;
}

double SequenceSource::omega_value(double log_t) const { return omega_at_log(*this, log_t).value; }

LogSequenceSource::LogSequenceSource(std::shared_ptr<const LogSequence> seq)
    : seq_(std::move(seq)), logmu_(quotients(*seq_).logmu) {}

LogSequenceSource::LogSequenceSource(LogSequence seq)
    : LogSequenceSource(std::make_shared<const LogSequence>(std::move(seq))) {}

std::optional<BigIndex> LogSequenceSource::last_index() const {
  return BigIndex(static_cast<long long>(seq_->finite_length()) - 1);
}

std::size_t LogSequenceSource::checked(const BigIndex& p) const {
  if (p < 0 || p >= BigIndex(static_cast<long long>(seq_->size())))
    throw std::out_of_range("index " + p.str() + " beyond truncation of " +
                            seq_->name());
  return static_cast<std::size_t>(p.convert_to<long long>());
}

double LogSequenceSource::log_mu(const BigIndex& p) const { return logmu_[checked(p)]; }

double LogSequenceSource::log_m(const BigIndex& p) const { return (*seq_)[checked(p)]; }

BigIndex LogSequenceSource::count_mu_le(double log_t) const {
  const std::size_t n = seq_->finite_length();
  // logmu_[1..n-1] is nondecreasing
  const auto first = logmu_.begin() + 1;
  const auto last = logmu_.begin() + static_cast<std::ptrdiff_t>(n);
  const auto it = std::upper_bound(first, last, log_t);
  return BigIndex(static_cast<long long>(it - first));
}

double LogSequenceSource::omega_value(double log_t) const {
  if (log_t == -INFINITY) return -(*seq_)[0];
  const std::size_t n = seq_->finite_length();
  const auto first = logmu_.begin() + 1;
  const auto k = static_cast<std::size_t>(
      std::upper_bound(first, logmu_.begin() + static_cast<std::ptrdiff_t>(n), log_t) - first);
  if (k == 0) return -(*seq_)[0];
  return static_cast<double>(k) * log_t - (*seq_)[k];
}

GevreySource::GevreySource(double s) : s_(s) {
  if (!(s > 0)) throw std::invalid_argument("gevrey order must be positive");
}

std::string GevreySource::name() const { return "G^" + short_number(s_); }

double GevreySource::log_mu(const BigIndex& p) const {
  if (p <= 0) return 0.0;
  return s_ * log_of(p);
}

double GevreySource::log_m(const BigIndex& p) const {
  if (p <= 1) return 0.0;
  const double x = to_double(p);
  if (std::isinf(x)) return INFINITY;
  return s_ * std::lgamma(x + 1.0);
}

BigIndex GevreySource::count_mu_le(double log_t) const {
  if (log_t < 0) return 0;
  // s log p <= log t  <=>  p <= t^(1/s)
  const double bound = log_t / s_;
  if (bound > 700) throw std::overflow_error("count_mu_le: t^(1/s) beyond range");
  BigIndex k = floor_to_index(std::exp(bound));
  // correct rounding at the boundary
  while (k > 0 && log_mu(k) > log_t) --k;
  while (log_mu(k + 1) <= log_t) ++k;
  return k;
}

}  // namespace ultragrowth
