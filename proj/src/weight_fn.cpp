#include "ultragrowth/weight_fn.hpp"

#include "ultragrowth/log_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

WeightFn WeightFn::power(double a, bool normalized) {
  if (!(a > 0) || !std::isfinite(a)) throw std::invalid_argument("power weight: exponent must be positive");
  WeightFn w;
  w.kind_ = WeightKind::power;
  w.a_ = a;
  w.normalized_ = normalized;
  return w;
}

WeightFn WeightFn::shifted_log() {
  WeightFn w;
  w.kind_ = WeightKind::shifted_log;
  w.normalized_ = false;
  return w;
}

WeightFn WeightFn::trunc_log() {
  WeightFn w;
  w.kind_ = WeightKind::trunc_log;
  w.normalized_ = true;
  return w;
}

WeightFn WeightFn::associated(std::shared_ptr<const SequenceSource> m, std::string label) {
  if (!m) throw std::invalid_argument("associated weight: null sequence");
  WeightFn w;
  w.kind_ = WeightKind::associated;
  w.source_ = std::move(m);
  w.label_ = std::move(label);
  // omega_M vanishes on [0, 1] iff M_0 = 1 and mu_1 >= 1
  w.normalized_ = w.source_->log_m(0) == 0.0 && w.source_->log_mu(1) >= 0.0;
  return w;
}

WeightFn WeightFn::sampled(std::vector<double> t, std::vector<double> values, bool normalized) {
  if (t.size() != values.size() || t.size() < 2)
    throw std::invalid_argument("sampled weight: need two or more (t, value) pairs");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::isnan(t[i]) || std::isnan(values[i]) || t[i] < 0)
      throw std::invalid_argument("sampled weight: invalid sample");
    if (i > 0 && !(t[i] > t[i - 1]))
      throw std::invalid_argument("sampled weight: t must be strictly increasing");
    if (i > 0 && values[i] < values[i - 1])
      throw std::invalid_argument("sampled weight: values must be nondecreasing");
  }
  WeightFn w;
  w.kind_ = WeightKind::sampled;
  w.ts_ = std::move(t);
  w.vs_ = std::move(values);
  w.normalized_ = normalized;
  return w;
}

double WeightFn::operator()(double t) const {
  if (t < 0 || std::isnan(t)) throw std::domain_error("weight evaluated at negative t");
  if (normalized_ && t <= 1.0) return 0.0;
  switch (kind_) {
    case WeightKind::power:
      return normalized_ ? std::pow(t, a_) - 1.0 : std::pow(t, a_);
    case WeightKind::shifted_log:
      return std::log1p(t);
    case WeightKind::trunc_log:
      return std::log(t);
    case WeightKind::associated:
      return source_->omega_value(t == 0 ? -kInf : std::log(t));
    case WeightKind::sampled: {
      if (t < ts_.front() || t > ts_.back())
        throw std::out_of_range("sampled weight evaluated outside its grid");
      auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
      if (it == ts_.end()) return vs_.back();
      const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
      const double f = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
      return vs_[i - 1] + f * (vs_[i] - vs_[i - 1]);
    }
  }
  return 0.0;
}

double WeightFn::phi(double u) const {
  if (std::isnan(u)) throw std::domain_error("phi evaluated at NaN");
  if (normalized_ && u <= 0) return 0.0;
  switch (kind_) {
    case WeightKind::power:
      return normalized_ ? std::expm1(a_ * u) : std::exp(a_ * u);
    case WeightKind::shifted_log:
      return u > 36 ? u + std::exp(-u) : std::log1p(std::exp(u));
    case WeightKind::trunc_log:
      return u;
    case WeightKind::associated:
      return source_->omega_value(u);
    case WeightKind::sampled:
      return (*this)(std::exp(u));
  }
  return 0.0;
}

double WeightFn::domain_max() const {
  switch (kind_) {
    case WeightKind::sampled:
      return ts_.back();
    case WeightKind::associated: {
      const auto last = source_->last_index();
      if (!last) return kInf;
      return std::exp(source_->log_mu(*last));
    }
    default:
      return kInf;
  }
}

std::string WeightFn::spec() const {
  switch (kind_) {
    case WeightKind::power:
      return (normalized_ ? "t^" : "raw:t^") + short_number(a_);
    case WeightKind::shifted_log: return "log1p";
    case WeightKind::trunc_log: return "logtrunc";
    case WeightKind::associated: return label_;
    case WeightKind::sampled: return "sampled";
  }
  return "";
}

}  // namespace ultragrowth
