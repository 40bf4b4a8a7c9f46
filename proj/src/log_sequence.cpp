#include "ultragrowth/log_sequence.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ultragrowth {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::explicit_values: return "explicit";
    case Provenance::gevrey: return "gevrey";
    case Provenance::generated_from_weight: return "generated-from-weight";
    case Provenance::oscillator: return "oscillator";
  }
  return "explicit";
}

LogSequence::LogSequence(std::vector<double> logm, std::string name,
                         Provenance provenance, double gevrey_order)
    : logm_(std::move(logm)),
      name_(std::move(name)),
      provenance_(provenance),
      gevrey_order_(gevrey_order) {
  if (logm_.size() < static_cast<std::size_t>(kMinTruncation) + 1)
    throw std::invalid_argument("sequence needs indices 0..P with P >= 8");
  if (!std::isfinite(logm_[0]))
    throw std::invalid_argument("log M_0 must be finite");
  bool infinite_tail = false;
  finite_length_ = logm_.size();
  for (std::size_t p = 0; p < logm_.size(); ++p) {
    const double v = logm_[p];
    if (std::isnan(v))
      throw std::invalid_argument("NaN entry at p=" + std::to_string(p));
    if (v == -INFINITY)
      throw std::invalid_argument("-inf entry at p=" + std::to_string(p));
    if (v == INFINITY) {
      if (provenance_ != Provenance::generated_from_weight)
        throw std::invalid_argument("+inf entries only allowed for sequences "
                                    "generated from a weight (p=" +
                                    std::to_string(p) + ")");
      if (!infinite_tail) finite_length_ = p;
      infinite_tail = true;
    } else if (infinite_tail) {
      throw std::invalid_argument("finite entry after +inf at p=" +
                                  std::to_string(p));
    }
  }
}

bool LogSequence::is_exotic() const { return finite_length() < logm_.size(); }


bool LogSequence::has_nondecreasing_quotients() const {
  const std::size_t n = finite_length();
  for (std::size_t p = 1; p + 1 < n; ++p)
    if (logm_[p + 1] - logm_[p] < logm_[p] - logm_[p - 1]) return false;
  return true;
}

std::vector<double> QuotientView::reconstruct(double logm0) const {
  std::vector<double> out(logmu.size());
  double acc = logm0;
  out[0] = logm0;
  for (std::size_t p = 1; p < logmu.size(); ++p) {
    acc += logmu[p];
    out[p] = acc;
  }
  return out;
}

std::string short_number(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

LogSequence make_gevrey(double s, int truncation) {
  if (!(s > 0)) throw std::invalid_argument("gevrey order must be positive");
  if (truncation < kMinTruncation)
    throw std::invalid_argument("truncation must be >= 8");
  std::vector<double> logm(static_cast<std::size_t>(truncation) + 1);
  for (std::size_t p = 0; p < logm.size(); ++p)
    logm[p] = s * std::lgamma(static_cast<double>(p) + 1.0);
  return LogSequence(std::move(logm), "G^" + short_number(s),
                     Provenance::gevrey, s);
}

QuotientView quotients(const LogSequence& m) {
  QuotientView q;
  q.logmu.resize(m.size());
  q.logmu[0] = 0.0;
  for (std::size_t p = 1; p < m.size(); ++p) {
    const double a = m[p], b = m[p - 1];
    q.logmu[p] = (std::isinf(a) && std::isinf(b)) ? INFINITY : a - b;
  }
  return q;
}

}  // namespace ultragrowth
