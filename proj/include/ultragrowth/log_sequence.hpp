#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ultragrowth {

enum class Provenance { explicit_values, gevrey, generated_from_weight, oscillator };

std::string to_string(Provenance p);

inline constexpr int kMinTruncation = 8;

/// Weight sequence M_0..M_P stored as natural logarithms.
///
/// Entries are finite except for sequences generated from a weight function
/// whose Young conjugate is infinite (the logarithmic weight): there an
/// infinite tail is allowed and, once started, never returns to finite
/// values.
class LogSequence {
 public:
  LogSequence() = default;

  /// Validates the invariants; throws std::invalid_argument on violation.
  LogSequence(std::vector<double> logm, std::string name,
              Provenance provenance = Provenance::explicit_values,
              double gevrey_order = 0.0);

  std::span<const double> logm() const { return logm_; }
  double operator[](std::size_t p) const { return logm_[p]; }
  /// Largest index P (entries are 0..P).
  int truncation() const { return static_cast<int>(logm_.size()) - 1; }
  std::size_t size() const { return logm_.size(); }
  const std::string& name() const { return name_; }
  Provenance provenance() const { return provenance_; }
  /// The s of p!^s for Gevrey sequences, 0 otherwise.
  double gevrey_order() const { return gevrey_order_; }

  /// True when some entry is +inf.
  bool is_exotic() const;
  /// Index of the first +inf entry, or size() when there is none.
  std::size_t finite_length() const { return finite_length_; }
  /// Quotients nondecreasing (checked exactly on finite entries).
  bool has_nondecreasing_quotients() const;

  bool operator==(const LogSequence&) const = default;

 private:
  std::vector<double> logm_;
  std::string name_;
  Provenance provenance_ = Provenance::explicit_values;
  double gevrey_order_ = 0.0;
  std::size_t finite_length_ = 0;
};

/// log mu_p = log M_p - log M_{p-1}, with log mu_0 := 0.
struct QuotientView {
  std::vector<double> logmu;

  /// Prefix sums plus log M_0.
  std::vector<double> reconstruct(double logm0) const;
};

/// Shortest decimal representation that round-trips.
std::string short_number(double x);

/// log M_p = s * logGamma(p + 1), p = 0..P.
LogSequence make_gevrey(double s, int truncation);

QuotientView quotients(const LogSequence& m);

}  // namespace ultragrowth
