#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ultragrowth {

enum class Status { holds, fails, inconclusive };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

/// Outcome of an asymptotic check evaluated on a finite window.
///
/// A `holds` verdict carries the witness constants it was verified with; a
/// `fails` verdict carries the index or argument at which the violation was
/// observed. Windows are reported as the closed range of indices (or
/// arguments) that were examined.
struct Verdict {
  Status status = Status::inconclusive;
  std::map<std::string, double> witness;
  std::vector<double> counterexample;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::string detail;

  bool holds() const { return status == Status::holds; }
  bool fails() const { return status == Status::fails; }
  bool inconclusive() const { return status == Status::inconclusive; }

  static Verdict make_holds(std::map<std::string, double> witness,
                            double lo, double hi, std::string detail = {});
  static Verdict make_fails(std::vector<double> counterexample,
                            double lo, double hi, std::string detail = {});
  static Verdict make_inconclusive(double lo, double hi, std::string detail);
};

/// fails dominates inconclusive, which dominates holds.
Status worst(Status a, Status b);

/// Conjunction of verdicts: worst status, witnesses merged with a prefix per
/// part, counterexample and detail taken from the first verdict that caused
/// the aggregate status.
Verdict conjunction(const std::vector<std::pair<std::string, Verdict>>& parts);

}  // namespace ultragrowth
