#pragma once

#include "ultragrowth/log_sequence.hpp"

#include <map>
#include <string>
#include <vector>

namespace ultragrowth {

/// Family of weight sequences indexed by a finite grid of positive lambdas.
///
/// Entries share one truncation, start at log M_0 = 0 and are ordered
/// entrywise: lambda <= kappa implies M^(lambda) <= M^(kappa).
class WeightMatrix {
 public:
  WeightMatrix() = default;
  /// Throws std::invalid_argument when an invariant is violated.
  WeightMatrix(std::map<double, LogSequence> entries, std::string name);

  /// Same sequence at every lambda.
  static WeightMatrix constant(const LogSequence& m, const std::vector<double>& lambdas);

  const std::map<double, LogSequence>& entries() const { return entries_; }
  const LogSequence& at(double lambda) const;
  bool contains(double lambda) const;
  std::vector<double> lambdas() const;
  int truncation() const;
  const std::string& name() const { return name_; }

 private:
  std::map<double, LogSequence> entries_;
  std::string name_;
};

}  // namespace ultragrowth
