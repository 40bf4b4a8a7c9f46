#include "ultragrowth/weight_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ultragrowth {

namespace {
constexpr double kOrderTol = 1e-9;
}

WeightMatrix::WeightMatrix(std::map<double, LogSequence> entries, std::string name)
    : entries_(std::move(entries)), name_(std::move(name)) {
  if (entries_.empty()) throw std::invalid_argument("weight matrix needs at least one entry");
  const int P = entries_.begin()->second.truncation();
  const LogSequence* prev = nullptr;
  double prev_lambda = 0.0;
  for (const auto& [lambda, m] : entries_) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw std::invalid_argument("matrix index must be a positive real");
    if (m.truncation() != P)
      throw std::invalid_argument("matrix entries must share one truncation");
    if (std::abs(m[0]) > kOrderTol)
      throw std::invalid_argument("matrix entry at lambda=" + short_number(lambda) +
                                  " has M_0 != 1");
    if (prev != nullptr) {
      for (std::size_t p = 0; p < m.size(); ++p) {
        const double a = (*prev)[p], b = m[p];
        if (a == INFINITY && b != INFINITY)
          throw std::invalid_argument("matrix not ordered at p=" + std::to_string(p));
        if (std::isfinite(a) && a > b + kOrderTol * (1.0 + std::abs(a)))
          throw std::invalid_argument("matrix not ordered between lambda=" +
                                      short_number(prev_lambda) + " and " +
                                      short_number(lambda) + " at p=" + std::to_string(p));
      }
    }
    prev = &m;
    prev_lambda = lambda;
  }
}

WeightMatrix WeightMatrix::constant(const LogSequence& m, const std::vector<double>& lambdas) {
  std::map<double, LogSequence> e;
  for (double l : lambdas) e.emplace(l, m);
  return WeightMatrix(std::move(e), "const(" + m.name() + ")");
}

const LogSequence& WeightMatrix::at(double lambda) const {
  const auto it = entries_.find(lambda);
  if (it == entries_.end())
    throw std::out_of_range("no matrix entry at lambda=" + short_number(lambda));
  return it->second;
}

bool WeightMatrix::contains(double lambda) const { return entries_.count(lambda) != 0; }

std::vector<double> WeightMatrix::lambdas() const {
  std::vector<double> out;
  for (const auto& [l, m] : entries_) out.push_back(l);
  return out;
}

int WeightMatrix::truncation() const { return entries_.begin()->second.truncation(); }

}  // namespace ultragrowth
