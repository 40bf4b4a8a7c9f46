#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace ultragrowth::detail {

struct SupResult {
  double value;
  double arg;
  bool unbounded;
};

/// sup of f over [lo, hi] sampled with the given step, refined by Brent's
/// method around the best sample. With `extend`, while f still rises by more
/// than `slope_margin` per unit over the last ln(10) of the range, the range
/// grows by ln(10) up to `limit`; still rising there means unbounded.
SupResult grid_sup(const std::function<double(double)>& f, double lo, double hi,
                   double step, bool extend, double slope_margin = 1e-6,
                   double limit = 700.0);

/// phi sampled lazily on u_i = lo + i * step; shared across many sup searches
/// of p * u - phi(u).
class PhiGrid {
 public:
  PhiGrid(std::function<double(double)> phi, double lo, double step)
      : phi_(std::move(phi)), lo_(lo), step_(step) {}
  double u(std::size_t i) const { return lo_ + static_cast<double>(i) * step_; }
  double at(std::size_t i);
  double phi(double u) const { return phi_(u); }
  double step() const { return step_; }
  double lo() const { return lo_; }

 private:
  std::function<double(double)> phi_;
  double lo_;
  double step_;
  std::vector<double> values_;
};

/// Same contract as grid_sup for f(u) = p * u - phi(u), reusing cached samples.
SupResult legendre_sup(PhiGrid& grid, double p, double hi, bool extend,
                       double slope_margin = 1e-6, double limit = 700.0);

}  // namespace ultragrowth::detail
