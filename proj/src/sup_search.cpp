#include "sup_search.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

namespace ultragrowth::detail {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kLn10 = std::log(10.0);

struct Best {
  double value = -kInf;
  double arg = 0.0;
  double left = 0.0;
  double right = 0.0;
};

void scan(const std::function<double(double)>& f, double lo, double hi, double step,
          Best& best) {
  const auto n = static_cast<std::int64_t>(std::ceil((hi - lo) / step - 1e-9));
  for (std::int64_t i = 0; i <= n; ++i) {
    const double u = std::min(hi, lo + static_cast<double>(i) * step);
    const double v = f(u);
    if (v > best.value) best = {v, u, std::max(lo, u - step), std::min(hi, u + step)};
  }
}

}  // namespace

SupResult grid_sup(const std::function<double(double)>& f, double lo, double hi,
                   double step, bool extend, double slope_margin, double limit) {
  Best best;
  scan(f, lo, hi, step, best);
  double end = hi;
  if (extend) {
    while (true) {
      const double slope = (f(end) - f(end - kLn10)) / kLn10;
      if (!(slope > slope_margin)) break;
      if (end >= limit) return {kInf, end, true};
      const double next = std::min(limit, end + kLn10);
      scan(f, end, next, step, best);
      end = next;
    }
  }
  if (std::isfinite(best.value) && best.right > best.left) {
    const double fl = f(best.left), fr = f(best.right);
    if (std::isfinite(fl) && std::isfinite(fr)) {
      std::uintmax_t iters = 200;
      const auto r = boost::math::tools::brent_find_minima(
          [&](double u) { return -f(u); }, best.left, best.right, 40, iters);
      if (-r.second > best.value) {
        best.value = -r.second;
        best.arg = r.first;
      }
    }
  }
  return {best.value, best.arg, false};
}

double PhiGrid::at(std::size_t i) {
  while (values_.size() <= i) values_.push_back(phi_(u(values_.size())));
  return values_[i];
}

SupResult legendre_sup(PhiGrid& grid, double p, double hi, bool extend,
                       double slope_margin, double limit) {
  const double step = grid.step();
  const auto index_of = [&](double u) {
    return static_cast<std::size_t>(std::ceil((u - grid.lo()) / step - 1e-9));
  };
  const auto f = [&](std::size_t i) { return p * grid.u(i) - grid.at(i); };
  const auto chunk = static_cast<std::size_t>(std::llround(kLn10 / step));
  std::size_t end = static_cast<std::size_t>(std::floor((hi - grid.lo()) / step + 1e-9));
  double best = -kInf;
  std::size_t arg = 0;
  double edge = -kInf;
  if (hi > grid.u(end)) edge = p * hi - grid.phi(hi);
  const auto scan_to = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i <= to; ++i) {
      const double v = f(i);
      if (v > best) {
        best = v;
        arg = i;
      }
    }
  };
  scan_to(0, end);
  if (extend) {
    while (end >= chunk) {
      const double slope = (f(end) - f(end - chunk)) / kLn10;
      if (!(slope > slope_margin)) break;
      if (grid.u(end) >= limit) return {kInf, grid.u(end), true};
      const std::size_t next = std::min(index_of(limit), end + chunk);
      scan_to(end + 1, next);
      end = next;
    }
  }
  double best_arg = grid.u(arg);
  if (edge > best) return {edge, hi, false};
  if (std::isfinite(best) && end > 0) {
    const std::size_t l = arg == 0 ? 0 : arg - 1;
    const std::size_t r = std::min(end, arg + 1);
    if (std::isfinite(f(l)) && std::isfinite(f(r))) {
      std::uintmax_t iters = 200;
      const auto res = boost::math::tools::brent_find_minima(
          [&](double u) { return -(p * u - grid.phi(u)); }, grid.u(l), grid.u(r), 40, iters);
      if (-res.second > best) {
        best = -res.second;
        best_arg = res.first;
      }
    }
  }
  return {best, best_arg, false};
}

}  // namespace ultragrowth::detail
