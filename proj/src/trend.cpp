#include "ultragrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double at(std::span<const double> x, std::size_t pos) {
  return x.empty() ? static_cast<double>(pos) : x[pos];
}

void require_no_nan(std::span<const double> values) {
  for (double v : values)
    if (std::isnan(v)) throw std::domain_error("trend: NaN sample");
}

SupSummary sup_range(std::span<const double> v, std::size_t lo, std::size_t hi) {
  SupSummary s{-kInf, lo};
  for (std::size_t i = lo; i < hi; ++i)
    if (v[i] > s.value) s = {v[i], i};
  return s;
}

// a - b with the conventions needed for comparing sups: -inf - -inf = 0.
double gap(double a, double b) {
  if (a == b) return 0.0;
  return a - b;
}

}  // namespace

SupSummary sup_of(std::span<const double> values) {
  return sup_range(values, 0, values.size());
}

SupSummary inf_of(std::span<const double> values) {
  SupSummary s{kInf, 0};
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] < s.value) s = {values[i], i};
  return s;
}

Verdict bounded_above(std::span<const double> values,
                      std::span<const double> abscissae, double stability) {
  require_no_nan(values);
  const std::size_t n = values.size();
  if (n < 4) return Verdict::make_inconclusive(0, 0, "fewer than 4 samples");
  const double lo = at(abscissae, 0);
  const double hi = at(abscissae, n - 1);
  const double margin = std::log1p(stability);

  const SupSummary full = sup_of(values);
  if (full.value == kInf)
    return Verdict::make_fails({at(abscissae, full.position)}, lo, hi,
                               "infinite sample");
  const SupSummary head = sup_range(values, 0, n / 2);
  if (gap(full.value, head.value) <= margin)
    return Verdict::make_holds({{"log_sup", full.value}}, lo, hi);

  const std::size_t q = n / 4;
  const double s2 = sup_range(values, 0, 2 * q).value;
  const double s3 = sup_range(values, 0, 3 * q).value;
  if (gap(s3, s2) > margin && gap(full.value, s3) > margin) {
    Verdict v = Verdict::make_fails({at(abscissae, full.position)}, lo, hi,
                                    "running sup still growing");
    v.witness["log_sup_window"] = full.value;
    return v;
  }
  Verdict v = Verdict::make_inconclusive(lo, hi, "sup not stable on window");
  v.witness["log_sup_window"] = full.value;
  return v;
}

Verdict tends_to_minus_inf(std::span<const double> values,
                           std::span<const double> abscissae, double stability) {
  require_no_nan(values);
  const std::size_t n = values.size();
  if (n < 8) return Verdict::make_inconclusive(0, 0, "fewer than 8 samples");
  const double lo = at(abscissae, 0);
  const double hi = at(abscissae, n - 1);
  const double margin = std::log1p(stability);

  const double ma = sup_range(values, n / 8, n / 4).value;
  const double mb = sup_range(values, n / 4, n / 2).value;
  const SupSummary mc = sup_range(values, n / 2, n);
  if (mc.value == -kInf)
    return Verdict::make_holds({{"drop_per_segment", kInf}}, lo, hi);
  if (gap(ma, mb) > margin && gap(mb, mc.value) > margin) {
    return Verdict::make_holds(
        {{"drop_per_segment", std::min(ma - mb, mb - mc.value)},
         {"tail_max", mc.value}},
        lo, hi);
  }
  std::vector<double> negated(values.begin(), values.end());
  for (double& v : negated) v = -v;
  const Verdict below = bounded_above(negated, abscissae, stability);
  if (below.holds()) {
    Verdict v = Verdict::make_fails({at(abscissae, mc.position)}, lo, hi,
                                    "values stay bounded below");
    v.witness["log_inf"] = -below.witness.at("log_sup");
    return v;
  }
  return Verdict::make_inconclusive(lo, hi, "no monotone descent on window");
}

Verdict tends_to_plus_inf(std::span<const double> values,
                          std::span<const double> abscissae, double stability) {
  std::vector<double> negated(values.begin(), values.end());
  for (double& v : negated) v = -v;
  Verdict v = tends_to_minus_inf(negated, abscissae, stability);
  if (auto it = v.witness.find("drop_per_segment"); it != v.witness.end()) {
    v.witness["rise_per_segment"] = it->second;
    v.witness.erase(it);
  }
  if (auto it = v.witness.find("tail_max"); it != v.witness.end()) {
    v.witness["tail_min"] = -it->second;
    v.witness.erase(it);
  }
  if (auto it = v.witness.find("log_inf"); it != v.witness.end()) {
    v.witness["log_sup"] = -it->second;
    v.witness.erase(it);
  }
  if (v.fails()) v.detail = "values stay bounded above";
  return v;
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ls_slope: need two or more paired samples");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) throw std::invalid_argument("ls_slope: degenerate abscissae");
  return sxy / sxx;
}

}  // namespace ultragrowth
