#include "ultragrowth/conjugate.hpp"

#include "sup_search.hpp"
#include "ultragrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ConjugateSetup {
  detail::PhiGrid phi;
  double hi;
  bool extend;
};

ConjugateSetup setup(const WeightFn& w, const GridSpec& grid) {
  double lo = 0.0;
  double hi = std::log(grid.t_max);
  const bool sampled = w.kind() == WeightKind::sampled;
  if (sampled) {
    lo = std::max(lo, std::log(w.sample_t().front()));
    hi = std::min(hi, std::log(w.domain_max()));
    if (hi < lo) throw std::invalid_argument("sampled weight does not reach t >= 1");
  }
  return {detail::PhiGrid([&w](double u) { return w.phi(u); }, lo, grid.log_step()), hi,
          !sampled};
}

double conjugate_at(ConjugateSetup& c, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("conjugate argument must be nonnegative");
  const auto r = detail::legendre_sup(c.phi, s, c.hi, c.extend);
  return r.unbounded ? kInf : r.value;
}

bool le(double a, double b, double tol) {
  if (b == kInf) return true;
  if (a == kInf) return false;
  return a <= b + tol * (1.0 + std::abs(b));
}

}  // namespace

double young_conjugate(const WeightFn& w, double s, const GridSpec& grid) {
  auto c = setup(w, grid);
  return conjugate_at(c, s);
}

ConjugateTable conjugate_table(const WeightFn& w, std::vector<double> s_grid,
                               const GridSpec& grid) {
  for (std::size_t i = 0; i < s_grid.size(); ++i) {
    if (!(s_grid[i] >= 0.0)) throw std::invalid_argument("s grid must be nonnegative");
    if (i > 0 && !(s_grid[i] > s_grid[i - 1]))
      throw std::invalid_argument("s grid must be strictly increasing");
  }
  auto c = setup(w, grid);
  ConjugateTable t{w, std::move(s_grid), {}, -kInf};
  for (double s : t.s_grid) {
    const double v = conjugate_at(c, s);
    t.values.push_back(v);
    if (std::isfinite(v)) t.finite_threshold = s;
  }
  return t;
}

Verdict check_conjugate_table(const ConjugateTable& table, const Tolerances& tol) {
  const auto& s = table.s_grid;
  const auto& v = table.values;
  std::size_t n = 0;
  while (n < v.size() && std::isfinite(v[n])) ++n;
  const double lo = s.empty() ? 0.0 : s.front();
  const double hi = n == 0 ? lo : s[n - 1];
  for (std::size_t i = 1; i < n; ++i) {
    if (!le(v[i - 1], v[i], tol.log_tol))
      return Verdict::make_fails({s[i]}, lo, hi, "conjugate decreases");
    if (s[i - 1] > 0.0 && !le(v[i - 1] / s[i - 1], v[i] / s[i], tol.log_tol))
      return Verdict::make_fails({s[i]}, lo, hi, "phi*(s)/s decreases");
    if (i + 1 < n) {
      const double left = (v[i] - v[i - 1]) / (s[i] - s[i - 1]);
      const double right = (v[i + 1] - v[i]) / (s[i + 1] - s[i]);
      if (!le(left, right, 1e-6))
        return Verdict::make_fails({s[i]}, lo, hi, "conjugate not convex");
    }
  }
  return Verdict::make_holds({{"finite_threshold", table.finite_threshold}}, lo, hi);
}

WeightMatrix matrix_of_weight(const WeightFn& w, std::vector<double> lambdas, int truncation,
                              const GridSpec& grid) {
  if (lambdas.empty()) throw std::invalid_argument("matrix_of_weight: empty lambda grid");
  if (truncation < kMinTruncation)
    throw std::invalid_argument("matrix_of_weight: truncation below minimum");
  std::sort(lambdas.begin(), lambdas.end());
  auto c = setup(w, grid);
  if (std::abs(conjugate_at(c, 0.0)) > 1e-9)
    throw std::invalid_argument("matrix_of_weight: weight must vanish at t = 1 (phi*(0) != 0)");
  std::map<double, LogSequence> entries;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw std::invalid_argument("matrix_of_weight: lambda must be positive");
    std::vector<double> logm(static_cast<std::size_t>(truncation) + 1, kInf);
    logm[0] = 0.0;
    for (int p = 1; p <= truncation; ++p) {
      const double v = conjugate_at(c, lambda * p);
      if (v == kInf) break;
      logm[static_cast<std::size_t>(p)] = v / lambda;
    }
    entries.emplace(lambda, LogSequence(std::move(logm),
                                        "W^(" + short_number(lambda) + ")[" + w.spec() + "]",
                                        Provenance::generated_from_weight));
  }
  return WeightMatrix(std::move(entries), "matrix(" + w.spec() + ")");
}

Verdict check_generated_matrix(const WeightMatrix& m, const Tolerances& tol) {
  const double t = tol.log_tol;
  const int P = m.truncation();
  const auto ls = m.lambdas();
  const double lo = 0, hi = P;

  Verdict unit = Verdict::make_holds({}, lo, hi);
  for (double l : ls)
    if (std::abs(m.at(l)[0]) > t) unit = Verdict::make_fails({l, 0}, lo, hi, "W_0 != 1");

  Verdict convex = Verdict::make_holds({}, lo, hi);
  for (double l : ls) {
    const auto& w = m.at(l);
    for (int p = 1; p < P && convex.holds(); ++p)
      if (!le(2.0 * w[p], w[p - 1] + w[p + 1], t))
        convex = Verdict::make_fails({l, double(p)}, lo, hi, "log-convexity violated");
  }

  Verdict ordered = Verdict::make_holds({}, lo, hi);
  for (std::size_t i = 1; i < ls.size() && ordered.holds(); ++i)
    for (int p = 0; p <= P; ++p)
      if (!le(m.at(ls[i - 1])[p], m.at(ls[i])[p], t)) {
        ordered = Verdict::make_fails({ls[i - 1], ls[i], double(p)}, lo, hi, "order violated");
        break;
      }

  Verdict split = Verdict::make_holds({}, lo, hi);
  int split_pairs = 0;
  for (double l : ls) {
    if (!m.contains(2.0 * l)) continue;
    ++split_pairs;
    const auto& a = m.at(l);
    const auto& b = m.at(2.0 * l);
    for (int p = 0; p <= P && split.holds(); ++p)
      for (int q = 0; p + q <= P; ++q)
        if (!le(a[p + q], b[p] + b[q], t)) {
          split = Verdict::make_fails({l, double(p), double(q)}, lo, hi, "splitting violated");
          break;
        }
  }
  if (split_pairs == 0)
    split = Verdict::make_inconclusive(lo, hi, "no lambda with 2*lambda in the grid");
  else if (split.holds())
    split.witness["pairs"] = split_pairs;

  Verdict algebra = Verdict::make_holds({}, lo, hi);
  for (double l : ls) {
    const auto& a = m.at(l);
    for (int p = 0; p <= P && algebra.holds(); ++p)
      for (int q = 0; p + q <= P; ++q)
        if (!le(a[p] + a[q], a[p + q], t)) {
          algebra = Verdict::make_fails({l, double(p), double(q)}, lo, hi, "algebra violated");
          break;
        }
  }

  return conjunction({{"unit", unit},
                      {"log_convex", convex},
                      {"ordered", ordered},
                      {"splitting", split},
                      {"algebra", algebra}});
}

Verdict scaling_property(const WeightMatrix& m, double h, const Tolerances& tol) {
  if (!(h > 0.0)) throw std::invalid_argument("scaling_property: h must be positive");
  const auto ls = m.lambdas();
  const int P = m.truncation();
  std::vector<double> ratios;
  for (double a : ls)
    for (double b : ls)
      if (b >= a) ratios.push_back(b / a);
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end(),
                           [](double x, double y) { return std::abs(x - y) < 1e-12 * y; }),
               ratios.end());
  bool any_inconclusive = false;
  for (double A : ratios) {
    double worst_log_d = 0.0;
    Status st = Status::holds;
    int checked = 0;
    for (double l : ls) {
      const double target = A * l;
      const auto it = std::find_if(ls.begin(), ls.end(), [&](double x) {
        return std::abs(x - target) <= 1e-12 * target;
      });
      if (it == ls.end()) continue;
      ++checked;
      const auto& a = m.at(l);
      const auto& b = m.at(*it);
      std::vector<double> d;
      for (int p = 0; p <= P; ++p) {
        if (b[p] == kInf) break;
        if (a[p] == kInf) {
          d.clear();
          st = worst(st, Status::fails);
          break;
        }
        d.push_back(p * std::log(h) + a[p] - b[p]);
      }
      if (st == Status::fails) break;
      if (d.size() < 4) {
        // finite part too short to judge, bounded by the finite maximum
        if (!d.empty()) worst_log_d = std::max(worst_log_d, sup_of(d).value);
        continue;
      }
      const Verdict v = bounded_above(d, {}, tol.stability);
      st = worst(st, v.status);
      if (v.holds()) worst_log_d = std::max(worst_log_d, v.witness.at("log_sup"));
      if (st == Status::fails) break;
    }
    if (checked == 0) continue;
    if (st == Status::holds)
      return Verdict::make_holds({{"A", A}, {"D", std::exp(worst_log_d)}}, 0, P);
    if (st == Status::inconclusive) any_inconclusive = true;
  }
  if (any_inconclusive)
    return Verdict::make_inconclusive(0, P, "no grid ratio A verified");
  return Verdict::make_fails({h}, 0, P, "no grid ratio A works (grid exhausted)");
}

}  // namespace ultragrowth
