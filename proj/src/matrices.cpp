#include "ultragrowth/matrices.hpp"

#include "ultragrowth/relations.hpp"
#include "ultragrowth/seqcore.hpp"
#include "ultragrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const std::vector<double> kCGrid = {0.25, 0.5, 1.0, 2.0, 4.0};

// lhs - rhs with an infinite right side meaning "no constraint"
double excess(double lhs, double rhs) {
  if (rhs == kInf) return -kInf;
  if (lhs == kInf) return kInf;
  return lhs - rhs;
}

double half_p_log_p(int p) { return p == 0 ? 0.0 : 0.5 * p * std::log(double(p)); }

using PairFn = std::function<double(int, int)>;

// max over p + q = n of f(p, q), n = 0..P
std::vector<double> per_n_max(int P, const PairFn& f) {
  std::vector<double> d(static_cast<std::size_t>(P) + 1, -kInf);
  for (int n = 0; n <= P; ++n)
    for (int p = 0; p <= n; ++p) d[n] = std::max(d[n], f(p, n - p));
  return d;
}

// exists A >= 1 with d_n <= n log A for n >= 1: bounded_above on d_n / n
Verdict fit_geometric(const std::vector<double>& d, const Tolerances& tol,
                      const std::string& key) {
  std::vector<double> g, ns;
  for (std::size_t n = 1; n < d.size(); ++n) {
    if (d[n] == -kInf) continue;
    if (d[n] == kInf)
      return Verdict::make_fails({double(n)}, 1, double(d.size() - 1), "infinite excess");
    g.push_back(d[n] / static_cast<double>(n));
    ns.push_back(static_cast<double>(n));
  }
  if (g.empty()) return Verdict::make_holds({{key, 1.0}}, 1, double(d.size() - 1));
  if (g.size() < 4) {
    return Verdict::make_holds({{key, std::max(1.0, std::exp(sup_of(g).value))}}, ns.front(),
                               ns.back(), "short finite window");
  }
  Verdict v = bounded_above(g, ns, tol.stability);
  if (v.holds()) v.witness = {{key, std::max(1.0, std::exp(v.witness.at("log_sup")))}};
  return v;
}

// Condition between an "inner" entry a and an "outer" entry b.
using PairCheck = std::function<Verdict(const LogSequence& a, const LogSequence& b)>;

Verdict check_c37(const LogSequence& a, const LogSequence& b, const Tolerances& tol) {
  const int P = a.truncation();
  return fit_geometric(
      per_n_max(P, [&](int p, int q) { return excess(a[p] + a[q], b[p + q]); }), tol, "A");
}

Verdict check_m2prime(const LogSequence& a, const LogSequence& b, const Tolerances& tol) {
  const int P = a.truncation();
  std::vector<double> d(static_cast<std::size_t>(P) + 1, -kInf);
  for (int p = 0; p < P; ++p) d[p + 1] = excess(a[p + 1], b[p]);
  return fit_geometric(d, tol, "A");
}

Verdict check_m2(const LogSequence& a, const LogSequence& b, const Tolerances& tol) {
  const int P = a.truncation();
  return fit_geometric(
      per_n_max(P, [&](int p, int q) { return excess(a[p + q], b[p] + b[q]); }), tol, "A");
}

Verdict check_c12_roumieu(const LogSequence& a, const LogSequence& b, const Tolerances& tol) {
  const int P = a.truncation();
  return fit_geometric(
      per_n_max(P, [&](int p, int q) { return excess(half_p_log_p(p) + a[q], b[p + q]); }), tol,
      "H");
}

// H fitted at the smallest C of the grid (larger C only relax the bound),
// then B reported per C.
Verdict check_c12_beurling(const LogSequence& a, const LogSequence& b, const Tolerances& tol) {
  const int P = a.truncation();
  const double log_cmin = std::log(kCGrid.front());
  Verdict v = fit_geometric(per_n_max(P,
                                      [&](int p, int q) {
                                        return excess(half_p_log_p(p) - p * log_cmin + a[q],
                                                      b[p + q]);
                                      }),
                            tol, "H");
  if (!v.holds()) return v;
  const double log_h = std::log(v.witness.at("H"));
  for (double c : kCGrid) {
    const double lc = std::log(c);
    double worst = 0.0;
    for (int n = 0; n <= P; ++n)
      for (int p = 0; p <= n; ++p)
        worst = std::max(worst, excess(half_p_log_p(p) - p * lc + a[n - p], b[n]) - n * log_h);
    v.witness["B@" + short_number(c)] = std::exp(worst);
  }
  return v;
}

Verdict check_square(const LogSequence& lam, const LogSequence& kap, const Tolerances& tol) {
  const int P = lam.truncation();
  std::vector<double> d(static_cast<std::size_t>(P) + 1, -kInf);
  for (int p = 1; p <= P; ++p) d[p] = excess(2.0 * kap[p], lam[p]);
  return fit_geometric(d, tol, "A");
}

std::string lam_key(double l) { return "lambda=" + short_number(l); }

// for every lambda, search kappa in the given order; the check receives
// (inner, outer) already arranged by the caller's lambda
Verdict for_all_exists(const WeightMatrix& m,
                       const std::function<std::vector<double>(double)>& candidates,
                       const std::function<Verdict(double lambda, double kappa)>& check) {
  std::vector<std::pair<std::string, Verdict>> parts;
  for (double l : m.lambdas()) {
    Verdict found;
    bool ok = false, inconclusive = false;
    Verdict last;
    const auto cands = candidates(l);
    for (double k : cands) {
      Verdict v = check(l, k);
      if (v.holds()) {
        found = v;
        found.witness["kappa"] = k;
        ok = true;
        break;
      }
      if (v.inconclusive()) inconclusive = true;
      last = v;
    }
    if (ok) {
      parts.emplace_back(lam_key(l), found);
    } else if (cands.empty()) {
      parts.emplace_back(lam_key(l), Verdict::make_inconclusive(0, m.truncation(),
                                                               "no kappa in the grid direction"));
    } else {
      if (inconclusive) last.status = Status::inconclusive;
      last.detail = "no grid kappa works (grid exhausted): " + last.detail;
      parts.emplace_back(lam_key(l), last);
    }
  }
  return conjunction(parts);
}

std::vector<double> kappas_up(const std::vector<double>& grid, double l) {
  std::vector<double> out;
  for (double k : grid)
    if (k >= l) out.push_back(k);
  return out;
}

std::vector<double> kappas_down(const std::vector<double>& grid, double l) {
  std::vector<double> out;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it)
    if (*it <= l) out.push_back(*it);
  return out;
}

Verdict roumieu(const WeightMatrix& m,
                const std::function<Verdict(const LogSequence&, const LogSequence&)>& f) {
  const auto grid = m.lambdas();
  return for_all_exists(
      m, [&](double l) { return kappas_up(grid, l); },
      [&](double l, double k) { return f(m.at(l), m.at(k)); });
}

Verdict beurling(const WeightMatrix& m,
                 const std::function<Verdict(const LogSequence&, const LogSequence&)>& f) {
  const auto grid = m.lambdas();
  return for_all_exists(
      m, [&](double l) { return kappas_down(grid, l); },
      [&](double l, double k) { return f(m.at(k), m.at(l)); });
}

Verdict check_monotone(const WeightMatrix& m, const Tolerances& tol) {
  const auto ls = m.lambdas();
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& a = m.at(ls[i - 1]);
    const auto& b = m.at(ls[i]);
    for (std::size_t p = 0; p < a.size(); ++p)
      if (excess(a[p], b[p]) > tol.log_tol * (1.0 + std::abs(b[p])))
        return Verdict::make_fails({ls[i - 1], ls[i], double(p)}, 0, m.truncation(),
                                   "entries not ordered");
  }
  return Verdict::make_holds({{"pairs", double(ls.size() - 1)}}, 0, m.truncation());
}

Verdict check_constant(const WeightMatrix& m, const Tolerances& tol) {
  const auto ls = m.lambdas();
  const auto& lo = m.at(ls.front());
  const auto& hi = m.at(ls.back());
  if (lo.is_exotic() || hi.is_exotic()) {
    if (lo.finite_length() != hi.finite_length())
      return Verdict::make_fails({double(lo.finite_length())}, 0, m.truncation(),
                                 "entries become infinite at different indices");
  }
  Verdict v = seq_relate(hi, lo, Relation::preceq, tol).verdict;
  if (v.holds()) v.witness["lambda_min"] = ls.front(), v.witness["lambda_max"] = ls.back();
  return v;
}

Verdict check_standard_lc(const WeightMatrix& m, const Tolerances& tol) {
  std::vector<std::pair<std::string, Verdict>> parts;
  for (const auto& [l, e] : m.entries()) {
    if (e.is_exotic()) {
      parts.emplace_back(lam_key(l),
                         conjunction({{"M1", check_sequence_condition(e, SequenceCondition::M1, tol)},
                                      {"normalized", check_sequence_condition(
                                                         e, SequenceCondition::normalized, tol)}}));
    } else {
      parts.emplace_back(lam_key(l), check_LC(e, tol));
    }
  }
  return conjunction(parts);
}

}  // namespace

std::string_view to_string(MatrixCondition c) {
  switch (c) {
    case MatrixCondition::c12L2R: return "c12L2R";
    case MatrixCondition::c37LR: return "c37LR";
    case MatrixCondition::M2primeR: return "M2primeR";
    case MatrixCondition::M2R: return "M2R";
    case MatrixCondition::c12L2B: return "c12L2B";
    case MatrixCondition::c37LB: return "c37LB";
    case MatrixCondition::M2primeB: return "M2primeB";
    case MatrixCondition::M2B: return "M2B";
    case MatrixCondition::beurling_square: return "beurling_square";
    case MatrixCondition::monotone: return "monotone";
    case MatrixCondition::constant: return "constant";
    case MatrixCondition::standard_log_convex: return "standard_log_convex";
  }
  return "monotone";
}

MatrixCondition matrix_condition_from_string(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(MatrixCondition::standard_log_convex); ++i) {
    const auto c = static_cast<MatrixCondition>(i);
    if (s == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown matrix condition: " + std::string(s));
}

Verdict check_matrix_condition(const WeightMatrix& m, MatrixCondition cond,
                               const Tolerances& tol) {
  const auto bind = [&](Verdict (*f)(const LogSequence&, const LogSequence&, const Tolerances&)) {
    return [&tol, f](const LogSequence& a, const LogSequence& b) { return f(a, b, tol); };
  };
  switch (cond) {
    case MatrixCondition::c12L2R: return roumieu(m, bind(check_c12_roumieu));
    case MatrixCondition::c37LR: return roumieu(m, bind(check_c37));
    case MatrixCondition::M2primeR: return roumieu(m, bind(check_m2prime));
    case MatrixCondition::M2R: return roumieu(m, bind(check_m2));
    case MatrixCondition::c12L2B: return beurling(m, bind(check_c12_beurling));
    case MatrixCondition::c37LB: return beurling(m, bind(check_c37));
    case MatrixCondition::M2primeB: return beurling(m, bind(check_m2prime));
    case MatrixCondition::M2B: return beurling(m, bind(check_m2));
    case MatrixCondition::beurling_square: {
      const auto grid = m.lambdas();
      return for_all_exists(
          m, [&](double) { return grid; },
          [&](double l, double k) { return check_square(m.at(l), m.at(k), tol); });
    }
    case MatrixCondition::monotone: return check_monotone(m, tol);
    case MatrixCondition::constant: return check_constant(m, tol);
    case MatrixCondition::standard_log_convex: return check_standard_lc(m, tol);
  }
  throw std::logic_error("unreachable");
}

std::string_view to_string(MatrixMode m) {
  switch (m) {
    case MatrixMode::roumieu: return "roumieu";
    case MatrixMode::beurling: return "beurling";
    case MatrixMode::strong: return "strong";
  }
  return "roumieu";
}

MatrixMode matrix_mode_from_string(std::string_view s) {
  for (auto m : {MatrixMode::roumieu, MatrixMode::beurling, MatrixMode::strong})
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown matrix mode: " + std::string(s));
}

Verdict relate_matrices(const WeightMatrix& m, const WeightMatrix& n, MatrixMode mode,
                        const Tolerances& tol) {
  if (m.truncation() != n.truncation())
    throw std::invalid_argument("relate_matrices: matrices must share the truncation");
  const auto pre = [&](const LogSequence& a, const LogSequence& b) {
    Verdict v = seq_relate(a, b, Relation::preceq, tol).verdict;
    return v;
  };
  switch (mode) {
    case MatrixMode::roumieu: {
      const auto grid = n.lambdas();
      return for_all_exists(
          m,
          [&](double l) {
            auto c = kappas_up(grid, l);
            for (auto it = grid.rbegin(); it != grid.rend(); ++it)
              if (*it < l) c.push_back(*it);
            return c;
          },
          [&](double l, double k) { return pre(m.at(l), n.at(k)); });
    }
    case MatrixMode::beurling: {
      const auto grid = m.lambdas();
      return for_all_exists(
          n,
          [&](double l) {
            auto c = kappas_down(grid, l);
            for (double k : grid)
              if (k > l) c.push_back(k);
            return c;
          },
          [&](double l, double k) { return pre(m.at(k), n.at(l)); });
    }
    case MatrixMode::strong: {
      std::vector<std::pair<std::string, Verdict>> parts;
      for (double l : m.lambdas())
        for (double k : n.lambdas())
          parts.emplace_back(lam_key(l) + ",kappa=" + short_number(k),
                             seq_relate(m.at(l), n.at(k), Relation::triangleleft, tol).verdict);
      return conjunction(parts);
    }
  }
  throw std::logic_error("unreachable");
}

Verdict matrix_nqa(const WeightMatrix& m, MatrixMode mode, const Tolerances& tol) {
  if (mode == MatrixMode::strong)
    throw std::invalid_argument("matrix_nqa: mode must be roumieu or beurling");
  std::vector<std::pair<std::string, Verdict>> parts;
  for (const auto& [l, e] : m.entries()) {
    if (e.is_exotic())
      throw std::invalid_argument("matrix_nqa: entry at lambda=" + short_number(l) +
                                  " has infinite values");
    parts.emplace_back(lam_key(l),
                       check_sequence_condition(e, SequenceCondition::nonquasianalytic, tol));
  }
  if (mode == MatrixMode::beurling) return conjunction(parts);
  bool inconclusive = false;
  for (const auto& [key, v] : parts) {
    if (v.holds()) {
      Verdict out = v;
      out.witness["lambda"] = std::stod(key.substr(7));
      out.detail = key + " is non-quasianalytic";
      return out;
    }
    if (v.inconclusive()) inconclusive = true;
  }
  Verdict out = conjunction(parts);
  out.status = inconclusive ? Status::inconclusive : Status::fails;
  return out;
}

}  // namespace ultragrowth
