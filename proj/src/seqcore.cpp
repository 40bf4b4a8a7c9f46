#include "ultragrowth/seqcore.hpp"

#include "ultragrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> index_axis(std::size_t from, std::size_t to) {
  std::vector<double> x;
  x.reserve(to - from + 1);
  for (std::size_t p = from; p <= to; ++p) x.push_back(static_cast<double>(p));
  return x;
}

Verdict check_m1(const LogSequence& m, const Tolerances& tol) {
  const auto mu = quotients(m).logmu;
  const std::size_t P = m.size() - 1;
  double min_inc = kInf;
  for (std::size_t p = 1; p < P; ++p) {
    if (std::isinf(mu[p + 1])) continue;
    const double inc = mu[p + 1] - mu[p];
    if (inc < -tol.log_tol)
      return Verdict::make_fails({static_cast<double>(p)}, 1, P,
                                 "mu_{p+1} < mu_p");
    min_inc = std::min(min_inc, inc);
  }
  return Verdict::make_holds({{"min_increment", min_inc}}, 1, P);
}

Verdict check_normalized(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  if (std::abs(m[0]) > tol.log_tol)
    return Verdict::make_fails({0.0}, 0, 1, "M_0 != 1");
  if (m[1] < m[0] - tol.log_tol)
    return Verdict::make_fails({1.0}, 0, 1, "M_1 < M_0");
  (void)P;
  return Verdict::make_holds({{"log_M1", m[1]}}, 0, 1);
}

Verdict check_m2prime(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  std::vector<double> e(P);
  for (std::size_t p = 0; p < P; ++p)
    e[p] = (m[p + 1] - m[p]) / static_cast<double>(p + 1);
  const auto x = index_axis(0, P - 1);
  Verdict v = bounded_above(e, x, tol.stability);
  if (v.holds()) {
    const double logd = std::max(0.0, v.witness.at("log_sup"));
    v.witness = {{"D", std::exp(logd)}, {"log_D", logd}};
  }
  return v;
}

Verdict check_m2(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  const auto mu = quotients(m).logmu;
  // Direct scan: per total order n, the worst split.
  std::vector<double> direct(P);
  for (std::size_t n = 1; n <= P; ++n) {
    double best = -kInf;
    for (std::size_t p = 0; p <= n / 2; ++p)
      best = std::max(best, m[n] - m[p] - m[n - p]);
    direct[n - 1] = best / static_cast<double>(n);
  }
  // Quotient criterion mu_p <= A M_p^(1/p).
  std::vector<double> quot(P);
  for (std::size_t p = 1; p <= P; ++p)
    quot[p - 1] = mu[p] - m[p] / static_cast<double>(p);
  const auto x = index_axis(1, P);
  const Verdict vd = bounded_above(direct, x, tol.stability);
  const Verdict vq = bounded_above(quot, x, tol.stability);
  if (vd.holds() && vq.holds()) {
    const double logc = std::max(0.0, vd.witness.at("log_sup"));
    const double loga = std::max(0.0, vq.witness.at("log_sup"));
    return Verdict::make_holds({{"C", std::exp(logc)},
                                {"log_C", logc},
                                {"A", std::exp(loga)},
                                {"log_A", loga}},
                               1, P);
  }
  if (vd.fails() && vq.fails()) {
    Verdict v = vd;
    v.detail = "direct scan and quotient criterion both grow";
    return v;
  }
  Verdict v = Verdict::make_inconclusive(
      1, P,
      "direct scan " + std::string(to_string(vd.status)) +
          ", quotient criterion " + std::string(to_string(vq.status)));
  return v;
}

Verdict check_algebra(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  double max_slack = -kInf;
  for (std::size_t n = 0; n <= P; ++n) {
    const double allowed = tol.log_tol * std::max(1.0, std::abs(m[n]));
    for (std::size_t p = 0; p <= n / 2; ++p) {
      const double slack = m[p] + m[n - p] - m[n];
      if (slack > allowed)
        return Verdict::make_fails(
            {static_cast<double>(p), static_cast<double>(n - p)}, 0, P,
            "M_p M_q > M_{p+q}");
      max_slack = std::max(max_slack, slack);
    }
  }
  return Verdict::make_holds({{"max_slack", max_slack}}, 0, P);
}

Verdict check_m0(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  std::vector<double> neg_g(P);
  for (std::size_t p = 1; p <= P; ++p)
    neg_g[p - 1] = std::log(static_cast<double>(p) + 1.0) -
                   m[p] / static_cast<double>(p);
  const auto x = index_axis(1, P);
  Verdict v = bounded_above(neg_g, x, tol.stability);
  if (v.holds()) {
    const double logc = -v.witness.at("log_sup");
    v.witness = {{"c", std::exp(logc)}, {"log_c", logc}};
  }
  return v;
}

Verdict check_root_divergence(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  std::vector<double> r(P);
  for (std::size_t p = 1; p <= P; ++p) r[p - 1] = m[p] / static_cast<double>(p);
  const auto x = index_axis(1, P);
  return tends_to_plus_inf(r, x, tol.stability);
}

Verdict check_nqa(const LogSequence& m, const Tolerances& tol) {
  const std::size_t P = m.size() - 1;
  const auto mu = quotients(m).logmu;
  // log of partial sum of exp(-log mu_p)
  double partial = 0.0;
  {
    double shift = -kInf;
    for (std::size_t p = 1; p <= P; ++p) shift = std::max(shift, -mu[p]);
    for (std::size_t p = 1; p <= P; ++p) partial += std::exp(-mu[p] - shift);
    partial = std::exp(std::log(partial) + shift);
  }
  const std::size_t from = std::max<std::size_t>(2, (3 * P) / 4);
  std::vector<double> lx, ly, llx, lly;
  for (std::size_t p = from; p <= P; ++p) {
    const double lp = std::log(static_cast<double>(p));
    lx.push_back(lp);
    ly.push_back(-mu[p]);
    llx.push_back(std::log(lp));
    lly.push_back(lp - mu[p]);
  }
  const double slope = ls_slope(lx, ly);
  const double d = tol.nqa_delta;
  std::map<std::string, double> w{{"partial_sum", partial}, {"tail_slope", slope}};
  if (slope < -1 - d) return Verdict::make_holds(w, 1, P, "convergent tail");
  if (slope > -1 + d) {
    Verdict v = Verdict::make_fails({static_cast<double>(P)}, 1, P,
                                    "divergent tail (power-law slope)");
    v.witness = w;
    return v;
  }
  // Borderline p^-1 decay: compare with sum 1/(p (log p)^g).
  const double bertrand = ls_slope(llx, lly);
  w["log_tail_slope"] = bertrand;
  if (bertrand < -1 - d)
    return Verdict::make_holds(w, 1, P, "convergent tail (logarithmic refinement)");
  if (bertrand > -1 + d) {
    Verdict v = Verdict::make_fails({static_cast<double>(P)}, 1, P,
                                    "divergent tail (logarithmic refinement)");
    v.witness = w;
    return v;
  }
  Verdict v = Verdict::make_inconclusive(1, P, "tail slope at the borderline");
  v.witness = w;
  return v;
}

}  // namespace

std::string_view to_string(SequenceCondition c) {
  switch (c) {
    case SequenceCondition::M1: return "M1";
    case SequenceCondition::normalized: return "normalized";
    case SequenceCondition::M2prime: return "M2prime";
    case SequenceCondition::M2: return "M2";
    case SequenceCondition::algebra: return "algebra";
    case SequenceCondition::M0: return "M0";
    case SequenceCondition::root_divergence: return "root_divergence";
    case SequenceCondition::nonquasianalytic: return "nonquasianalytic";
  }
  return "M1";
}

SequenceCondition sequence_condition_from_string(std::string_view s) {
  if (s == "M1" || s == "log_convex") return SequenceCondition::M1;
  if (s == "normalized") return SequenceCondition::normalized;
  if (s == "M2prime" || s == "M2'") return SequenceCondition::M2prime;
  if (s == "M2") return SequenceCondition::M2;
  if (s == "algebra") return SequenceCondition::algebra;
  if (s == "M0") return SequenceCondition::M0;
  if (s == "root_divergence") return SequenceCondition::root_divergence;
  if (s == "nonquasianalytic" || s == "nqa") return SequenceCondition::nonquasianalytic;
  throw std::invalid_argument("unknown sequence condition: " + std::string(s));
}

Verdict check_sequence_condition(const LogSequence& m, SequenceCondition cond,
                                 const Tolerances& tol) {
  if (m.is_exotic() && cond != SequenceCondition::M1 &&
      cond != SequenceCondition::normalized)
    throw std::invalid_argument("condition " + std::string(to_string(cond)) +
                                " is not admissible for a sequence with "
                                "infinite entries");
  switch (cond) {
    case SequenceCondition::M1: return check_m1(m, tol);
    case SequenceCondition::normalized: return check_normalized(m, tol);
    case SequenceCondition::M2prime: return check_m2prime(m, tol);
    case SequenceCondition::M2: return check_m2(m, tol);
    case SequenceCondition::algebra: return check_algebra(m, tol);
    case SequenceCondition::M0: return check_m0(m, tol);
    case SequenceCondition::root_divergence: return check_root_divergence(m, tol);
    case SequenceCondition::nonquasianalytic: return check_nqa(m, tol);
  }
  throw std::logic_error("unreachable");
}

Verdict check_LC(const LogSequence& m, const Tolerances& tol) {
  if (m.is_exotic())
    return Verdict::make_fails({static_cast<double>(m.finite_length())}, 0,
                               m.truncation(), "infinite entries");
  return conjunction(
      {{"normalized", check_sequence_condition(m, SequenceCondition::normalized, tol)},
       {"M1", check_sequence_condition(m, SequenceCondition::M1, tol)},
       {"root_divergence",
        check_sequence_condition(m, SequenceCondition::root_divergence, tol)}});
}

}  // namespace ultragrowth
