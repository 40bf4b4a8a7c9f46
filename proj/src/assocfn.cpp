#include "ultragrowth/assocfn.hpp"

#include "sup_search.hpp"
#include "ultragrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kE = std::exp(1.0);

double safe_log(double x) { return x > 0 ? std::log(x) : -kInf; }

Verdict check_alpha(const WeightFn& w, const RunConfig& cfg) {
  const double T = std::min(cfg.grid.t_max, w.domain_max());
  const auto ts = weight_grid(w, cfg.grid, cfg.grid.t_min, T / 2);
  std::vector<double> r;
  for (double t : ts) r.push_back(safe_log(w(2 * t)) - std::log(w(t) + 1.0));
  Verdict v = bounded_above(r, ts, cfg.tol.stability);
  if (v.holds()) {
    const double L = std::max(1.0, std::exp(v.witness.at("log_sup")));
    v.witness = {{"L", L}};
  }
  return v;
}

Verdict check_beta(const WeightFn& w, const RunConfig& cfg) {
  const auto ts = weight_grid(w, cfg.grid, kE, cfg.grid.t_max);
  std::vector<double> r;
  for (double t : ts) r.push_back(safe_log(w(t)) - 2 * std::log(t));
  Verdict v = bounded_above(r, ts, cfg.tol.stability);
  if (v.holds()) v.witness = {{"C", std::exp(v.witness.at("log_sup"))}};
  return v;
}

Verdict check_gamma(const WeightFn& w, const RunConfig& cfg) {
  const auto ts = weight_grid(w, cfg.grid, kE, cfg.grid.t_max);
  std::vector<double> r;
  for (double t : ts) r.push_back(safe_log(w(t)) - std::log(std::log(t)));
  return tends_to_plus_inf(r, ts, cfg.tol.stability);
}

Verdict check_delta(const WeightFn& w, const RunConfig& cfg) {
  const auto ts = weight_grid(w, cfg.grid, 1.0, cfg.grid.t_max);
  if (ts.size() < 3) return Verdict::make_inconclusive(1.0, 1.0, "grid too short");
  std::vector<double> phi;
  for (double t : ts) phi.push_back(w(t));
  double min_d2 = kInf;
  for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
    const double d2 = phi[i - 1] - 2 * phi[i] + phi[i + 1];
    if (d2 < -1e-9 * (1.0 + std::abs(phi[i])))
      return Verdict::make_fails({ts[i]}, ts.front(), ts.back(), "phi(u) = w(e^u) not convex");
    min_d2 = std::min(min_d2, d2);
  }
  return Verdict::make_holds({{"min_second_difference", min_d2}}, ts.front(), ts.back());
}

Verdict check_omega6(const WeightFn& w, const RunConfig& cfg) {
  const double D = w.domain_max();
  bool any_inconclusive = false;
  Verdict last;
  for (int k = 1; k <= 10; ++k) {
    const double H = std::ldexp(1.0, k);
    const auto ts = weight_grid(w, cfg.grid, cfg.grid.t_min, D / H);
    std::vector<double> f;
    for (double t : ts) f.push_back(2 * w(t) - w(H * t));
    Verdict v = bounded_above(f, ts, cfg.tol.stability);
    if (v.holds()) {
      // w nondecreasing: a larger H keeps the bound, so round max(H, sup) up
      const double need = std::max(H, v.witness.at("log_sup"));
      const double H2 = std::exp2(std::ceil(std::log2(need)));
      const auto ts2 = weight_grid(w, cfg.grid, cfg.grid.t_min, D / H2);
      for (double t : ts2)
        if (2 * w(t) > w(H2 * t) + H2 + 1e-9 * (1 + 2 * w(t)))
          return Verdict::make_fails({t}, ts2.front(), ts2.back(), "2w(t) > w(Ht) + H");
      return Verdict::make_holds({{"H", H2}}, ts2.front(), ts2.back());
    }
    any_inconclusive = any_inconclusive || v.inconclusive();
    last = std::move(v);
  }
  if (any_inconclusive)
    return Verdict::make_inconclusive(last.window_lo, last.window_hi,
                                      "no H = 2^k <= 1024 with a stable bound");
  last.detail = "2w(t) - w(Ht) unbounded for every H = 2^k <= 1024";
  return last;
}

Verdict check_om7(const WeightFn& w, const RunConfig& cfg) {
  const double D = w.domain_max();
  bool any_inconclusive = false;
  Verdict last;
  for (int k = 0; k <= 10; ++k) {
    const double H = std::ldexp(1.0, k);
    const auto ts = weight_grid(w, cfg.grid, 1.0, std::min(std::sqrt(D), D / H));
    std::vector<double> r;
    for (double t : ts) r.push_back(safe_log(w(t * t)) - std::log(w(H * t) + 1.0));
    Verdict v = bounded_above(r, ts, cfg.tol.stability);
    if (v.holds()) {
      const double C = std::max(1.0, std::exp(v.witness.at("log_sup")));
      v.witness = {{"H", H}, {"C", C}};
      return v;
    }
    any_inconclusive = any_inconclusive || v.inconclusive();
    last = std::move(v);
  }
  if (any_inconclusive)
    return Verdict::make_inconclusive(last.window_lo, last.window_hi,
                                      "no H = 2^k <= 1024 with a stable ratio");
  last.detail = "w(t^2) / w(Ht) unbounded for every H = 2^k <= 1024";
  return last;
}

Verdict check_omega_nqa(const WeightFn& w, const RunConfig& cfg) {
  const auto ts = weight_grid(w, cfg.grid, 1.0, cfg.grid.t_max);
  if (ts.size() < 16) return Verdict::make_inconclusive(1.0, 1.0, "grid too short");
  // int_1^T w(t)/t^2 dt = int_0^log T w(e^u) e^-u du, trapezoid in u
  double integral = 0.0;
  std::vector<double> h(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) h[i] = w(ts[i]) / ts[i];
  for (std::size_t i = 1; i < ts.size(); ++i)
    integral += 0.5 * (h[i] + h[i - 1]) * (std::log(ts[i]) - std::log(ts[i - 1]));
  std::vector<double> lx, ly, llx, lly;
  for (std::size_t i = (3 * ts.size()) / 4; i < ts.size(); ++i) {
    if (!(h[i] > 0)) continue;
    const double lt = std::log(ts[i]);
    lx.push_back(lt);
    ly.push_back(std::log(h[i]) - lt);
    llx.push_back(std::log(lt));
    lly.push_back(std::log(h[i]));
  }
  const double lo = ts.front(), hi = ts.back();
  if (lx.size() < 4)
    return Verdict::make_holds({{"integral", integral}}, lo, hi, "weight vanishes on the tail");
  const double slope = ls_slope(lx, ly);
  const double d = cfg.tol.nqa_delta;
  std::map<std::string, double> wit{{"integral", integral}, {"tail_slope", slope}};
  auto failing = [&](const char* why) {
    Verdict v = Verdict::make_fails({hi}, lo, hi, why);
    v.witness = wit;
    return v;
  };
  if (slope < -1 - d) return Verdict::make_holds(wit, lo, hi, "convergent tail");
  if (slope > -1 + d) return failing("divergent tail (power-law slope)");
  const double bertrand = ls_slope(llx, lly);
  wit["log_tail_slope"] = bertrand;
  if (bertrand < -1 - d) return Verdict::make_holds(wit, lo, hi, "convergent tail (logarithmic refinement)");
  if (bertrand > -1 + d) return failing("divergent tail (logarithmic refinement)");
  Verdict v = Verdict::make_inconclusive(lo, hi, "tail slope at the borderline");
  v.witness = wit;
  return v;
}

}  // namespace

std::vector<double> weight_grid(const WeightFn& w, const GridSpec& grid, double lo, double hi) {
  hi = std::min(hi, w.domain_max());
  if (w.kind() == WeightKind::sampled) lo = std::max(lo, w.sample_t().front());
  if (!(hi >= lo)) return {};
  return grid.log_grid(lo, hi);
}

OmegaValue omega_of_sequence(const LogSequence& m, double t) {
  if (t < 0 || std::isnan(t)) throw std::domain_error("omega_of_sequence: t < 0");
  const double lt = t == 0 ? -kInf : std::log(t);
  if (m.has_nondecreasing_quotients()) {
    auto seq = std::make_shared<const LogSequence>(m);
    return omega_at_log(LogSequenceSource(seq), lt);
  }
  OmegaValue out;
  out.value = -m[0];
  out.argmax = 0;
  if (t == 0) return out;
  const std::size_t n = m.finite_length();
  for (std::size_t p = 1; p < n; ++p) {
    const double v = static_cast<double>(p) * lt - m[p];
    if (v > out.value) {
      out.value = v;
      out.argmax = static_cast<long long>(p);
    }
  }
  out.saturated = out.argmax == static_cast<long long>(n - 1);
  return out;
}

LogSequence sequence_of_omega(const WeightFn& w, int truncation, const GridSpec& grid) {
  if (truncation < kMinTruncation)
    throw std::invalid_argument("sequence_of_omega: truncation below minimum");
  const double lo = std::log(grid.t_min);
  double hi = std::log(grid.t_max);
  const bool sampled = w.kind() == WeightKind::sampled;
  if (sampled) hi = std::min(hi, std::log(w.domain_max()));
  const double lo_eval = sampled ? std::max(lo, std::log(w.sample_t().front())) : lo;
  const double step = grid.log_step();
  std::vector<double> logm(static_cast<std::size_t>(truncation) + 1, kInf);
  detail::PhiGrid phi_grid([&w](double u) { return w.phi(u); }, lo_eval, step);
  for (int p = 0; p <= truncation; ++p) {
    const auto r = detail::legendre_sup(phi_grid, p, hi, !sampled);
    if (r.unbounded) break;
    double value = r.value;
    if (p == 0) {
      // t = 0 term (0^0 = 1)
      try {
        value = std::max(value, -w(0.0));
      } catch (const std::out_of_range&) {
      }
    }
    logm[static_cast<std::size_t>(p)] = value;
  }
  return LogSequence(std::move(logm), "seq(" + w.spec() + ")", Provenance::generated_from_weight);
}

std::string_view to_string(WeightCondition c) {
  switch (c) {
    case WeightCondition::alpha: return "alpha";
    case WeightCondition::beta: return "beta";
    case WeightCondition::gamma: return "gamma";
    case WeightCondition::delta: return "delta";
    case WeightCondition::omega6: return "omega6";
    case WeightCondition::om7: return "om7";
    case WeightCondition::omega_nqa: return "omega_nqa";
  }
  return "alpha";
}

WeightCondition weight_condition_from_string(std::string_view s) {
  for (auto c : {WeightCondition::alpha, WeightCondition::beta, WeightCondition::gamma,
                 WeightCondition::delta, WeightCondition::omega6, WeightCondition::om7,
                 WeightCondition::omega_nqa})
    if (s == to_string(c)) return c;
  if (s == "nqa") return WeightCondition::omega_nqa;
  throw std::invalid_argument("unknown weight condition: " + std::string(s));
}

Verdict check_weight_condition(const WeightFn& w, WeightCondition cond, const RunConfig& cfg) {
  switch (cond) {
    case WeightCondition::alpha: return check_alpha(w, cfg);
    case WeightCondition::beta: return check_beta(w, cfg);
    case WeightCondition::gamma: return check_gamma(w, cfg);
    case WeightCondition::delta: return check_delta(w, cfg);
    case WeightCondition::omega6: return check_omega6(w, cfg);
    case WeightCondition::om7: return check_om7(w, cfg);
    case WeightCondition::omega_nqa: return check_omega_nqa(w, cfg);
  }
  throw std::logic_error("unreachable");
}

std::string_view to_string(Triviality t) {
  switch (t) {
    case Triviality::nontrivial: return "nontrivial";
    case Triviality::trivial: return "trivial";
    case Triviality::unknown: return "unknown";
  }
  return "unknown";
}

ClassCase class_case_from_string(std::string_view s) {
  if (s == "beurling" || s == "Beurling") return ClassCase::beurling;
  if (s == "roumieu" || s == "Roumieu") return ClassCase::roumieu;
  throw std::invalid_argument("unknown case: " + std::string(s));
}

TrivialityReport classify_triviality(const WeightFn& w, ClassCase c, const RunConfig& cfg) {
  const auto ts = weight_grid(w, cfg.grid, kE, cfg.grid.t_max);
  std::vector<double> r;
  for (double t : ts) r.push_back(safe_log(w(t)) - 2 * std::log(t));
  TrivialityReport out;
  if (c == ClassCase::beurling) {
    // w = o(t^2): nontrivial; liminf w/t^2 > 0: trivial
    out.evidence = tends_to_minus_inf(r, ts, cfg.tol.stability);
    out.result = out.evidence.holds()   ? Triviality::nontrivial
                 : out.evidence.fails() ? Triviality::trivial
                                        : Triviality::unknown;
    return out;
  }
  // w = O(t^2): nontrivial; t^2 = o(w): trivial
  out.evidence = bounded_above(r, ts, cfg.tol.stability);
  if (out.evidence.holds()) {
    out.result = Triviality::nontrivial;
    return out;
  }
  Verdict up = tends_to_plus_inf(r, ts, cfg.tol.stability);
  if (up.holds()) {
    out.evidence = std::move(up);
    out.result = Triviality::trivial;
  }
  return out;
}

}  // namespace ultragrowth
