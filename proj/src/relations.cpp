#include "ultragrowth/relations.hpp"

#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/trend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Trace {
  std::vector<double> x;
  std::vector<double> r;
  // first abscissa where M is infinite while N is finite
  double violation = std::numeric_limits<double>::quiet_NaN();
};

void push(Trace& t, double k, double lm, double ln) {
  if (ln == kInf) return;
  if (lm == kInf) {
    if (std::isnan(t.violation)) t.violation = k;
    return;
  }
  t.x.push_back(k);
  t.r.push_back((lm - ln) / k);
}

Trace reversed(const Trace& t) {
  Trace out;
  out.x = t.x;
  out.r = t.r;
  for (double& v : out.r) v = -v;
  return out;
}

void fill_estimates(RelationReport& rep) {
  const auto& r = rep.ratio_trace;
  if (r.empty()) return;
  const std::span<const double> tail(r.begin() + static_cast<std::ptrdiff_t>(r.size() / 2),
                                     r.end());
  rep.liminf_est = std::exp(inf_of(tail).value);
  rep.limsup_est = std::exp(sup_of(tail).value);
}

Verdict decide_preceq(const Trace& t, const Tolerances& tol) {
  const double lo = t.x.empty() ? 0.0 : t.x.front();
  const double hi = t.x.empty() ? 0.0 : t.x.back();
  if (!std::isnan(t.violation))
    return Verdict::make_fails({t.violation}, lo, hi, "M infinite where N is finite");
  Verdict v = bounded_above(t.r, t.x, tol.stability);
  if (v.holds()) v.witness = {{"C", std::exp(v.witness.at("log_sup"))}};
  return v;
}

Verdict decide(const Trace& t, Relation rel, const Tolerances& tol) {
  switch (rel) {
    case Relation::preceq: return decide_preceq(t, tol);
    case Relation::triangleleft: {
      if (!std::isnan(t.violation)) return decide_preceq(t, tol);
      Verdict v = tends_to_minus_inf(t.r, t.x, tol.stability);
      if (v.holds()) {
        const Verdict b = bounded_above(t.r, t.x, tol.stability);
        if (b.holds()) v.witness["C"] = std::exp(b.witness.at("log_sup"));
      }
      return v;
    }
    case Relation::equiv: {
      Trace back = reversed(t);
      back.violation = std::numeric_limits<double>::quiet_NaN();
      return conjunction({{"M<=N", decide_preceq(t, tol)}, {"N<=M", decide_preceq(back, tol)}});
    }
    default: break;
  }
  throw std::invalid_argument("sequence relation must be preceq, triangleleft or equiv");
}

RelationReport make_report(Trace t, Relation rel, const Tolerances& tol) {
  RelationReport rep;
  rep.relation = rel;
  rep.verdict = decide(t, rel, tol);
  rep.abscissae = std::move(t.x);
  rep.ratio_trace = std::move(t.r);
  fill_estimates(rep);
  return rep;
}

std::vector<double> log_samples(double lo, double hi, int per_decade) {
  std::vector<double> out;
  if (!(hi > lo)) return out;
  const double step = std::log(10.0) / per_decade;
  const auto n = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  for (std::size_t i = 0; i <= n; ++i) out.push_back(std::min(hi, lo + step * static_cast<double>(i)));
  return out;
}

// omega_N(t) <= omega_M(A t) + B for some A in {1, 2, 4, 8}, t in [1, e^hi(A)]
template <class HiFn>
Verdict function_side(const SequenceSource& m, const SequenceSource& n, HiFn hi_for,
                      const Tolerances& tol) {
  bool inconclusive = false;
  Verdict last;
  for (double a : {1.0, 2.0, 4.0, 8.0}) {
    const double la = std::log(a);
    const auto us = log_samples(0.0, hi_for(la), 512);
    std::vector<double> d;
    d.reserve(us.size());
    for (double u : us) d.push_back(n.omega_value(u) - m.omega_value(u + la));
    std::vector<double> ts;
    ts.reserve(us.size());
    for (double u : us) ts.push_back(std::exp(u));
    Verdict v = bounded_above(d, ts, tol.stability);
    if (v.holds()) {
      v.witness = {{"A", a}, {"B", std::max(0.0, v.witness.at("log_sup"))}};
      return v;
    }
    if (v.inconclusive()) inconclusive = true;
    last = v;
  }
  if (inconclusive) {
    last.status = Status::inconclusive;
    last.detail = "no A in {1,2,4,8} verified";
    return last;
  }
  last.detail = "omega_N(t) - omega_M(A t) unbounded for every A in {1,2,4,8}";
  return last;
}

Verdict agree(const Verdict& seq, const Verdict& fn) {
  const double lo = seq.window_lo, hi = seq.window_hi;
  if (seq.inconclusive() || fn.inconclusive()) {
    Verdict v = Verdict::make_inconclusive(
        lo, hi, std::string("sequence side ") + std::string(to_string(seq.status)) +
                    ", function side " + std::string(to_string(fn.status)));
    return v;
  }
  std::map<std::string, double> w{{"sequence_side", seq.holds() ? 1.0 : 0.0},
                                  {"function_side", fn.holds() ? 1.0 : 0.0}};
  if (seq.status != fn.status)
    return Verdict::make_fails({}, lo, hi,
                               std::string("disagreement: sequence side ") +
                                   std::string(to_string(seq.status)) + ", function side " +
                                   std::string(to_string(fn.status)));
  for (const auto& [k, x] : fn.witness) w[k] = x;
  if (auto it = seq.witness.find("C"); it != seq.witness.end()) w["C"] = it->second;
  return Verdict::make_holds(std::move(w), lo, hi, "both sides agree");
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::preceq: return "preceq";
    case Relation::triangleleft: return "triangleleft";
    case Relation::equiv: return "equiv";
    case Relation::sim: return "sim";
    case Relation::incomparable_probe: return "incomparable-probe";
  }
  return "preceq";
}

Relation relation_from_string(std::string_view s) {
  for (auto r : {Relation::preceq, Relation::triangleleft, Relation::equiv, Relation::sim,
                 Relation::incomparable_probe})
    if (s == to_string(r)) return r;
  throw std::invalid_argument("unknown relation: " + std::string(s));
}

RelationReport seq_relate(const LogSequence& m, const LogSequence& n, Relation rel,
                          const Tolerances& tol) {
  if (m.truncation() != n.truncation())
    throw std::invalid_argument("seq_relate: sequences must share the truncation");
  Trace t;
  for (int p = 1; p <= m.truncation(); ++p) push(t, p, m[p], n[p]);
  return make_report(std::move(t), rel, tol);
}

RelationReport seq_relate(const SequenceSource& m, const SequenceSource& n,
                          const std::vector<BigIndex>& indices, Relation rel,
                          const Tolerances& tol) {
  Trace t;
  for (const auto& k : indices) {
    if (k <= 0) throw std::invalid_argument("seq_relate: indices must be positive");
    push(t, to_double(k), m.log_m(k), n.log_m(k));
  }
  return make_report(std::move(t), rel, tol);
}

RelationReport wf_relate(const WeightFn& w, const WeightFn& v, Relation rel,
                         const RunConfig& cfg) {
  RelationReport rep;
  rep.relation = rel;
  const double t_hi = std::min(cfg.grid.t_max, v.domain_max());
  for (double t : weight_grid(w, cfg.grid, std::exp(1.0), t_hi)) {
    const double u = std::log(t);
    const double pw = w.phi(u), pv = v.phi(u);
    if (pw <= 0.0 && pv <= 0.0) continue;
    rep.abscissae.push_back(t);
    rep.ratio_trace.push_back(pw <= 0.0 ? kInf : std::log(pv) - std::log(pw));
  }
  const auto& x = rep.abscissae;
  const auto& r = rep.ratio_trace;
  const double lo = x.empty() ? 0.0 : x.front(), hi = x.empty() ? 0.0 : x.back();
  const bool w_dead = !r.empty() && std::all_of(r.begin() + static_cast<std::ptrdiff_t>(r.size() / 2),
                                                r.end(), [](double y) { return y == kInf; });
  if (r.size() < 8 || w_dead) {
    rep.verdict = Verdict::make_inconclusive(lo, hi, "w vanishes on the tail or window too short");
    return rep;
  }
  std::vector<double> neg(r.begin(), r.end());
  for (double& y : neg) y = -y;
  auto bounded = [&](const std::vector<double>& vals) {
    Verdict b = bounded_above(vals, x, cfg.tol.stability);
    if (b.holds()) b.witness = {{"C", std::exp(b.witness.at("log_sup"))}};
    return b;
  };
  switch (rel) {
    case Relation::preceq: rep.verdict = bounded(r); break;
    case Relation::triangleleft: rep.verdict = tends_to_minus_inf(r, x, cfg.tol.stability); break;
    case Relation::sim:
      rep.verdict = conjunction({{"v=O(w)", bounded(r)}, {"w=O(v)", bounded(neg)}});
      break;
    default: throw std::invalid_argument("weight relation must be preceq, triangleleft or sim");
  }
  fill_estimates(rep);
  return rep;
}

Verdict crosscheck_transfer(const LogSequence& m, const LogSequence& n, const Tolerances& tol) {
  const Verdict seq = seq_relate(m, n, Relation::preceq, tol).verdict;
  const LogSequenceSource ms(m), ns(n);
  const int P = m.truncation();
  const double mu_m = m[P] - m[P - 1], mu_n = n[P] - n[P - 1];
  const Verdict fn = function_side(
      ms, ns, [&](double la) { return std::min(mu_n, mu_m - la); }, tol);
  return agree(seq, fn);
}

Verdict crosscheck_transfer(const SequenceSource& m, const SequenceSource& n,
                            const std::vector<BigIndex>& indices, double log_t_max,
                            const Tolerances& tol) {
  const Verdict seq = seq_relate(m, n, indices, Relation::preceq, tol).verdict;
  const Verdict fn = function_side(
      m, n, [&](double la) { return log_t_max - la; }, tol);
  return agree(seq, fn);
}

RelationReport oscillation_probe(const SequenceSource& m, const SequenceSource& n,
                                 const std::vector<BigIndex>& indices) {
  std::vector<double> x, r;
  for (const auto& k : indices) {
    const double kd = to_double(k);
    const double lm = m.log_m(k), ln = n.log_m(k);
    if (!std::isfinite(lm) || !std::isfinite(ln)) continue;
    x.push_back(kd);
    r.push_back((lm - ln) / kd);
  }
  return oscillation_probe(std::move(x), std::move(r));
}

RelationReport oscillation_probe(std::vector<double> abscissae, std::vector<double> log_ratios) {
  RelationReport rep;
  rep.relation = Relation::incomparable_probe;
  rep.abscissae = std::move(abscissae);
  rep.ratio_trace = std::move(log_ratios);
  const auto& r = rep.ratio_trace;
  const double lo = rep.abscissae.empty() ? 0.0 : rep.abscissae.front();
  const double hi = rep.abscissae.empty() ? 0.0 : rep.abscissae.back();
  if (r.size() < 4) {
    rep.verdict = Verdict::make_inconclusive(lo, hi, "fewer than 4 usable samples");
    fill_estimates(rep);
    return rep;
  }
  const std::size_t half = r.size() / 2;
  double run_min = inf_of(std::span<const double>(r.data(), half)).value;
  double run_max = sup_of(std::span<const double>(r.data(), half)).value;
  int lows = 0, highs = 0;
  for (std::size_t i = half; i < r.size(); ++i) {
    if (r[i] < run_min) ++lows, run_min = r[i];
    if (r[i] > run_max) ++highs, run_max = r[i];
  }
  fill_estimates(rep);
  if (lows > 0 && highs > 0)
    rep.verdict = Verdict::make_holds({{"record_lows", double(lows)}, {"record_highs", double(highs)}},
                                      lo, hi, "new record lows and highs keep appearing");
  else
    rep.verdict = Verdict::make_fails({}, lo, hi,
                                      lows == 0 && highs == 0 ? "no new records in the second half"
                                      : lows == 0             ? "no new record lows in the second half"
                                                              : "no new record highs in the second half");
  return rep;
}

}  // namespace ultragrowth
