#include "ultragrowth/lambdanorms.hpp"

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
constexpr long long kDense = 10000;
constexpr int kPerDecade = 512;
constexpr int kMaxL = 16;
constexpr double kMaxLogC = 50.0;

// sup over the probe indices of log|c_k| + term(k)
NormResult sup_terms(const CoefficientFamily& c, const std::function<double(long long)>& term) {
  NormResult r;
  r.log_value = -kInf;
  double prev = -kInf, last = -kInf;
  for (long long k : c.probe_indices()) {
    const double lc = c.log_abs(k);
    if (lc == -kInf) continue;
    const double x = lc + term(k);
    prev = last;
    last = x;
    if (x > r.log_value) {
      r.log_value = x;
      r.argmax = k;
    }
  }
  r.tail_rising = c.kind() == CoeffKind::weight_witness && last > prev &&
                  last - prev > 1e-12 * (1.0 + std::abs(last));
  return r;
}

}  // namespace

std::string_view to_string(CoeffKind k) {
  switch (k) {
    case CoeffKind::explicit_values: return "explicit";
    case CoeffKind::weight_witness: return "weight_witness";
    case CoeffKind::kronecker: return "kronecker";
  }
  return "?";
}

CoeffKind coeff_kind_from_string(std::string_view s) {
  for (auto k : {CoeffKind::explicit_values, CoeffKind::weight_witness, CoeffKind::kronecker})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown coefficient kind: " + std::string(s));
}

CoefficientFamily CoefficientFamily::explicit_values(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("explicit coefficients: empty");
  for (double v : values)
    if (!std::isfinite(v)) throw std::invalid_argument("explicit coefficients: non-finite value");
  CoefficientFamily c;
  c.kind_ = CoeffKind::explicit_values;
  c.support_ = static_cast<long long>(values.size()) - 1;
  c.values_ = std::move(values);
  return c;
}

CoefficientFamily CoefficientFamily::weight_witness(WeightFn w, long long support) {
  if (support < 1) throw std::invalid_argument("weight witness: support must be positive");
  CoefficientFamily c;
  c.kind_ = CoeffKind::weight_witness;
  c.support_ = support;
  c.weight_ = std::move(w);
  return c;
}

CoefficientFamily CoefficientFamily::kronecker(long long i) {
  if (i < 0) throw std::invalid_argument("kronecker: negative index");
  CoefficientFamily c;
  c.kind_ = CoeffKind::kronecker;
  c.support_ = i;
  c.index_ = i;
  return c;
}

double CoefficientFamily::log_abs(long long k) const {
  if (k < 0 || k > support_) return -kInf;
  switch (kind_) {
    case CoeffKind::explicit_values: {
      const double v = values_[static_cast<std::size_t>(k)];
      return v == 0.0 ? -kInf : std::log(std::abs(v));
    }
    case CoeffKind::weight_witness:
      return -(*weight_)(std::sqrt(static_cast<double>(k)));
    case CoeffKind::kronecker:
      return k == index_ ? 0.0 : -kInf;
  }
  return -kInf;
}

std::vector<long long> CoefficientFamily::probe_indices() const {
  std::vector<long long> out;
  switch (kind_) {
    case CoeffKind::explicit_values:
      for (long long k = 0; k <= support_; ++k)
        if (values_[static_cast<std::size_t>(k)] != 0.0) out.push_back(k);
      break;
    case CoeffKind::kronecker:
      out.push_back(index_);
      break;
    case CoeffKind::weight_witness: {
      const long long dense = std::min(support_, kDense);
      for (long long k = 0; k <= dense; ++k) out.push_back(k);
      if (support_ > dense) {
        const double decades = std::log10(double(support_) / double(dense));
        const int steps = static_cast<int>(std::ceil(decades * kPerDecade));
        for (int i = 1; i <= steps; ++i) {
          const auto k = std::min(
              support_, std::llround(double(dense) * std::pow(10.0, double(i) / kPerDecade)));
          if (k > out.back()) out.push_back(k);
        }
        if (out.back() != support_) out.push_back(support_);
      }
      break;
    }
  }
  return out;
}

std::string_view to_string(NormKind k) { return k == NormKind::roumieu ? "roumieu" : "beurling"; }

NormKind norm_kind_from_string(std::string_view s) {
  if (s == "roumieu") return NormKind::roumieu;
  if (s == "beurling") return NormKind::beurling;
  throw std::invalid_argument("unknown norm mode: " + std::string(s));
}

double NormResult::value() const { return std::exp(log_value); }

NormResult lambda_norm(const CoefficientFamily& c, const WeightFn& w, NormMode mode,
                       const RunConfig& cfg) {
  if (mode.j < 1) throw std::invalid_argument("lambda_norm: j must be a positive integer");
  const double j = mode.j;
  NormResult r;
  if (mode.kind == NormKind::roumieu) {
    r = sup_terms(c, [&](long long k) { return w(std::sqrt(double(k)) / j) / j; });
  } else {
    r = sup_terms(c, [&](long long k) { return j * w(std::sqrt(double(k)) * j); });
    r.hypothesis = classify_triviality(w, ClassCase::beurling, cfg).result;
  }
  return r;
}

NormResult matrix_norm(const CoefficientFamily& c, const WeightMatrix& m, NormMode mode) {
  if (mode.j < 1) throw std::invalid_argument("matrix_norm: l must be a positive integer");
  const double l = mode.j;
  const double key = mode.kind == NormKind::roumieu ? l : 1.0 / l;
  if (!m.contains(key))
    throw std::out_of_range("matrix_norm: no entry at lambda = " + short_number(key) + " in " +
                            m.name());
  const LogSequence& entry = m.at(key);
  bool saturated = false;
  NormResult r = sup_terms(c, [&](long long k) {
    const double t = mode.kind == NormKind::roumieu ? std::sqrt(double(k)) / l
                                                    : std::sqrt(double(k)) * l;
    const OmegaValue o = omega_of_sequence(entry, t);
    saturated = saturated || o.saturated;
    return o.value;
  });
  r.saturated = saturated;
  return r;
}

DominationReport empirical_domination(const WeightFn& w, const WeightFn& v, int j_target,
                                      const RunConfig& cfg) {
  if (j_target < 1) throw std::invalid_argument("empirical_domination: j must be positive");
  const double j = j_target;
  // c_k = exp(-w(sqrt(k)/j)/j)
  const CoefficientFamily base = CoefficientFamily::weight_witness(w);
  const auto witness_log = [&](long long k) { return -w(std::sqrt(double(k)) / j) / j; };

  const double hi = std::min(w.domain_max(), v.domain_max());
  const auto hs = weight_grid(w, cfg.grid, cfg.grid.t_min, hi);
  std::vector<double> tail_h, tail_ratio;
  for (double h : hs) {
    const double wh = w(h);
    if (h >= std::exp(1.0) && wh > 0.0) {
      tail_h.push_back(h);
      tail_ratio.push_back(std::log(std::max(v(h), 1e-300)) - std::log(wh));
    }
  }
  // log(v / w) must stay bounded on the tail for any affine bound to exist
  const Verdict ratio = bounded_above(tail_ratio, tail_h, cfg.tol.stability);

  DominationReport rep;
  std::string last_reason = "no l in 1..16 gives a finite norm";
  for (int l = 1; l <= kMaxL; ++l) {
    NormResult n;
    n.log_value = -kInf;
    double prev = -kInf, lastv = -kInf;
    for (long long k : base.probe_indices()) {
      const double x = witness_log(k) + v(std::sqrt(double(k)) / l) / l;
      prev = lastv;
      lastv = x;
      n.log_value = std::max(n.log_value, x);
    }
    const bool rising = lastv > prev && lastv - prev > 1e-12 * (1.0 + std::abs(lastv));
    if (rising || !(n.log_value <= kMaxLogC)) continue;
    const double log_C = std::max(0.0, n.log_value);

    // w(r h) <= C1 w(h) + C2
    const double r = l / j;
    double C1 = 1.0, C2 = 0.0;
    if (r > 1.0) {
      const auto rs = weight_grid(w, cfg.grid, cfg.grid.t_min, hi / r);
      for (std::size_t i = rs.size() / 2; i < rs.size(); ++i) {
        const double wh = w(rs[i]);
        if (wh > 0.0) C1 = std::max(C1, w(r * rs[i]) / wh);
      }
      for (double h : rs) C2 = std::max(C2, w(r * h) - C1 * w(h));
    }
    const double a = r * C1;
    const double b = l * log_C + r * C2;
    bool ok = true;
    double worst_h = 0.0;
    for (double h : hs) {
      const double rhs = a * w(h) + b;
      if (v(h) > rhs + cfg.tol.log_tol * (1.0 + std::abs(rhs))) {
        ok = false;
        worst_h = h;
        break;
      }
    }
    if (!ok) {
      last_reason = "l=" + std::to_string(l) + ": v > a w + b at h=" + short_number(worst_h);
      continue;
    }
    if (!ratio.holds()) {
      last_reason = "l=" + std::to_string(l) + ": v/w not bounded on the tail: " + ratio.detail;
      continue;
    }
    rep.l = l;
    rep.log_C = log_C;
    rep.C1 = C1;
    rep.C2 = C2;
    rep.a = a;
    rep.b = b;
    rep.verdict = Verdict::make_holds(
        {{"l", double(l)}, {"C", std::exp(log_C)}, {"C1", C1}, {"C2", C2}, {"a", a}, {"b", b}},
        hs.front(), hs.back());
    return rep;
  }
  if (ratio.inconclusive())
    rep.verdict = Verdict::make_inconclusive(hs.front(), hs.back(), last_reason);
  else
    rep.verdict = Verdict::make_fails({}, hs.front(), hs.back(), last_reason);
  return rep;
}

}  // namespace ultragrowth
