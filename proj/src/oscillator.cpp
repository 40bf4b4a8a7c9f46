#include "ultragrowth/oscillator.hpp"

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

constexpr long long kMaxStage = 1000000;
constexpr int kRatioProbe = 64;
const double kLog2 = std::log(2.0);

using NuFn = std::function<double(long long)>;

struct QScan {
  bool admissible = false;
  double liminf = 0.0;
};

QScan scan_q(const NuFn& lnu, long long limit, long long window, int Q, double stability) {
  const long long jmax = std::min(window, limit / Q);
  QScan out;
  if (jmax < 8) return out;
  std::vector<double> neg;
  for (long long j = 1; j <= jmax; ++j) neg.push_back(lnu(j) - lnu(Q * j));
  // -d bounded above <=> d stably bounded below
  const Verdict b = bounded_above(neg, {}, stability);
  const std::span<const double> tail(neg.begin() + static_cast<std::ptrdiff_t>(neg.size() / 2),
                                     neg.end());
  out.liminf = -sup_of(tail).value;
  out.admissible = b.holds() && out.liminf > 0.0;
  return out;
}

Verdict validate_impl(const NuFn& lnu, long long limit, long long window, const Tolerances& tol) {
  const long long jmax = std::min(window, limit / 2);
  if (jmax < 8) return Verdict::make_inconclusive(1, double(jmax), "target window too short");
  std::vector<double> s;
  for (long long j = 1; j <= jmax; ++j) s.push_back(lnu(2 * j) - lnu(j));
  Verdict sup = bounded_above(s, {}, tol.stability);
  if (!sup.holds()) {
    sup.detail = "sup nu_2j/nu_j: " + sup.detail;
    return sup;
  }
  const double B = std::max(1.0, std::exp(sup.witness.at("log_sup")));
  QScan chosen;
  int q_chosen = 0;
  bool two_ok = false;
  for (int Q = 2; Q <= 8; ++Q) {
    const QScan sc = scan_q(lnu, limit, window, Q, tol.stability);
    if (Q == 2) {
      two_ok = sc.admissible;
      continue;
    }
    if (sc.admissible) {
      chosen = sc;
      q_chosen = Q;
      break;
    }
  }
  if (q_chosen == 0)
    return Verdict::make_fails({}, 1, double(jmax),
                               two_ok ? "only Q = 2 admissible on the window"
                                      : "no admissible Q in 2..8 on the window");
  const double l1e = 0.5 * chosen.liminf;
  return Verdict::make_holds({{"Q", double(q_chosen)},
                              {"liminf", std::exp(chosen.liminf)},
                              {"log1p_eps", l1e},
                              {"eps_hat", std::expm1(l1e)},
                              {"B", B}},
                             1, double(jmax));
}

NuFn nu_of(const SequenceSource& n) {
  return [&n](long long j) { return n.log_mu(BigIndex(j)); };
}

long long limit_of(const SequenceSource& n, long long window) {
  const auto last = n.last_index();
  if (!last) return window * 8;
  return last->convert_to<long long>();
}

BigIndex qpow(int Q, long long m) { return ipow(static_cast<unsigned>(Q), static_cast<unsigned>(m)); }

void check_stage(long long n, const std::string& what) {
  if (n > kMaxStage) throw std::invalid_argument("plan: " + what + " needs n_j > 10^6");
}

double expected_anchor_ratio(int j, double lnu_k1) {
  if (j == 1) return std::log(4.0) - 0.5 * lnu_k1;
  if (j == 2) return -std::log(4.0);
  if (j % 2 == 1) return j * kLog2;
  return -std::log(double(j));
}

bool within(double x, double lo, double hi, double tol) {
  return x >= lo - tol * (1.0 + std::abs(lo)) && x <= hi + tol * (1.0 + std::abs(hi));
}

}  // namespace

Verdict validate_target(const SequenceSource& n, long long window, const Tolerances& tol) {
  return validate_impl(nu_of(n), limit_of(n, window), window, tol);
}

Verdict validate_target(const LogSequence& n, const Tolerances& tol) {
  const auto q = quotients(n);
  const long long P = static_cast<long long>(n.finite_length()) - 1;
  return validate_impl([&q](long long j) { return q.logmu[static_cast<std::size_t>(j)]; }, P, P,
                       tol);
}

OscillatorPlan plan(const SequenceSource& n, int Q, int J, const Tolerances& tol) {
  if (J < 2) throw std::invalid_argument("plan: need at least 2 stages");
  if (Q < 3) throw std::invalid_argument("plan: Q must be at least 3");
  const auto lnu_small = nu_of(n);
  const long long window = 4096;
  const long long limit = limit_of(n, window);
  const QScan sc = scan_q(lnu_small, limit, window, Q, tol.stability);
  if (!sc.admissible)
    throw std::invalid_argument("plan: Q = " + std::to_string(Q) + " not admissible for target");
  const Verdict v = validate_impl(lnu_small, limit, window, tol);
  if (v.fails()) throw std::invalid_argument("plan: target rejected: " + v.detail);
  if (!v.witness.count("B")) throw std::invalid_argument("plan: target not validated: " + v.detail);

  OscillatorPlan p;
  p.Q = Q;
  p.J = J;
  p.log1p_eps = 0.5 * sc.liminf;
  p.eps_hat = std::expm1(p.log1p_eps);
  if (!(p.eps_hat > 0.0)) throw std::invalid_argument("plan: eps_hat <= 0");
  p.B = v.witness.at("B");
  const int c = static_cast<int>(std::ceil(std::log2(double(Q)) - 1e-12));
  p.A_hat = std::pow(p.B, c);
  p.A_cap = 2.0 * p.A_hat;

  const auto lnu = [&n](const BigIndex& k) { return n.log_mu(k); };
  p.m.push_back(1);
  // stage 1
  {
    const double base = lnu(BigIndex(Q));
    long long n1 = 2;
    while (!(lnu(qpow(Q, 1 + n1)) - base > std::log(64.0))) check_stage(++n1, "n_1");
    p.n.push_back(n1);
    p.m.push_back(1 + n1);
  }
  // stage 2: k_3 large enough for the ratio bound from j = 3 on
  if (J >= 3) {
    long long n2 = 2;
    for (;; check_stage(++n2, "n_2")) {
      const long long m3 = p.m[1] + n2;
      bool ok = true;
      for (int i = 0; i < kRatioProbe && ok; ++i)
        ok = lnu(qpow(Q, m3 + i + 1)) - lnu(qpow(Q, m3 + i)) >= p.log1p_eps;
      if (ok) break;
    }
    p.n.push_back(n2);
    p.m.push_back(p.m[1] + n2);
  }
  const double cap_gap = std::log(p.A_cap) - std::log(p.A_hat);
  for (int j = 3; j < J; ++j) {
    long long nj;
    if (j % 2 == 1) {
      const double x = j * kLog2 + std::log(j + 1.0);
      nj = std::max(2LL, static_cast<long long>(std::floor(x / p.log1p_eps)) + 1);
    } else {
      const double y = ((j + 1) * kLog2 + std::log(double(j))) / cap_gap;
      nj = std::max(2LL, static_cast<long long>(std::ceil(y - 1e-9)));
    }
    check_stage(nj, "n_" + std::to_string(j));
    p.n.push_back(nj);
    p.m.push_back(p.m.back() + nj);
  }
  for (long long mj : p.m) p.anchors.push_back(qpow(Q, mj));

  std::vector<double> lk;
  for (const auto& k : p.anchors) lk.push_back(lnu(k));
  p.log_alpha.assign(static_cast<std::size_t>(p.m.back()), 0.0);
  const double la0 = std::log(4.0) + 0.5 * lk[0];
  p.log_alpha[0] = la0;
  p.log_alpha[1] = la0;
  const long long n1 = p.n[0];
  for (long long mm = 2; mm <= n1; ++mm)
    p.log_alpha[mm] = (lk[1] - lk[0] - std::log(64.0)) / double(n1 - 1);
  for (int j = 2; j < J; ++j) {
    const long long nj = p.n[j - 1];
    const double ratio = lk[j] - lk[j - 1];
    double la;
    if (j == 2)
      la = (std::log(32.0) + ratio) / double(nj);
    else if (j % 2 == 1)
      la = (ratio - j * kLog2 - std::log(j + 1.0)) / double(nj);
    else
      la = ((j + 1) * kLog2 + std::log(double(j)) + ratio) / double(nj);
    for (long long mm = p.m[j - 1]; mm < p.m[j]; ++mm) {
      p.log_alpha[mm] = la;
      if (j >= 3 && la > std::log(p.A_cap) + 1e-12)
        throw std::invalid_argument("plan: alpha above A_cap at stage " + std::to_string(j));
    }
  }
  for (std::size_t mm = 0; mm < p.log_alpha.size(); ++mm)
    if (!(p.log_alpha[mm] > 0.0))
      throw std::invalid_argument("plan: alpha_" + std::to_string(mm) + " <= 1");
  return p;
}

OscillatorResult build(const OscillatorPlan& p, std::shared_ptr<const SequenceSource> target) {
  if (p.log_alpha.empty() || p.anchors.size() != static_cast<std::size_t>(p.J))
    throw std::invalid_argument("build: incomplete plan");
  std::vector<Block> blocks;
  blocks.push_back({BigIndex(1), BigIndex(p.Q - 1), p.log_alpha[0] / (p.Q - 1)});
  for (std::size_t mm = 1; mm < p.log_alpha.size(); ++mm) {
    const BigIndex start = qpow(p.Q, static_cast<long long>(mm));
    blocks.push_back({start, start * p.Q - 1, p.log_alpha[mm] / (to_double(start) * (p.Q - 1))});
  }
  auto M = std::make_shared<BlockSequence>(
      std::vector<double>{0.0, 0.0}, std::move(blocks),
      "osc(" + target->name() + ",Q=" + std::to_string(p.Q) + ",J=" + std::to_string(p.J) + ")");
  OscillatorResult r;
  r.plan = p;
  r.target = std::move(target);
  std::vector<Anchor> anchors;
  double sum = 0.0;
  long long mm = 0;
  for (int j = 1; j <= p.J; ++j) {
    const long long mj = p.m[j - 1];
    for (; mm < mj; ++mm) sum += p.log_alpha[mm];
    const BigIndex& k = p.anchors[j - 1];
    anchors.push_back({k, sum, M->log_m(k)});
    StageRecord rec;
    rec.j = j;
    rec.k = k;
    rec.log_mu = sum;
    rec.log_nu = r.target->log_mu(k);
    rec.stage_case = j <= 2 ? "start" : (j % 2 == 1 ? "I" : "II");
    rec.n = j < p.J ? p.n[j - 1] : 0;
    r.trace.push_back(rec);
  }
  M->set_anchors(std::move(anchors));
  r.M = std::move(M);
  return r;
}

std::vector<double> anchor_log_ratios(const OscillatorResult& r) {
  std::vector<double> out;
  for (const auto& a : r.M->anchors()) out.push_back(a.log_mu - r.target->log_mu(a.index));
  return out;
}

std::vector<BigIndex> block_boundaries(const OscillatorResult& r) {
  std::vector<BigIndex> out;
  for (long long mm = 1; mm <= r.plan.m.back(); ++mm) out.push_back(qpow(r.plan.Q, mm));
  return out;
}

std::vector<std::pair<std::string, Verdict>> verify(const OscillatorResult& r,
                                                    int head_truncation,
                                                    const Tolerances& tol) {
  const auto& p = r.plan;
  const auto& M = *r.M;
  const int Q = p.Q;
  const double t = tol.log_tol;
  const BigIndex cover = p.anchors[std::min<std::size_t>(2, p.anchors.size() - 1)];
  const LogSequence head = M.head(static_cast<int>(
      std::min(BigIndex(head_truncation), cover).convert_to<long long>()));
  const auto mu = quotients(head).logmu;
  const int H = head.truncation();
  const double la_min = *std::min_element(p.log_alpha.begin(), p.log_alpha.end());
  const double la_max = *std::max_element(p.log_alpha.begin(), p.log_alpha.end());
  std::vector<std::pair<std::string, Verdict>> out;

  {  // (a) alpha_min <= mu_Qj / mu_j <= alpha_max
    Verdict v = Verdict::make_holds({}, 1, H);
    long long checked = 0;
    for (int j = 1; Q * j <= H && v.holds(); ++j, ++checked)
      if (!within(mu[Q * j] - mu[j], la_min, la_max, t))
        v = Verdict::make_fails({double(j)}, 1, H, "ratio outside [alpha_min, alpha_max]");
    for (std::size_t i = 0; i + 1 < p.anchors.size() && v.holds(); ++i) {
      const BigIndex& k = p.anchors[i];
      for (const BigIndex& j : {k, BigIndex(k + 1), BigIndex(2 * k)}) {
        ++checked;
        if (!within(M.log_mu(j * Q) - M.log_mu(j), la_min, la_max, t)) {
          v = Verdict::make_fails({to_double(j)}, 1, H, "ratio outside bounds near an anchor");
          break;
        }
      }
    }
    if (v.holds())
      v.witness = {{"alpha_min", std::exp(la_min)},
                   {"alpha_max", std::exp(la_max)},
                   {"checked", double(checked)}};
    out.emplace_back("claim_I", v);
  }
  {  // (b) log-convexity and mu_(Q^n) >= alpha_min^n
    Verdict v = Verdict::make_holds({}, 1, H);
    for (int q = 2; q <= H && v.holds(); ++q)
      if (!(mu[q] > mu[q - 1])) v = Verdict::make_fails({double(q)}, 1, H, "mu not increasing");
    for (const Block& b : M.blocks())
      if (v.holds() && !(b.log_beta > 0.0))
        v = Verdict::make_fails({to_double(b.start)}, 1, H, "block with beta <= 1");
    for (long long n = 1; n <= p.m.back() && v.holds(); ++n)
      if (M.log_mu(qpow(Q, n)) < n * la_min - t * (1.0 + n * la_min))
        v = Verdict::make_fails({double(n)}, 1, H, "mu_(Q^n) below alpha_min^n");
    if (v.holds()) v.witness = {{"blocks", double(M.blocks().size())}};
    out.emplace_back("claim_II", v);
  }
  {  // (c) anchor identities, closed form against block evaluation
    Verdict v = Verdict::make_holds({}, 1, to_double(p.anchors.back()));
    const double lnu1 = r.target->log_mu(p.anchors.front());
    double worst = 0.0;
    const auto& anchors = M.anchors();
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      const int j = static_cast<int>(i) + 1;
      const double lnu = r.target->log_mu(anchors[i].index);
      const double got = anchors[i].log_mu - lnu;
      const double want = expected_anchor_ratio(j, lnu1);
      const double err = std::abs(got - want);
      const double eval_err = std::abs(M.log_mu(anchors[i].index) - anchors[i].log_mu);
      worst = std::max({worst, err, eval_err / (1.0 + std::abs(anchors[i].log_mu))});
      if (err > t * (1.0 + std::abs(lnu)) ||
          eval_err > t * (1.0 + std::abs(anchors[i].log_mu))) {
        v = Verdict::make_fails({double(j)}, 1, to_double(p.anchors.back()),
                                "anchor identity violated at j=" + std::to_string(j));
        break;
      }
    }
    if (v.holds()) v.witness = {{"max_error", worst}, {"anchors", double(anchors.size())}};
    out.emplace_back("anchors", v);
  }
  {  // (d) (M_p)^(1/p) <= mu_p <= A (M_p)^(1/p)
    std::vector<double> e;
    Verdict v;
    for (int q = 1; q <= H; ++q) e.push_back(mu[q] - head[q] / q);
    double low = inf_of(e).value;
    double anchor_max = -std::numeric_limits<double>::infinity();
    for (const auto& a : M.anchors()) {
      const double x = a.log_mu - a.log_m / to_double(a.index);
      low = std::min(low, x);
      anchor_max = std::max(anchor_max, x);
    }
    if (low < -t) {
      v = Verdict::make_fails({}, 1, H, "mu_p below M_p^(1/p)");
    } else {
      v = bounded_above(e, {}, tol.stability);
      if (v.holds())
        v.witness = {{"A", std::exp(v.witness.at("log_sup"))},
                     {"A_anchors", std::exp(anchor_max)},
                     {"alpha_max", std::exp(la_max)}};
    }
    out.emplace_back("moderate_growth", v);
  }
  {  // (e) liminf mu_Qj / mu_j > 1 on the head
    std::vector<double> d;
    for (int j = 1; Q * j <= H; ++j) d.push_back(mu[Q * j] - mu[j]);
    Verdict v;
    if (d.size() < 4) {
      v = Verdict::make_inconclusive(1, H, "head too short");
    } else {
      const std::span<const double> tail(d.begin() + static_cast<std::ptrdiff_t>(d.size() / 2),
                                         d.end());
      const double lim = inf_of(tail).value;
      v = lim > 0.0 ? Verdict::make_holds({{"liminf", std::exp(lim)}}, 1, H)
                    : Verdict::make_fails({}, 1, H, "mu_Qj / mu_j reaches 1");
    }
    out.emplace_back("alpha_condition", v);
  }
  {  // (f) oscillation of mu / nu across anchors j >= 2
    const auto ratios = anchor_log_ratios(r);
    std::vector<double> x(ratios.size() > 1 ? ratios.size() - 1 : 0), y(x.size());
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      x[i - 1] = to_double(p.anchors[i]);
      y[i - 1] = ratios[i];
    }
    out.emplace_back("oscillation", oscillation_probe(std::move(x), std::move(y)).verdict);
  }
  return out;
}

CriticalReport critical_case(int J, const Tolerances& tol) {
  if (J < 5) throw std::invalid_argument("critical_case: need at least 5 stages");
  auto target = std::make_shared<const GevreySource>(0.5);
  CriticalReport rep;
  rep.validation = validate_target(*target, 4096, tol);
  rep.result = build(plan(*target, 3, J, tol), target);
  rep.checks = verify(rep.result, 4096, tol);
  const auto& M = *rep.result.M;
  const auto& anchors = M.anchors();

  {
    std::vector<double> x, y;
    std::vector<double> scaled;  // log(j * root ratio)
    for (std::size_t i = 3; i < anchors.size(); i += 2) {
      const int j = static_cast<int>(i) + 1;
      const double k = to_double(anchors[i].index);
      const double r = (anchors[i].log_m - target->log_m(anchors[i].index)) / k;
      x.push_back(k);
      y.push_back(r);
      scaled.push_back(r + std::log(double(j)));
    }
    RelationReport pr;
    pr.relation = Relation::incomparable_probe;
    pr.abscissae = x;
    pr.ratio_trace = y;
    if (!y.empty()) {
      pr.liminf_est = std::exp(inf_of(y).value);
      pr.limsup_est = std::exp(sup_of(y).value);
    }
    bool falling = true;
    for (std::size_t i = 1; i < y.size(); ++i) falling = falling && y[i] < y[i - 1];
    if (y.size() < 2) {
      pr.verdict = Verdict::make_inconclusive(0, 0, "fewer than 2 even anchors");
    } else {
      const double band = sup_of(scaled).value - inf_of(scaled).value;
      if (falling && band <= std::log(2.0))
        pr.verdict = Verdict::make_holds({{"C", std::exp(sup_of(scaled).value)}}, x.front(),
                                         x.back(), "root ratio falls like C/j at even anchors");
      else
        pr.verdict = Verdict::make_fails({}, x.front(), x.back(),
                                         falling ? "root ratio not O(1/j)" : "root ratio not falling");
    }
    rep.liminf_probe = pr;
  }

  rep.m0 = check_sequence_condition(M.head(4096), SequenceCondition::M0, tol);
  rep.incomparability = oscillation_probe(M, *target, block_boundaries(rep.result));

  {
    std::vector<double> x, y;
    for (const auto& a : anchors) {
      const double lt = a.log_mu;
      const double w = M.omega_value(lt);
      if (!(w > 0.0)) continue;
      x.push_back(lt);
      y.push_back(std::log(w) - 2.0 * lt);
    }
    rep.omega_vs_square = oscillation_probe(std::move(x), std::move(y));
  }
  return rep;
}

}  // namespace ultragrowth
