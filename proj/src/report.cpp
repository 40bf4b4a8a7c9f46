#include "ultragrowth/report.hpp"

#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/conjugate.hpp"
#include "ultragrowth/lambdanorms.hpp"
#include "ultragrowth/matrices.hpp"
#include "ultragrowth/oscillator.hpp"
#include "ultragrowth/relations.hpp"
#include "ultragrowth/seqcore.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace ultragrowth {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const std::vector<double> kGevreyOrders = {0.25, 0.5, 1.0, 2.0};

using Parts = std::vector<std::pair<std::string, Verdict>>;

Verdict expect(bool ok, const std::string& what, std::map<std::string, double> witness = {}) {
  return ok ? Verdict::make_holds(std::move(witness), 0, 0)
            : Verdict::make_fails({}, 0, 0, what);
}

Verdict expect_status(const Verdict& v, Status want, const std::string& what) {
  if (v.status == want) {
    Verdict out = v;
    out.status = Status::holds;
    return out;
  }
  return Verdict::make_fails({}, v.window_lo, v.window_hi,
                             what + ": expected " + std::string(to_string(want)) + ", got " +
                                 std::string(to_string(v.status)) +
                                 (v.detail.empty() ? "" : " (" + v.detail + ")"));
}

std::string order_key(double s) { return "s=" + short_number(s); }

Verdict roundtrip(const RunConfig& cfg) {
  Parts parts;
  for (double s : kGevreyOrders) {
    const auto g = make_gevrey(s, 4096);
    const auto w = WeightFn::associated(std::make_shared<LogSequenceSource>(g),
                                        "gevrey:" + short_number(s));
    const auto back = sequence_of_omega(w, 512, cfg.grid);
    double worst = 0.0;
    for (int p = 0; p <= 512; ++p) worst = std::max(worst, std::abs(back[p] - g[p]));
    parts.emplace_back(order_key(s), expect(worst <= cfg.tol.roundtrip_tol,
                                            "entry error " + short_number(worst),
                                            {{"max_error", worst}}));
  }
  return conjunction(parts);
}

Verdict log_weight_exactness(const RunConfig& cfg) {
  const WeightFn w = WeightFn::trunc_log();
  Parts parts;
  for (double s : {0.0, 0.5, 1.0}) {
    const double v = young_conjugate(w, s, cfg.grid);
    parts.emplace_back("zero@" + short_number(s), expect(v == 0.0, "value " + short_number(v)));
  }
  for (double s : {1.01, 2.0, 10.0}) {
    const double v = young_conjugate(w, s, cfg.grid);
    parts.emplace_back("inf@" + short_number(s), expect(v == kInf, "value " + short_number(v)));
  }
  const LogSequence W = matrix_of_weight(w, {1.0}, 16, cfg.grid).at(1.0);
  bool ok = W[0] == 0.0 && W[1] == 0.0;
  for (int p = 2; p <= W.truncation(); ++p) ok = ok && W[p] == kInf;
  parts.emplace_back("matrix", expect(ok, "W^(1) not 1, 1, inf, ..."));
  return conjunction(parts);
}

Verdict generated_matrix_block(const RunConfig& cfg) {
  RunConfig c = cfg;
  const auto M = matrix_of_weight(WeightFn::power(2.0), c.lambdas_with_doubles(), 256, c.grid);
  Parts parts{{"generated", check_generated_matrix(M, c.tol)}};
  const Verdict alg = check_matrix_condition(M, MatrixCondition::c37LR, c.tol);
  bool kappa_ok = alg.holds();
  if (alg.holds())
    for (double l : M.lambdas()) {
      const std::string k = "lambda=" + short_number(l);
      kappa_ok = kappa_ok && alg.witness.at(k + ".kappa") == l &&
                 std::abs(alg.witness.at(k + ".A") - 1.0) <= 1e-9;
    }
  parts.emplace_back("algebra_kappa_eq_lambda",
                     kappa_ok ? alg : Verdict::make_fails({}, 0, 0, "kappa != lambda or A != 1"));
  return conjunction(parts);
}

Verdict critical_equivalence(const RunConfig& cfg) {
  const int P = 256;
  const auto W = matrix_of_weight(WeightFn::power(2.0), cfg.lambdas, P, cfg.grid);
  const auto G = WeightMatrix::constant(make_gevrey(0.5, P), cfg.lambdas);
  Parts parts{{"W<=G", relate_matrices(W, G, MatrixMode::roumieu, cfg.tol)},
              {"G<=W", relate_matrices(G, W, MatrixMode::roumieu, cfg.tol)}};
  for (auto& [name, v] : parts)
    for (const auto& [k, x] : v.witness)
      if (!std::isfinite(x)) v = Verdict::make_fails({}, 0, 0, "infinite witness " + k);
  const GevreySource g(0.5);
  double lo = kInf, hi = -kInf;
  for (double t = 10.0; t <= 1000.0 * (1 + 1e-12); t *= std::pow(10.0, 1.0 / 64)) {
    const double r = g.omega_value(std::log(t)) / (t * t);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  parts.emplace_back("omega/t^2 band", expect(lo >= 0.4 && hi <= 0.5,
                                              "ratio left [0.4, 0.5]", {{"lo", lo}, {"hi", hi}}));
  return conjunction(parts);
}

OscillatorResult critical_result(int J) {
  auto target = std::make_shared<const GevreySource>(0.5);
  return build(plan(*target, 3, J), target);
}

Verdict oscillator_identities(const RunConfig& cfg) {
  const auto r = critical_result(8);
  const auto checks = verify(r, 4096, cfg.tol);
  Parts parts;
  for (const auto& [k, v] : checks)
    if (k == "anchors" || k == "claim_I") parts.emplace_back(k, v);
  return conjunction(parts);
}

Verdict oscillation(const RunConfig& cfg) {
  const auto r = critical_result(8);
  const auto ratios = anchor_log_ratios(r);
  bool alternates = true;
  for (int j = 3; j <= 8; ++j) {
    const double x = ratios[j - 1];
    alternates = alternates && (j % 2 == 1 ? x >= std::log(8.0) - 1e-9 : x <= -std::log(4.0) + 1e-9);
  }
  const auto bb = block_boundaries(r);
  const GevreySource n(0.5);
  const auto mn = seq_relate(*r.M, n, bb, Relation::preceq, cfg.tol);
  const auto nm = seq_relate(n, *r.M, bb, Relation::preceq, cfg.tol);
  Parts parts{{"alternation", expect(alternates, "anchor ratios do not alternate")},
              {"M<=N", expect(!mn.verdict.holds(), "M <= N holds on the probe")},
              {"N<=M", expect(!nm.verdict.holds(), "N <= M holds on the probe")}};
  return conjunction(parts);
}

Verdict gevrey_conditions(const RunConfig& cfg) {
  Parts parts;
  for (double s : kGevreyOrders) {
    const auto g = make_gevrey(s, cfg.truncation);
    const std::string k = order_key(s);
    parts.emplace_back(k + ".M1", check_sequence_condition(g, SequenceCondition::M1, cfg.tol));
    parts.emplace_back(k + ".algebra",
                       check_sequence_condition(g, SequenceCondition::algebra, cfg.tol));
    Verdict m2 = check_sequence_condition(g, SequenceCondition::M2, cfg.tol);
    if (m2.holds() && std::abs(m2.witness.at("C") / std::pow(2.0, s) - 1.0) > 0.02)
      m2 = Verdict::make_fails({}, 0, 0, "C far from 2^s");
    parts.emplace_back(k + ".M2", m2);
    parts.emplace_back(k + ".nqa",
                       expect_status(check_sequence_condition(g, SequenceCondition::nonquasianalytic, cfg.tol),
                                     s <= 1.0 ? Status::fails : Status::holds, "nqa"));
    if (s == 0.5 || s == 1.0)
      parts.emplace_back(k + ".M0",
                         expect_status(check_sequence_condition(g, SequenceCondition::M0, cfg.tol),
                                       s == 0.5 ? Status::fails : Status::holds, "M0"));
  }
  return conjunction(parts);
}

Verdict transfer(const RunConfig& cfg) {
  Parts parts;
  const int P = 1 << 20;
  std::map<double, LogSequence> g;
  for (double s : kGevreyOrders) g.emplace(s, make_gevrey(s, P));
  for (double a : kGevreyOrders)
    for (double b : kGevreyOrders)
      if (a != b)
        parts.emplace_back(order_key(a) + "," + order_key(b),
                           crosscheck_transfer(g.at(a), g.at(b), cfg.tol));
  return conjunction(parts);
}

Verdict triviality(const RunConfig& cfg) {
  const auto want = [&](double a, ClassCase c, Triviality t) {
    const auto r = classify_triviality(WeightFn::power(a), c, cfg);
    return expect(r.result == t, "got " + std::string(to_string(r.result)));
  };
  Parts parts{{"t^2.beurling", want(2.0, ClassCase::beurling, Triviality::trivial)},
              {"t^1.5.beurling", want(1.5, ClassCase::beurling, Triviality::nontrivial)},
              {"t^2.roumieu", want(2.0, ClassCase::roumieu, Triviality::nontrivial)},
              {"t^2.5.roumieu", want(2.5, ClassCase::roumieu, Triviality::trivial)}};
  return conjunction(parts);
}

Verdict witness_mechanics(const RunConfig& cfg) {
  const auto fwd = empirical_domination(WeightFn::power(2.0), WeightFn::power(1.5), 1, cfg);
  Verdict f = fwd.verdict;
  if (f.holds() && !(fwd.a <= 1.1)) f = Verdict::make_fails({}, 0, 0, "a = " + short_number(fwd.a));
  const auto rev = empirical_domination(WeightFn::power(1.5), WeightFn::power(2.0), 1, cfg);
  Parts parts{{"t^2->t^1.5", f},
              {"t^1.5->t^2", expect_status(rev.verdict, Status::fails, "reverse domination")}};
  return conjunction(parts);
}

struct ClaimDef {
  const char* key;
  const char* claim;
  Verdict (*run)(const RunConfig&);
};

const std::vector<ClaimDef>& paper_claims() {
  static const std::vector<ClaimDef> defs = {
      {"roundtrip", "recovery from the associated function returns G^s to 1e-6 for p <= 512",
       roundtrip},
      {"log-weight-conjugate",
       "conjugate of max(0, log t) is 0 on [0, 1] and +inf beyond; W^(1) = 1, 1, inf, ...",
       log_weight_exactness},
      {"generated-matrix-properties",
       "t^2 matrix: W_0 = 1, log-convex, ordered in lambda, splitting, algebra with kappa = lambda",
       generated_matrix_block},
      {"critical-equivalence",
       "t^2 matrix and constant G^(1/2) are Roumieu-equivalent; omega/t^2 banded on [10, 1000]",
       critical_equivalence},
      {"oscillator-anchors", "anchor identities to 1e-9 and ratio bounds for G^(1/2), Q = 3, J = 8",
       oscillator_identities},
      {"oscillation", "anchor ratios alternate >= 8 / <= 1/4; neither sequence dominates the other",
       oscillation},
      {"gevrey-conditions",
       "Gevrey family: log-convex, algebra, moderate growth with C ~ 2^s, NQA iff s > 1, M0 iff s >= 1",
       gevrey_conditions},
      {"transfer-crosscheck", "sequence and function side agree on all ordered Gevrey pairs",
       transfer},
      {"triviality", "triviality classifier on powers of t", triviality},
      {"witness-mechanics", "t^2 witnesses dominate t^1.5 with a <= 1.1; not conversely",
       witness_mechanics},
  };
  return defs;
}

// invariants suite

Verdict inv_generated_full(const RunConfig& cfg) {
  const auto M = matrix_of_weight(WeightFn::power(2.0), {0.0625, 0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0},
                                  256, cfg.grid);
  Parts parts{{"generated", check_generated_matrix(M, cfg.tol)}};
  for (double h : {2.0, 4.0}) {
    Verdict v = scaling_property(M, h, cfg.tol);
    if (v.holds() && std::abs(v.witness.at("A") - h * h) > 1e-9)
      v = Verdict::make_fails({}, 0, 0, "A != h^2");
    parts.emplace_back("scaling h=" + short_number(h), v);
  }
  parts.emplace_back("algebra", check_matrix_condition(M, MatrixCondition::c37LR, cfg.tol));
  return conjunction(parts);
}

Verdict inv_conjugate_tables(const RunConfig& cfg) {
  std::vector<double> s;
  for (int i = 0; i <= 160; ++i) s.push_back(i / 16.0);
  Parts parts;
  for (const char* spec : {"t^2", "t^0.5", "log1p", "logtrunc"})
    parts.emplace_back(spec, check_conjugate_table(conjugate_table(parse_weight_spec(spec), s, cfg.grid), cfg.tol));
  return conjunction(parts);
}

Verdict inv_relations(const RunConfig& cfg) {
  Parts parts;
  std::map<double, LogSequence> g;
  for (double s : kGevreyOrders) g.emplace(s, make_gevrey(s, 2048));
  for (double s : kGevreyOrders) {
    const auto r = seq_relate(g.at(s), g.at(s), Relation::preceq, cfg.tol);
    Verdict v = r.verdict;
    if (v.holds() && std::abs(v.witness.at("C") - 1.0) > 1e-9) v = Verdict::make_fails({}, 0, 0, "C != 1");
    parts.emplace_back("reflexive " + order_key(s), v);
  }
  for (std::size_t i = 0; i + 2 < kGevreyOrders.size(); ++i) {
    const double a = kGevreyOrders[i], b = kGevreyOrders[i + 1], c = kGevreyOrders[i + 2];
    const auto ab = seq_relate(g.at(a), g.at(b), Relation::preceq, cfg.tol).verdict;
    const auto bc = seq_relate(g.at(b), g.at(c), Relation::preceq, cfg.tol).verdict;
    const auto ac = seq_relate(g.at(a), g.at(c), Relation::preceq, cfg.tol).verdict;
    bool ok = ab.holds() && bc.holds() && ac.holds() &&
              ac.witness.at("C") <= ab.witness.at("C") * bc.witness.at("C") * (1 + 1e-9);
    parts.emplace_back("transitive " + order_key(a) + "<" + order_key(c),
                       expect(ok, "transitivity bound violated"));
    const auto strict = seq_relate(g.at(a), g.at(b), Relation::triangleleft, cfg.tol).verdict;
    parts.emplace_back("strict implies weak " + order_key(a),
                       expect(!strict.holds() || ab.holds(), "triangleleft without preceq"));
  }
  return conjunction(parts);
}

Verdict inv_oscillator(const RunConfig& cfg) {
  Parts parts;
  const auto r = critical_result(8);
  for (const auto& [k, v] : verify(r, 4096, cfg.tol))
    if (k != "anchors") parts.emplace_back(k, v);
  const auto r12 = critical_result(12);
  const auto checks = verify(r12, 512, cfg.tol);
  parts.emplace_back("anchors J=12", checks[2].second);
  bool tiled = true;
  const auto& blocks = r.M->blocks();
  for (std::size_t b = 1; b < blocks.size(); ++b) tiled = tiled && blocks[b].start == blocks[b - 1].end + 1;
  parts.emplace_back("blocks tile", expect(tiled && *r.M->last_index() == r.plan.anchors.back(), "gap"));
  return conjunction(parts);
}

Verdict inv_norms(const RunConfig& cfg) {
  Parts parts;
  for (const char* spec : {"t^2", "t^1.5", "log1p"}) {
    const WeightFn w = parse_weight_spec(spec);
    const auto n = lambda_norm(CoefficientFamily::weight_witness(w), w, {NormKind::roumieu, 1}, cfg);
    parts.emplace_back(std::string("cancellation ") + spec, expect(n.log_value == 0.0, "norm != 1"));
  }
  std::vector<double> v(200), v3(200);
  for (int k = 0; k < 200; ++k) {
    v[k] = std::exp(-0.1 * k) * ((k % 3) - 1.0);
    v3[k] = 3.0 * v[k];
  }
  const auto c = CoefficientFamily::explicit_values(v), c3 = CoefficientFamily::explicit_values(v3);
  bool ok = true;
  double prev = kInf;
  for (int j = 1; j <= 4; ++j) {
    const double a = lambda_norm(c, WeightFn::power(2.0), {NormKind::roumieu, j}, cfg).log_value;
    const double b = lambda_norm(c3, WeightFn::power(2.0), {NormKind::roumieu, j}, cfg).log_value;
    ok = ok && std::abs(b - a - std::log(3.0)) <= 1e-12 && a <= prev + 1e-12;
    prev = a;
  }
  parts.emplace_back("scaling and monotone in j", expect(ok, "norm scaling or monotonicity broken"));
  return conjunction(parts);
}

Verdict inv_weight_specs(const RunConfig&) {
  bool ok = true;
  for (const char* s : {"t^2", "raw:t^1.5", "log1p", "logtrunc", "gevrey:0.5"})
    ok = ok && parse_weight_spec(parse_weight_spec(s).spec()).spec() == s;
  return expect(ok, "weight spec does not round trip");
}

Verdict inv_quotient_bounds(const RunConfig& cfg) {
  Parts parts;
  for (double s : kGevreyOrders) {
    const auto g = make_gevrey(s, cfg.truncation);
    const auto mu = quotients(g).logmu;
    bool ok = true;
    for (int p = 1; p <= g.truncation(); ++p) ok = ok && g[p] / p <= mu[p] + 1e-12;
    parts.emplace_back(order_key(s), expect(ok, "M_p^(1/p) > mu_p"));
  }
  return conjunction(parts);
}

const std::vector<ClaimDef>& invariant_claims() {
  static const std::vector<ClaimDef> defs = {
      {"generated-matrix-properties",
       "t^2 matrix: W_0 = 1, log-convex, ordered, splitting, scaling with A = h^2 for h = 2, 4, "
       "algebra",
       inv_generated_full},
      {"conjugate-tables", "conjugates nondecreasing, convex, with nondecreasing phi*(s)/s",
       inv_conjugate_tables},
      {"relation-properties", "reflexive with C = 1, transitive constants, strict implies weak",
       inv_relations},
      {"oscillator-structure", "ratio bounds, log-convexity, moderate growth, tiling, J = 12 anchors",
       inv_oscillator},
      {"norm-properties", "witness cancellation, coefficient scaling, monotone in j", inv_norms},
      {"weight-spec-roundtrip", "parse(render(spec)) = spec", inv_weight_specs},
      {"quotient-bounds", "M_p^(1/p) <= mu_p for log-convex Gevrey sequences", inv_quotient_bounds},
  };
  return defs;
}

ClaimResult run_def(int id, const ClaimDef& d, const RunConfig& cfg) {
  ClaimResult r;
  r.id = id;
  r.key = d.key;
  r.claim = d.claim;
  try {
    r.verdict = d.run(cfg);
  } catch (const std::exception& e) {
    r.verdict = Verdict::make_fails({}, 0, 0, std::string("error: ") + e.what());
  }
  return r;
}

}  // namespace

Status SuiteReport::overall() const {
  Status s = Status::holds;
  for (const auto& c : claims) s = worst(s, c.verdict.status);
  return s;
}

std::vector<std::string> suite_names() { return {"paper-claims", "invariants"}; }

ClaimResult run_claim(int id, const RunConfig& cfg) {
  const auto& defs = paper_claims();
  if (id < 1 || id > static_cast<int>(defs.size()))
    throw std::invalid_argument("no claim " + std::to_string(id));
  return run_def(id, defs[id - 1], cfg);
}

SuiteReport run_suite(std::string_view name, const RunConfig& cfg) {
  const std::vector<ClaimDef>* defs = nullptr;
  if (name == "paper-claims")
    defs = &paper_claims();
  else if (name == "invariants")
    defs = &invariant_claims();
  else
    throw std::invalid_argument("unknown suite: " + std::string(name));
  SuiteReport rep;
  rep.suite = name;
  for (std::size_t i = 0; i < defs->size(); ++i)
    rep.claims.push_back(run_def(static_cast<int>(i) + 1, (*defs)[i], cfg));
  return rep;
}

Json to_json(const SuiteReport& r) {
  Json claims = Json::array();
  int counts[3] = {0, 0, 0};
  for (const auto& c : r.claims) {
    ++counts[static_cast<int>(c.verdict.status)];
    claims.push_back(Json{{"id", c.id},
                          {"key", c.key},
                          {"claim", c.claim},
                          {"status", to_string(c.verdict.status)},
                          {"verdict", to_json(c.verdict)}});
  }
  return Json{{"suite", r.suite},
              {"status", to_string(r.overall())},
              {"summary", {{"holds", counts[0]}, {"fails", counts[1]}, {"inconclusive", counts[2]}}},
              {"claims", std::move(claims)}};
}

}  // namespace ultragrowth
