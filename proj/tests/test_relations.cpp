#include "doctest.h"

#include "ultragrowth/relations.hpp"

#include <cmath>
#include <vector>

using namespace ultragrowth;

namespace {

// log p! by summation
std::vector<double> log_factorials(int P) {
  std::vector<double> out(static_cast<std::size_t>(P) + 1, 0.0);
  for (int p = 1; p <= P; ++p) out[p] = out[p - 1] + std::log(double(p));
  return out;
}

LogSequence shifted(const LogSequence& m, double log_c) {
  std::vector<double> v(m.logm().begin(), m.logm().end());
  for (std::size_t p = 0; p < v.size(); ++p) v[p] += static_cast<double>(p) * log_c;
  return LogSequence(std::move(v), m.name() + "*c^p");
}

const std::vector<double> kOrders = {0.25, 0.5, 1.0, 2.0};

}  // namespace

TEST_CASE("Gevrey 1/2 is dominated by Gevrey 1") {
  const auto a = make_gevrey(0.5, 4096), b = make_gevrey(1.0, 4096);
  const auto rep = seq_relate(a, b, Relation::preceq);
  REQUIRE(rep.verdict.holds());
  CHECK(rep.verdict.witness.at("C") == doctest::Approx(1.0));
  const auto lf = log_factorials(4096);
  for (int p : {1, 10, 100, 4096})
    CHECK(rep.ratio_trace[p - 1] == doctest::Approx(-0.5 * lf[p] / p).epsilon(1e-10));
  CHECK(seq_relate(a, b, Relation::triangleleft).verdict.holds());
  const auto back = seq_relate(b, a, Relation::preceq);
  CHECK(back.verdict.fails());
  REQUIRE_FALSE(back.verdict.counterexample.empty());
  const double p = back.verdict.counterexample.front();
  CHECK(0.5 * lf[static_cast<std::size_t>(p)] / p > back.ratio_trace.front());
}

TEST_CASE("relation properties on the Gevrey family") {
  std::vector<LogSequence> g;
  for (double s : kOrders) g.push_back(make_gevrey(s, 2048));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto self = seq_relate(g[i], g[i], Relation::equiv);
    REQUIRE(self.verdict.holds());
    CHECK(self.verdict.witness.at("M<=N.C") == 1.0);
    CHECK(self.liminf_est == 1.0);
    CHECK(self.limsup_est == 1.0);
    for (std::size_t j = 0; j < g.size(); ++j) {
      const auto tri = seq_relate(g[i], g[j], Relation::triangleleft);
      const auto pre = seq_relate(g[i], g[j], Relation::preceq);
      CHECK(tri.verdict.holds() == (i < j));
      CHECK(pre.verdict.holds() == (i <= j));
      if (tri.verdict.holds()) CHECK(pre.verdict.holds());
      CHECK(pre.liminf_est <= pre.limsup_est);
      for (std::size_t k = 0; k < g.size(); ++k) {
        const auto jk = seq_relate(g[j], g[k], Relation::preceq);
        const auto ik = seq_relate(g[i], g[k], Relation::preceq);
        if (pre.verdict.holds() && jk.verdict.holds()) {
          REQUIRE(ik.verdict.holds());
          CHECK(ik.verdict.witness.at("C") <=
                pre.verdict.witness.at("C") * jk.verdict.witness.at("C") * (1 + 1e-12));
        }
      }
    }
  }
}

TEST_CASE("geometric rescaling moves the witness but not the verdict") {
  const auto a = make_gevrey(0.5, 2048), b = make_gevrey(1.0, 2048);
  for (double c : {0.5, 3.0}) {
    const auto nb = shifted(b, std::log(c));
    const auto base = seq_relate(a, b, Relation::preceq);
    const auto moved = seq_relate(a, nb, Relation::preceq);
    REQUIRE(moved.verdict.holds());
    CHECK(moved.verdict.witness.at("C") == doctest::Approx(base.verdict.witness.at("C") / c));
    CHECK(seq_relate(b, a, Relation::preceq).verdict.status ==
          seq_relate(nb, a, Relation::preceq).verdict.status);
  }
}

TEST_CASE("sampled relation through closed-form sources") {
  const GevreySource a(0.5), b(1.0);
  std::vector<BigIndex> ks;
  for (int e = 0; e <= 60; ++e) ks.push_back(ipow(2, unsigned(e)));
  CHECK(seq_relate(a, b, ks, Relation::preceq).verdict.holds());
  CHECK(seq_relate(b, a, ks, Relation::preceq).verdict.fails());
  CHECK(seq_relate(a, b, ks, Relation::triangleleft).verdict.holds());
  CHECK_THROWS_AS(seq_relate(make_gevrey(1, 16), make_gevrey(1, 20), Relation::preceq),
                  std::invalid_argument);
}

TEST_CASE("weight function relations") {
  const auto w2 = WeightFn::power(2.0), w15 = WeightFn::power(1.5);
  CHECK(wf_relate(w2, w2, Relation::sim).verdict.holds());
  const auto r = wf_relate(w2, w15, Relation::preceq);
  CHECK(r.verdict.holds());
  // t^1.5 / t^2 oracle
  const double t = r.abscissae.back();
  CHECK(r.ratio_trace.back() ==
        doctest::Approx(std::log(std::pow(t, 1.5) - 1) - std::log(t * t - 1)).epsilon(1e-9));
  CHECK(wf_relate(w15, w2, Relation::preceq).verdict.fails());
  CHECK(wf_relate(w2, w15, Relation::triangleleft).verdict.holds());
  CHECK_FALSE(wf_relate(w2, w2, Relation::triangleleft).verdict.holds());
  CHECK(wf_relate(WeightFn::trunc_log(), WeightFn::shifted_log(), Relation::sim).verdict.holds());
}

TEST_CASE("transfer cross-check agrees on every ordered Gevrey pair") {
  std::vector<LogSequence> g;
  for (double s : kOrders) g.push_back(make_gevrey(s, 1 << 20));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      CAPTURE(kOrders[i]);
      CAPTURE(kOrders[j]);
      const auto v = crosscheck_transfer(g[i], g[j]);
      CHECK_MESSAGE(v.holds(), v.detail);
      CHECK(v.witness.at("sequence_side") == (i < j ? 1.0 : 0.0));
    }
  const auto same = crosscheck_transfer(g[1], g[1]);
  REQUIRE(same.holds());
  CHECK(same.witness.at("A") == 1.0);
  CHECK(same.witness.at("B") == 0.0);
}

TEST_CASE("oscillation probe") {
  const auto a = make_gevrey(0.5, 4096), b = make_gevrey(1.0, 4096);
  const LogSequenceSource sa(a), sb(b);
  std::vector<BigIndex> ks;
  for (int e = 1; e <= 12; ++e) ks.push_back(ipow(2, unsigned(e)));
  const auto same = oscillation_probe(sa, sa, ks);
  CHECK(same.liminf_est == 1.0);
  CHECK(same.limsup_est == 1.0);
  CHECK(same.verdict.fails());
  const auto gb = oscillation_probe(sa, sb, ks);
  CHECK(gb.limsup_est <= 1.0);
  const auto lf = log_factorials(4096);
  CHECK(gb.liminf_est == doctest::Approx(std::exp(-0.5 * lf[4096] / 4096)).epsilon(1e-9));
  CHECK(gb.verdict.fails());
  std::vector<double> x, r;
  for (int j = 1; j <= 10; ++j) {
    x.push_back(j);
    r.push_back(j % 2 ? j * std::log(2.0) : -std::log(double(j)));
  }
  const auto osc = oscillation_probe(x, r);
  CHECK(osc.verdict.holds());
  CHECK(oscillation_probe({1, 2, 3}, {0, 1, -1}).verdict.inconclusive());
}

TEST_CASE("relation names") {
  for (auto r : {Relation::preceq, Relation::triangleleft, Relation::equiv, Relation::sim,
                 Relation::incomparable_probe})
    CHECK(relation_from_string(to_string(r)) == r);
  CHECK_THROWS_AS(relation_from_string("bogus"), std::invalid_argument);
}
