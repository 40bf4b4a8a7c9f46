#include "doctest.h"

#include "ultragrowth/oscillator.hpp"
#include "ultragrowth/seqcore.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

using namespace ultragrowth;

namespace {

const double kL2 = std::log(2.0);
const double kL3 = std::log(3.0);

std::shared_ptr<const SequenceSource> root_target() { return std::make_shared<GevreySource>(0.5); }

const OscillatorResult& root_result(int J) {
  static std::map<int, OscillatorResult> cache;
  auto it = cache.find(J);
  if (it == cache.end()) {
    auto target = root_target();
    it = cache.emplace(J, build(plan(*target, 3, J), target)).first;
  }
  return it->second;
}

// stage exponents for nu_p = sqrt(p), Q = 3, from the stage rules written out by hand
std::vector<long long> oracle_exponents(int J) {
  const double l1e = kL3 / 4.0;  // half of log(nu_3j / nu_j)
  std::vector<long long> n;
  long long n1 = 2;
  while (!(n1 * kL3 / 2.0 > std::log(64.0))) ++n1;
  n.push_back(n1);
  if (J >= 3) n.push_back(2);
  for (int j = 3; j < J; ++j) {
    if (j % 2 == 1) {
      long long k = 2;
      while (!(k * l1e > j * kL2 + std::log(j + 1.0))) ++k;
      n.push_back(k);
    } else {
      // A_hat = sqrt(2)^2 = 2, A_cap = 4
      long long k = 2;
      while (!(((j + 1) * kL2 + std::log(double(j))) / k <= kL2 + 1e-12)) ++k;
      n.push_back(k);
    }
  }
  return n;
}

}  // namespace

TEST_CASE("target validation") {
  const auto v = validate_target(GevreySource(0.5));
  REQUIRE(v.holds());
  CHECK(v.witness.at("Q") == 3);
  CHECK(v.witness.at("liminf") == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(v.witness.at("B") == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(v.witness.at("eps_hat") == doctest::Approx(std::pow(3.0, 0.25) - 1.0).epsilon(1e-12));

  const auto g1 = validate_target(GevreySource(1.0));
  REQUIRE(g1.holds());
  CHECK(g1.witness.at("Q") == 3);
  CHECK(g1.witness.at("liminf") == doctest::Approx(3.0));
  CHECK(g1.witness.at("B") == doctest::Approx(2.0));

  const auto g1_table = validate_target(make_gevrey(1.0, 4096));
  REQUIRE(g1_table.holds());
  CHECK(g1_table.witness.at("B") == doctest::Approx(2.0).epsilon(1e-9));

  std::vector<double> geo(1025);
  for (int p = 0; p <= 1024; ++p) geo[p] = kL2 * p * (p + 1) / 2.0;
  CHECK(validate_target(LogSequence(geo, "geometric")).fails());
}

TEST_CASE("plan for the square root target") {
  const auto& p = root_result(8).plan;
  CHECK(p.Q == 3);
  CHECK(p.log1p_eps == doctest::Approx(kL3 / 4.0).epsilon(1e-12));
  CHECK(p.A_hat == doctest::Approx(2.0));
  CHECK(p.A_cap == doctest::Approx(4.0));
  CHECK(p.n == oracle_exponents(8));
  CHECK(p.n == std::vector<long long>{8, 2, 13, 7, 20, 10, 26});
  CHECK(p.m.back() == 87);
  CHECK(p.anchors[1] == ipow(3, 9));
  CHECK(p.anchors[2] == ipow(3, 11));
  CHECK(std::exp(p.log_alpha[0]) == doctest::Approx(4.0 * std::pow(3.0, 0.25)).epsilon(1e-12));
  CHECK(std::exp(p.log_alpha[0]) == doctest::Approx(5.2643).epsilon(1e-4));
  for (std::size_t j = 0; j + 1 < p.anchors.size(); ++j)
    CHECK(p.anchors[j + 1] == p.anchors[j] * ipow(3, static_cast<unsigned>(p.n[j])));
  for (double la : p.log_alpha) CHECK(la > 0.0);
  for (std::size_t mm = static_cast<std::size_t>(p.m[2]); mm < p.log_alpha.size(); ++mm)
    CHECK(std::exp(p.log_alpha[mm]) <= p.A_cap * (1 + 1e-12));

  CHECK_THROWS_AS(plan(GevreySource(0.5), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(plan(GevreySource(0.5), 2, 5), std::invalid_argument);
}

TEST_CASE("built sequence matches the stage identities") {
  const auto& r = root_result(8);
  const auto& M = *r.M;
  CHECK(M.log_m(0) == 0.0);
  CHECK(M.log_m(1) == 0.0);
  CHECK(M.log_mu(1) == 0.0);
  CHECK(M.log_mu(3) == doctest::Approx(r.plan.log_alpha[0]).epsilon(1e-15));

  const auto ratios = anchor_log_ratios(r);
  CHECK(ratios[1] == doctest::Approx(-std::log(4.0)).epsilon(1e-12));
  CHECK(ratios[2] == doctest::Approx(std::log(8.0)).epsilon(1e-12));
  const std::vector<double> expect = {8, 0.25, 32, 1.0 / 6, 128, 0.125};
  for (std::size_t i = 0; i < expect.size(); ++i)
    CHECK(std::exp(ratios[i + 2]) == doctest::Approx(expect[i]).epsilon(1e-9));

  CHECK(r.trace.size() == 8);
  CHECK(r.trace[2].stage_case == "I");
  CHECK(r.trace[3].stage_case == "II");
  CHECK(r.trace[2].n == 13);
  CHECK(r.trace[2].log_mu - r.trace[2].log_nu == doctest::Approx(3 * kL2).epsilon(1e-12));

  CHECK(*M.last_index() == r.plan.anchors.back());
  const auto& blocks = M.blocks();
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    CHECK(blocks[b].start == blocks[b - 1].end + 1);
    // continuity at the boundary
    const BigIndex s = blocks[b].start;
    CHECK(M.log_mu(s) == doctest::Approx(M.log_mu(s - 1) + blocks[b - 1].log_beta).epsilon(1e-12));
  }
}

TEST_CASE("head quotients agree with a direct product of block factors") {
  const auto& r = root_result(8);
  const int H = 4096;
  const auto head = r.M->head(H);
  const auto q = quotients(head).logmu;
  std::vector<double> mu(H + 1, 0.0);
  long long lo = 1, len = 2;
  for (std::size_t mm = 0; lo < H; ++mm) {
    const double step = r.plan.log_alpha[mm] / double(len);
    for (long long i = lo; i < lo + len && i < H; ++i) mu[i + 1] = mu[i] + step;
    lo += len;
    len *= 3;
  }
  for (int p = 1; p <= H; ++p) CHECK(q[p] == doctest::Approx(mu[p]).epsilon(1e-12));
  // j(Q-1) factors between mu_j and mu_Qj
  for (int j = 1; 3 * j <= H; j += 37) {
    int steps = 0;
    double sum = 0.0;
    for (int i = j; i < 3 * j; ++i, ++steps) sum += mu[i + 1] - mu[i];
    CHECK(steps == 2 * j);
    CHECK(std::abs(q[3 * j] - q[j] - sum) < 1e-9);
  }
}

TEST_CASE("verification report") {
  const auto& r = root_result(8);
  const auto checks = verify(r);
  REQUIRE(checks.size() == 6);
  for (const auto& [name, v] : checks) CHECK_MESSAGE(v.holds(), name << ": " << v.detail);
  const auto& claim = checks[0].second;
  const double la_max = *std::max_element(r.plan.log_alpha.begin(), r.plan.log_alpha.end());
  CHECK(claim.witness.at("alpha_max") == doctest::Approx(std::exp(la_max)));
  // stage 2 carries the largest factor
  CHECK(la_max == doctest::Approx(r.plan.log_alpha[r.plan.m[1]]));
  const auto& mg = checks[3].second;
  CHECK(mg.witness.at("A") >= 1.0);
}

TEST_CASE("anchor identities stay exact up to twelve stages") {
  for (int J = 5; J <= 12; ++J) {
    const auto& r = root_result(J);
    const auto checks = verify(r, 512);
    CHECK_MESSAGE(checks[2].second.holds(), "J=" << J << " " << checks[2].second.detail);
    const auto ratios = anchor_log_ratios(r);
    for (int j = 3; j <= J; ++j) {
      const double want = j % 2 == 1 ? j * kL2 : -std::log(double(j));
      CHECK(std::abs(ratios[j - 1] - want) < 1e-9);
    }
  }
  CHECK(root_result(12).plan.n == oracle_exponents(12));
}

TEST_CASE("critical case") {
  CHECK_THROWS_AS(critical_case(4), std::invalid_argument);
  const auto rep = critical_case(8);
  CHECK(rep.validation.holds());
  CHECK(rep.m0.fails());
  REQUIRE_MESSAGE(rep.liminf_probe.verdict.holds(), rep.liminf_probe.verdict.detail);
  // (M_k / N_k)^(1/k) at k_4, k_6, k_8
  const auto& y = rep.liminf_probe.ratio_trace;
  REQUIRE(y.size() == 3);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const int j = 4 + 2 * static_cast<int>(i);
    CHECK(j * std::exp(y[i]) == doctest::Approx(rep.liminf_probe.verdict.witness.at("C")).epsilon(0.05));
  }
  CHECK(rep.incomparability.verdict.holds());
  CHECK(rep.incomparability.liminf_est < 0.2);
  CHECK(rep.incomparability.limsup_est > 50.0);
  CHECK(rep.omega_vs_square.verdict.holds());
}

TEST_CASE("block boundaries") {
  const auto& r = root_result(5);
  const auto b = block_boundaries(r);
  CHECK(b.size() == static_cast<std::size_t>(r.plan.m.back()));
  CHECK(b.front() == 3);
  CHECK(b.back() == r.plan.anchors.back());
}
