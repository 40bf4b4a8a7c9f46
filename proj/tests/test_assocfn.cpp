#include "doctest.h"

#include "ultragrowth/assocfn.hpp"
#include "ultragrowth/block_sequence.hpp"
#include "ultragrowth/seqcore.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <random>

using namespace ultragrowth;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// brute-force sup over every index, no quotient structure used
double brute_omega(const LogSequence& m, double t) {
  double best = -m[0];
  for (std::size_t p = 1; p < m.size(); ++p)
    best = std::max(best, static_cast<double>(p) * std::log(t) - m[p]);
  return best;
}

WeightFn assoc(const LogSequence& m) {
  return WeightFn::associated(std::make_shared<LogSequenceSource>(m), m.name());
}

}  // namespace

TEST_CASE("omega_of_sequence basics") {
  const auto g = make_gevrey(0.5, 4096);
  for (double t : {0.0, 0.1, 0.5, 0.99, 1.0}) CHECK(omega_of_sequence(g, t).value == 0.0);
  CHECK_THROWS_AS(omega_of_sequence(g, -1.0), std::domain_error);
  for (double t : {1.5, 3.0, 7.7, 20.0, 63.0})
    CHECK(omega_of_sequence(g, t).value == doctest::Approx(brute_omega(g, t)).epsilon(1e-12));
  CHECK(omega_of_sequence(g, 100.0).saturated);
  CHECK_FALSE(omega_of_sequence(g, 10.0).saturated);
}

TEST_CASE("omega of a non-log-convex sequence uses the full scan") {
  std::vector<double> v{0, 2, 2.1, 5, 5.2, 9, 9.1, 14, 14.2};
  const LogSequence m(v, "zigzag");
  REQUIRE_FALSE(m.has_nondecreasing_quotients());
  for (double t : {0.5, 2.0, 5.0, 30.0})
    CHECK(omega_of_sequence(m, t).value == doctest::Approx(brute_omega(m, t)));
}

TEST_CASE("critical sequence: omega / t^2 stays in a band on [10, 1000]") {
  // P = 2^21 keeps the argmax t^2 below P for t <= 1000
  const auto g = make_gevrey(0.5, 1 << 21);
  double lo = kInf, hi = -kInf;
  for (double t = 10.0; t <= 1000.0; t *= 1.25) {
    const auto o = omega_of_sequence(g, t);
    CHECK_FALSE(o.saturated);
    CHECK(o.value == doctest::Approx(brute_omega(g, t)).epsilon(1e-10));
    lo = std::min(lo, o.value / (t * t));
    hi = std::max(hi, o.value / (t * t));
  }
  CHECK(lo >= 0.4);
  CHECK(hi <= 0.5);
}

TEST_CASE("round trip recovers Gevrey sequences") {
  for (double s : {0.25, 0.5, 1.0, 2.0}) {
    CAPTURE(s);
    const auto g = make_gevrey(s, 4096);
    const auto back = sequence_of_omega(assoc(g), 512);
    double worst = 0.0;
    for (int p = 0; p <= 512; ++p) worst = std::max(worst, std::abs(back[p] - g[p]));
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("round trip through a closed-form Gevrey source") {
  const auto w = WeightFn::associated(std::make_shared<GevreySource>(1.0), "gevrey:1");
  const auto back = sequence_of_omega(w, 64);
  const auto g = make_gevrey(1.0, 64);
  for (int p = 0; p <= 64; ++p) CHECK(back[p] == doctest::Approx(g[p]).epsilon(1e-9));
}

TEST_CASE("recovery from the truncated logarithm is exotic") {
  const auto m = sequence_of_omega(WeightFn::trunc_log(), 16);
  CHECK(m[0] == 0.0);
  CHECK(m[1] == 0.0);
  for (int p = 2; p <= 16; ++p) CHECK(m[p] == kInf);
  CHECK(m.is_exotic());
  CHECK(m.provenance() == Provenance::generated_from_weight);
}

TEST_CASE("recovery for normalized weights starts at zero") {
  for (double a : {0.5, 1.0, 2.0}) CHECK(sequence_of_omega(WeightFn::power(a), 8)[0] == 0.0);
}

TEST_CASE("recovery from t^2 matches the Legendre oracle") {
  // normalized t^2: log M_p = sup_u (p u - e^{2u} + 1) = (p/2)(log(p/2) - 1) + 1 for p > 2
  const auto m = sequence_of_omega(WeightFn::power(2.0), 40);
  for (int p = 3; p <= 40; ++p) {
    const double x = p / 2.0;
    CHECK(m[p] == doctest::Approx(x * (std::log(x) - 1) + 1).epsilon(1e-10));
  }
}

TEST_CASE("weight conditions from the examples") {
  const RunConfig cfg;
  CHECK(check_weight_condition(WeightFn::power(2.0), WeightCondition::omega6, cfg).holds());
  CHECK(check_weight_condition(WeightFn::shifted_log(), WeightCondition::gamma, cfg).fails());
  CHECK(check_weight_condition(WeightFn::shifted_log(), WeightCondition::omega6, cfg).fails());
  CHECK(check_weight_condition(WeightFn::power(1.5), WeightCondition::omega_nqa, cfg).fails());
  const Verdict half = check_weight_condition(WeightFn::power(0.5), WeightCondition::omega_nqa, cfg);
  REQUIRE(half.holds());
  // int_1^T (t^a - 1)/t^2 dt = [t^(a-1)/(a-1) + 1/t]_1^T
  const double T = cfg.grid.t_max, a = 0.5;
  const double exact = (std::pow(T, a - 1) / (a - 1) + 1 / T) - (1 / (a - 1) + 1);
  CHECK(half.witness.at("integral") == doctest::Approx(exact).epsilon(1e-5));
}

TEST_CASE("remaining weight conditions on standard weights") {
  const RunConfig cfg;
  const auto t2 = WeightFn::power(2.0);
  const Verdict a = check_weight_condition(t2, WeightCondition::alpha, cfg);
  REQUIRE(a.holds());
  CHECK(a.witness.at("L") == doctest::Approx(4.0).epsilon(1e-3));
  CHECK(check_weight_condition(t2, WeightCondition::beta, cfg).holds());
  CHECK(check_weight_condition(WeightFn::power(2.5), WeightCondition::beta, cfg).fails());
  CHECK(check_weight_condition(t2, WeightCondition::gamma, cfg).holds());
  CHECK(check_weight_condition(t2, WeightCondition::delta, cfg).holds());
  CHECK(check_weight_condition(WeightFn::shifted_log(), WeightCondition::delta, cfg).holds());
  CHECK_FALSE(check_weight_condition(WeightFn::shifted_log(), WeightCondition::om7, cfg).fails());
  CHECK(check_weight_condition(t2, WeightCondition::om7, cfg).fails());
  CHECK(check_weight_condition(WeightFn::power(1.0), WeightCondition::omega_nqa, cfg).fails());
  // concave in log t: w(e^u) = sqrt(u) on a sampled grid
  std::vector<double> ts, vs;
  for (double t = 1.0; t <= 1e4; t *= 1.1) {
    ts.push_back(t);
    vs.push_back(std::sqrt(std::log(t)));
  }
  const auto conc = WeightFn::sampled(ts, vs);
  CHECK(check_weight_condition(conc, WeightCondition::delta, cfg).fails());
}

TEST_CASE("triviality classifier") {
  const RunConfig cfg;
  auto cls = [&](double a, ClassCase c) { return classify_triviality(WeightFn::power(a), c, cfg).result; };
  CHECK(cls(2.0, ClassCase::beurling) == Triviality::trivial);
  CHECK(cls(1.5, ClassCase::beurling) == Triviality::nontrivial);
  CHECK(cls(2.0, ClassCase::roumieu) == Triviality::nontrivial);
  CHECK(cls(2.5, ClassCase::roumieu) == Triviality::trivial);
}

TEST_CASE("omega is nondecreasing and dominates every probed term") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 9.0);
  for (double s : {0.25, 1.0, 2.0}) {
    const auto g = make_gevrey(s, 1024);
    std::vector<double> ts;
    for (int i = 0; i < 200; ++i) ts.push_back(std::exp(u(rng)));
    std::sort(ts.begin(), ts.end());
    double prev = -kInf;
    for (double t : ts) {
      const double w = omega_of_sequence(g, t).value;
      CHECK(w >= prev);
      prev = w;
      for (int p = 0; p <= 1024; p += 37) CHECK(w >= p * std::log(t) - g[p] - 1e-12);
    }
  }
}

TEST_CASE("associated weights of block sequences") {
  // mu_p = 2^(p-1): prefix M_0 = M_1 = 1, one block of doubling quotients
  const auto b = std::make_shared<BlockSequence>(std::vector<double>{0.0, 0.0},
                                                 std::vector<Block>{{1, 40, std::log(2.0)}}, "dbl");
  const auto w = WeightFn::associated(b, "dbl");
  CHECK(w.normalized());
  std::vector<double> v(42);
  double mu = 0.0;
  for (int p = 1; p <= 41; ++p) {
    v[p] = v[p - 1] + mu;
    mu += std::log(2.0);
  }
  const LogSequence m(v, "dbl");
  for (double t : {0.5, 3.0, 100.0, 1e5}) CHECK(w(t) == doctest::Approx(brute_omega(m, t)).epsilon(1e-12));
}

TEST_CASE("sampled weights") {
  const auto w = WeightFn::sampled({1.0, 2.0, 4.0}, {0.0, 1.0, 3.0});
  CHECK(w(3.0) == doctest::Approx(2.0));
  CHECK_THROWS_AS(w(5.0), std::out_of_range);
  CHECK(w.domain_max() == 4.0);
  CHECK_THROWS_AS(WeightFn::sampled({1.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::sampled({1.0, 2.0}, {1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("condition names round trip") {
  for (auto c : {WeightCondition::alpha, WeightCondition::beta, WeightCondition::gamma,
                 WeightCondition::delta, WeightCondition::omega6, WeightCondition::om7,
                 WeightCondition::omega_nqa})
    CHECK(weight_condition_from_string(to_string(c)) == c);
}
