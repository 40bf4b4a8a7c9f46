#include "doctest.h"

#include "ultragrowth/conjugate.hpp"
#include "ultragrowth/matrices.hpp"

#include <cmath>

using namespace ultragrowth;

namespace {

const std::vector<double> kLambdas = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};

const WeightMatrix& power_matrix(double a, int P = 256) {
  static std::map<std::pair<double, int>, WeightMatrix> cache;
  auto it = cache.find({a, P});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(a, P), matrix_of_weight(WeightFn::power(a), kLambdas, P)).first;
  return it->second;
}

// log W^(l)_p for the normalized t^a weight, from the closed-form conjugate
double closed_w(double a, double l, int p) {
  const double s = l * p;
  if (s <= a) return 0.0;
  return ((s / a) * (std::log(s / a) - 1.0) + 1.0) / l;
}

}  // namespace

TEST_CASE("algebra property of the t^2 matrix holds with kappa = lambda and A = 1") {
  const auto v = check_matrix_condition(power_matrix(2.0), MatrixCondition::c37LR);
  REQUIRE_MESSAGE(v.holds(), v.detail);
  for (double l : kLambdas) {
    const std::string k = "lambda=" + short_number(l);
    CHECK(v.witness.at(k + ".kappa") == l);
    CHECK(v.witness.at(k + ".A") == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(check_matrix_condition(power_matrix(2.0), MatrixCondition::c37LB).holds());
}

TEST_CASE("constant Gevrey 1/2 matrix fails the Beurling square condition") {
  const auto g = make_gevrey(0.5, 256);
  const auto c = WeightMatrix::constant(g, kLambdas);
  // 2 log M_p - log M_p = log M_p, and log M_p / p = logGamma(p+1) / (2p) grows
  CHECK(g[256] / 256 > g[64] / 64 + 0.5);
  const auto v = check_matrix_condition(c, MatrixCondition::beurling_square);
  CHECK(v.fails());
  CHECK(v.detail.find("grid exhausted") != std::string::npos);
}

TEST_CASE("generated matrices are monotone, constant and closed under derivation") {
  for (double a : {0.5, 1.0, 2.0}) {
    CAPTURE(a);
    const auto& m = power_matrix(a);
    CHECK(check_matrix_condition(m, MatrixCondition::monotone).holds());
    const auto c = check_matrix_condition(m, MatrixCondition::constant);
    CHECK_MESSAGE(c.holds(), c.detail);
    CHECK(check_matrix_condition(m, MatrixCondition::M2primeR).holds());
    CHECK(check_matrix_condition(m, MatrixCondition::M2primeB).holds());
    CHECK(check_matrix_condition(m, MatrixCondition::standard_log_convex).holds());
    CHECK(check_matrix_condition(m, MatrixCondition::M2R).holds());
    CHECK(check_matrix_condition(m, MatrixCondition::M2B).holds());
  }
}

TEST_CASE("Gelfand-Shilov type condition") {
  const auto r = check_matrix_condition(power_matrix(2.0), MatrixCondition::c12L2R);
  CHECK_MESSAGE(r.holds(), r.detail);
  const auto b = check_matrix_condition(power_matrix(2.0), MatrixCondition::c12L2B);
  REQUIRE_MESSAGE(b.holds(), b.detail);
  CHECK(b.witness.at("lambda=1.B@0.25") == doctest::Approx(1.0));
  CHECK(b.witness.at("lambda=1.B@4") <= b.witness.at("lambda=1.B@0.25"));
  // p^(p/2) against W ~ p!^(1/4): excess (1/4) log p per index
  CHECK(closed_w(4.0, 1.0, 256) / 256 < 0.5 * std::log(256.0) - 0.5);
  CHECK(check_matrix_condition(power_matrix(4.0), MatrixCondition::c12L2R).fails());
  CHECK_FALSE(check_matrix_condition(power_matrix(3.0), MatrixCondition::c12L2R).holds());
}

TEST_CASE("matrix relations") {
  const auto& w2 = power_matrix(2.0);
  const auto self = relate_matrices(w2, w2, MatrixMode::roumieu);
  REQUIRE(self.holds());
  CHECK(self.witness.at("lambda=1.kappa") == 1.0);
  CHECK(self.witness.at("lambda=1.C") == 1.0);

  const auto g = WeightMatrix::constant(make_gevrey(0.5, 256), kLambdas);
  for (auto mode : {MatrixMode::roumieu, MatrixMode::beurling}) {
    const auto ab = relate_matrices(w2, g, mode);
    const auto ba = relate_matrices(g, w2, mode);
    CHECK_MESSAGE(ab.holds(), ab.detail);
    CHECK_MESSAGE(ba.holds(), ba.detail);
    for (const auto& [k, c] : ab.witness) CHECK(std::isfinite(c));
  }

  // per-pair root ratio of the closed forms keeps falling
  const double r64 = (closed_w(2.0, 1.0, 64) - closed_w(1.0, 1.0, 64)) / 64;
  const double r256 = (closed_w(2.0, 1.0, 256) - closed_w(1.0, 1.0, 256)) / 256;
  CHECK(r256 < r64 - 0.5);
  const auto& w1 = power_matrix(1.0);
  CHECK(relate_matrices(w2, w1, MatrixMode::strong).holds());
  CHECK(relate_matrices(w1, w2, MatrixMode::strong).fails());
  CHECK(relate_matrices(w1, w2, MatrixMode::roumieu).fails());

  // transitivity on the grid
  CHECK(relate_matrices(g, w1, MatrixMode::roumieu).holds());
  CHECK(relate_matrices(w2, w1, MatrixMode::roumieu).holds());

  CHECK_THROWS_AS(relate_matrices(w2, power_matrix(2.0, 128), MatrixMode::roumieu),
                  std::invalid_argument);
}

TEST_CASE("matrix non-quasianalyticity") {
  const auto& half = power_matrix(0.5, 1024);
  CHECK(matrix_nqa(half, MatrixMode::roumieu).holds());
  CHECK(matrix_nqa(half, MatrixMode::beurling).holds());
  const auto g1 = WeightMatrix::constant(make_gevrey(1.0, 1024), kLambdas);
  CHECK(matrix_nqa(g1, MatrixMode::roumieu).fails());
  CHECK(matrix_nqa(g1, MatrixMode::beurling).fails());
  const auto g2 = WeightMatrix::constant(make_gevrey(2.0, 1024), kLambdas);
  CHECK(matrix_nqa(g2, MatrixMode::roumieu).holds());
  CHECK(matrix_nqa(g2, MatrixMode::beurling).holds());
  const auto log_m = matrix_of_weight(WeightFn::trunc_log(), {1.0}, 16);
  CHECK_THROWS_AS(matrix_nqa(log_m, MatrixMode::roumieu), std::invalid_argument);
}

TEST_CASE("matrix condition and mode names") {
  for (int i = 0; i <= static_cast<int>(MatrixCondition::standard_log_convex); ++i) {
    const auto c = static_cast<MatrixCondition>(i);
    CHECK(matrix_condition_from_string(to_string(c)) == c);
  }
  for (auto m : {MatrixMode::roumieu, MatrixMode::beurling, MatrixMode::strong})
    CHECK(matrix_mode_from_string(to_string(m)) == m);
  CHECK_THROWS_AS(matrix_condition_from_string("x"), std::invalid_argument);
}
