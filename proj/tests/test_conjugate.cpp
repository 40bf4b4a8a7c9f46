#include "doctest.h"

#include "ultragrowth/conjugate.hpp"

#include <cmath>
#include <limits>

using namespace ultragrowth;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sup_{u >= 0} (s u - phi(u)) for phi(u) = e^(a u) - c, by calculus
double power_conjugate(double a, double c, double s) {
  if (s <= a) return c - 1.0;
  const double x = s / a;
  return x * (std::log(x) - 1.0) + c;
}

// golden-section sup on [0, 40] after a coarse scan, independent of the library
double dense_sup(double s, double (*phi)(double)) {
  double best = -kInf, arg = 0.0;
  for (int i = 0; i <= 40000; ++i) {
    const double u = i * 1e-3;
    const double v = s * u - phi(u);
    if (v > best) best = v, arg = u;
  }
  double lo = std::max(0.0, arg - 1e-3), hi = arg + 1e-3;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int k = 0; k < 100; ++k) {
    const double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    if (s * x1 - phi(x1) > s * x2 - phi(x2)) hi = x2; else lo = x1;
  }
  const double u = 0.5 * (lo + hi);
  return std::max(best, s * u - phi(u));
}

double exp_phi(double u) { return std::exp(u); }

}  // namespace

TEST_CASE("logarithmic weight has a degenerate conjugate") {
  const auto w = WeightFn::trunc_log();
  for (double s : {0.0, 0.5, 1.0}) CHECK(young_conjugate(w, s) == 0.0);
  for (double s : {1.01, 2.0, 10.0}) CHECK(young_conjugate(w, s) == kInf);
  const auto m = matrix_of_weight(w, {1.0}, 16);
  const auto& e = m.at(1.0);
  CHECK(e[0] == 0.0);
  CHECK(e[1] == 0.0);
  for (int p = 2; p <= 16; ++p) CHECK(e[p] == kInf);
  CHECK(e.is_exotic());
}

TEST_CASE("conjugate of the raw linear weight") {
  const auto w = WeightFn::power(1.0, false);
  for (double s : {0.25, 0.5, 1.0, 1.5, 3.0, 10.0, 100.0, 1e4}) {
    CAPTURE(s);
    const double oracle = s >= 1.0 ? s * std::log(s) - s : -1.0;
    CHECK(dense_sup(s, exp_phi) == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(young_conjugate(w, s) == doctest::Approx(oracle).epsilon(1e-6));
  }
}

TEST_CASE("conjugate at zero of a normalized weight") {
  CHECK(young_conjugate(WeightFn::power(2.0), 0.0) == 0.0);
  CHECK(young_conjugate(WeightFn::shifted_log(), 0.0) == doctest::Approx(-std::log(2.0)));
  CHECK_THROWS_AS(young_conjugate(WeightFn::power(2.0), -1.0), std::invalid_argument);
}

TEST_CASE("generated matrix of t^2 matches the closed form") {
  const std::vector<double> lambdas = {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
  const auto m = matrix_of_weight(WeightFn::power(2.0), lambdas, 256);
  for (double l : lambdas)
    for (int p : {0, 1, 2, 5, 17, 64, 255, 256}) {
      CAPTURE(l);
      CAPTURE(p);
      const double oracle = power_conjugate(2.0, 1.0, l * p) / l;
      CHECK(m.at(l)[p] == doctest::Approx(oracle).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("structural properties of the matrix generated by t^2") {
  RunConfig cfg;
  const auto m = matrix_of_weight(WeightFn::power(2.0), cfg.lambdas_with_doubles(), 256);
  const auto v = check_generated_matrix(m, cfg.tol);
  CHECK_MESSAGE(v.holds(), v.detail);
  CHECK(v.witness.at("splitting.pairs") >= 7);
}

TEST_CASE("scaling property fits A = h^2 for t^2") {
  const std::vector<double> lambdas = {0.0625, 0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0};
  const auto m = matrix_of_weight(WeightFn::power(2.0), lambdas, 256);
  const auto v2 = scaling_property(m, 2.0);
  REQUIRE(v2.holds());
  CHECK(v2.witness.at("A") == 4.0);
  const auto v4 = scaling_property(m, 4.0);
  REQUIRE(v4.holds());
  CHECK(v4.witness.at("A") == 16.0);
}

TEST_CASE("conjugate tables are monotone and convex") {
  std::vector<double> s;
  for (int i = 0; i <= 200; ++i) s.push_back(0.05 * i);
  for (const auto& w : {WeightFn::power(2.0), WeightFn::power(0.5), WeightFn::shifted_log(),
                        WeightFn::trunc_log()}) {
    CAPTURE(w.spec());
    const auto t = conjugate_table(w, s);
    const auto v = check_conjugate_table(t);
    CHECK_MESSAGE(v.holds(), v.detail);
  }
  const auto t = conjugate_table(WeightFn::trunc_log(), s);
  CHECK(t.finite_threshold == doctest::Approx(1.0));
  const auto l = conjugate_table(WeightFn::shifted_log(), s);
  CHECK(l.finite_threshold == doctest::Approx(1.0));
}

TEST_CASE("matrix generation rejects bad input") {
  CHECK_THROWS_AS(matrix_of_weight(WeightFn::power(2.0), {}, 16), std::invalid_argument);
  CHECK_THROWS_AS(matrix_of_weight(WeightFn::power(2.0), {-1.0}, 16), std::invalid_argument);
  CHECK_THROWS_AS(matrix_of_weight(WeightFn::power(2.0, false), {1.0}, 16),
                  std::invalid_argument);
  CHECK_THROWS_AS(conjugate_table(WeightFn::power(2.0), {1.0, 0.5}), std::invalid_argument);
}

TEST_CASE("weight matrix invariants") {
  const auto g = make_gevrey(0.5, 16);
  const auto c = WeightMatrix::constant(g, {1.0, 2.0});
  CHECK(c.truncation() == 16);
  CHECK(c.lambdas() == std::vector<double>{1.0, 2.0});
  CHECK_THROWS_AS(c.at(3.0), std::out_of_range);
  std::map<double, LogSequence> bad{{1.0, make_gevrey(1.0, 16)}, {2.0, g}};
  CHECK_THROWS_AS(WeightMatrix(bad, "x"), std::invalid_argument);
  std::map<double, LogSequence> mixed{{1.0, g}, {2.0, make_gevrey(1.0, 20)}};
  CHECK_THROWS_AS(WeightMatrix(mixed, "x"), std::invalid_argument);
}
