#include "doctest.h"

#include "ultragrowth/conjugate.hpp"
#include "ultragrowth/lambdanorms.hpp"

#include <cmath>
#include <random>

using namespace ultragrowth;

namespace {

const WeightFn kSquare = WeightFn::power(2.0);
const WeightFn kPow15 = WeightFn::power(1.5);

// omega of a finite log sequence by a full scan
double scan_omega(const LogSequence& m, double t) {
  double best = -m[0];
  for (int p = 1; p < static_cast<int>(m.size()); ++p)
    if (std::isfinite(m[p])) best = std::max(best, p * std::log(t) - m[p]);
  return best;
}

}  // namespace

TEST_CASE("witness of a weight has norm one in its own space") {
  for (const WeightFn& w : {kSquare, kPow15, WeightFn::shifted_log(), WeightFn::trunc_log()}) {
    const auto r = lambda_norm(CoefficientFamily::weight_witness(w), w, {NormKind::roumieu, 1});
    CHECK(r.log_value == 0.0);
    CHECK_FALSE(r.tail_rising);
  }
  const auto r = lambda_norm(CoefficientFamily::weight_witness(kPow15), kSquare,
                             {NormKind::roumieu, 1});
  CHECK(r.tail_rising);
}

TEST_CASE("kronecker and explicit families") {
  for (int i : {0, 1, 5, 12345}) {
    for (int j : {1, 2, 3}) {
      const auto r = lambda_norm(CoefficientFamily::kronecker(i), kSquare, {NormKind::beurling, j});
      const double x = std::sqrt(double(i)) * j;
      const double want = x <= 1.0 ? 0.0 : j * (double(i) * j * j - 1.0);
      CHECK(r.log_value == doctest::Approx(want).epsilon(1e-12));
      CHECK(r.argmax == i);
    }
  }
  const auto z = lambda_norm(CoefficientFamily::explicit_values({0, 0, 0}), kSquare,
                             {NormKind::roumieu, 1});
  CHECK(z.value() == 0.0);
  CHECK_THROWS_AS(CoefficientFamily::explicit_values({}), std::invalid_argument);
  CHECK_THROWS_AS(CoefficientFamily::kronecker(-1), std::invalid_argument);
  CHECK_THROWS_AS(lambda_norm(CoefficientFamily::kronecker(1), kSquare, {NormKind::roumieu, 0}),
                  std::invalid_argument);
}

TEST_CASE("beurling norms carry the o(t^2) tag") {
  const auto c = CoefficientFamily::kronecker(3);
  CHECK(lambda_norm(c, kSquare, {NormKind::beurling, 1}).hypothesis == Triviality::trivial);
  CHECK(lambda_norm(c, kPow15, {NormKind::beurling, 1}).hypothesis == Triviality::nontrivial);
  CHECK_FALSE(lambda_norm(c, kSquare, {NormKind::roumieu, 1}).hypothesis.has_value());
}

TEST_CASE("norms scale with the coefficients and shrink in j") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> vals(400);
  for (double& x : vals) x = u(rng) * std::exp(-0.05 * (&x - vals.data()));
  const auto c = CoefficientFamily::explicit_values(vals);
  std::vector<double> scaled = vals;
  for (double& x : scaled) x *= 3.5;
  const auto c2 = CoefficientFamily::explicit_values(scaled);
  for (const WeightFn& w : {kSquare, kPow15, WeightFn::shifted_log()}) {
    double prev = INFINITY;
    for (int j = 1; j <= 6; ++j) {
      const double n = lambda_norm(c, w, {NormKind::roumieu, j}).log_value;
      CHECK(n <= prev + 1e-12);
      prev = n;
      CHECK(lambda_norm(c2, w, {NormKind::roumieu, j}).log_value ==
            doctest::Approx(n + std::log(3.5)).epsilon(1e-12));
      CHECK(lambda_norm(c2, w, {NormKind::beurling, j}).log_value ==
            doctest::Approx(lambda_norm(c, w, {NormKind::beurling, j}).log_value + std::log(3.5))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("matrix norms") {
  const auto M = matrix_of_weight(kSquare, {0.25, 0.5, 1.0, 2.0, 4.0}, 512);
  CHECK(matrix_norm(CoefficientFamily::kronecker(0), M, {NormKind::roumieu, 1}).value() == 1.0);
  CHECK(matrix_norm(CoefficientFamily::kronecker(0), M, {NormKind::beurling, 4}).value() == 1.0);

  std::vector<double> single(5, 0.0);
  single[4] = 1.0;
  const auto r = matrix_norm(CoefficientFamily::explicit_values(single), M, {NormKind::roumieu, 1});
  CHECK(r.log_value == doctest::Approx(scan_omega(M.at(1.0), 2.0)).epsilon(1e-12));
  CHECK(r.log_value > 0.0);

  for (int j : {1, 2, 4}) {
    std::vector<double> c(3000);
    for (int k = 0; k < 3000; ++k) {
      const double o = scan_omega(M.at(j), std::sqrt(double(k)) / j);
      c[k] = o < 700.0 ? std::exp(-o) : 0.0;  // keep clear of subnormals
    }
    const auto n = matrix_norm(CoefficientFamily::explicit_values(c), M, {NormKind::roumieu, j});
    CHECK(std::abs(n.log_value) < 1e-9);
  }
  CHECK_THROWS_AS(matrix_norm(CoefficientFamily::kronecker(1), M, {NormKind::roumieu, 3}),
                  std::out_of_range);
  CHECK_THROWS_AS(matrix_norm(CoefficientFamily::kronecker(1), M, {NormKind::beurling, 8}),
                  std::out_of_range);
}

TEST_CASE("empirical domination") {
  const auto same = empirical_domination(kSquare, kSquare);
  REQUIRE(same.verdict.holds());
  CHECK(same.l == 1);
  CHECK(same.log_C == 0.0);
  CHECK(same.a == 1.0);
  CHECK(same.b == 0.0);

  const auto fwd = empirical_domination(kSquare, kPow15);
  REQUIRE_MESSAGE(fwd.verdict.holds(), fwd.verdict.detail);
  CHECK(fwd.a <= 1.1);
  CHECK(std::isfinite(fwd.b));
  for (double h : {0.5, 1.0, 3.0, 100.0, 1e5})
    CHECK(kPow15(h) <= fwd.a * kSquare(h) + fwd.b + 1e-9);

  const auto rev = empirical_domination(kPow15, kSquare);
  CHECK(rev.verdict.fails());

  const auto j2 = empirical_domination(kSquare, kPow15, 2);
  REQUIRE(j2.verdict.holds());
  for (double h : {0.5, 1.0, 3.0, 100.0, 1e5}) CHECK(kPow15(h) <= j2.a * kSquare(h) + j2.b + 1e-9);
}

TEST_CASE("kind names") {
  CHECK(coeff_kind_from_string("kronecker") == CoeffKind::kronecker);
  CHECK(to_string(CoeffKind::weight_witness) == "weight_witness");
  CHECK(norm_kind_from_string("beurling") == NormKind::beurling);
  CHECK_THROWS_AS(norm_kind_from_string("x"), std::invalid_argument);
}
