#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "quartic/bounds.hpp"
#include "quartic/errors.hpp"
#include "quartic/pade.hpp"

using namespace quartic;

namespace {

GapContext ctx51(long h = 1) { return {51, h, -153, -153, 128}; }

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("threshold constants round to the stated values") {
    double s3 = std::sqrt(3.0);
    double eq = 72 * s3 * std::pow(4 * s3, 2.25) / (2 * M_PI * std::pow(5 * M_PI, 3));
    double in = std::pow(4 * s3, 2.25) * std::pow(3 / (2 * M_PI), 4);
    CHECK(equation_threshold_constant(128).to_double() == doctest::Approx(eq).epsilon(1e-14));
    CHECK(inequality_threshold_constant(128).to_double() == doctest::Approx(in).epsilon(1e-14));
    CHECK(eq > 0.39);
    CHECK(in > 4.0);
    double chained = 3 * std::pow(M_PI, 4) / 8;
    CHECK(chained_threshold_ratio(128).to_double() == doctest::Approx(chained).epsilon(1e-14));
    CHECK(chained < 36.6);
  }

  TEST_CASE("xi1 threshold and its hypothesis") {
    GapContext c = ctx51();
    double want = 0.39 * std::pow(51.0, 9.0 / 8) * std::pow(153.0, 1.0 / 8);
    CHECK(xi1_threshold(c, ThresholdVariant::Equation).to_double() == doctest::Approx(want).epsilon(1e-14));
    double want_in = 4 * std::pow(51.0, 9.0 / 8) * std::pow(153.0, 1.0 / 8);
    CHECK(xi1_threshold(c, ThresholdVariant::Inequality).to_double() == doctest::Approx(want_in).epsilon(1e-14));
    // 10 I > 366 h^2 fails for I = 51, h = 2.
    CHECK_THROWS_AS(xi1_threshold(ctx51(2), ThresholdVariant::Equation), HypothesisNotMet);
  }

  TEST_CASE("growth step formula") {
    GapContext c = ctx51();
    double xi = 40;
    double want = xi * xi * xi / (M_PI * std::sqrt(3.0) * std::pow(153.0, 0.25));
    CHECK(growth_step(Real(xi, 128), c).to_double() == doctest::Approx(want).epsilon(1e-14));
    CHECK_THROWS_AS(growth_step(Real(0L, 128), c), DomainError);
  }

  TEST_CASE("chained z bound equals the closed form") {
    GapContext c = ctx51();
    for (double z : {0.1, 0.5, 1.0, 1.9}) {
      Real zz(z, 128);
      double a = chained_z_bound(zz, c).to_double(), b = chained_z_closed_form(zz, c).to_double();
      CHECK(a == doctest::Approx(b).epsilon(1e-14));
      CHECK(b == doctest::Approx(3 * std::pow(M_PI, 4) * z * z * z / (64 * 51)).epsilon(1e-14));
    }
  }

  TEST_CASE("lambda lower bound") {
    CHECK(lambda_lower(-153, 51, 0).to_double() == doctest::Approx(51.0));
    double want = std::pow(2.0, -0.25) * std::pow(153.0 * 51 / 3, 0.5 - 3.0 / 8);
    CHECK(lambda_lower(-153, 51, 1).to_double() == doctest::Approx(want).epsilon(1e-14));
    CHECK_THROWS_AS(lambda_lower(153, 51, 0), DomainError);
  }

  TEST_CASE("c1 and c2 at r = 1, g = 0") {
    GapContext c = ctx51();
    double p1 = std::sqrt(3 * std::pow(153.0, 1.5) / 153);
    CHECK(c1(1, 0, c).to_double() == doctest::Approx(4 * M_PI * p1).epsilon(1e-13));
    CHECK(c1(1, 0, c).to_double() == doctest::Approx(76.5497).epsilon(1e-6));
    CHECK(c2(1, 0, c).to_double() == doctest::Approx(984871.2).epsilon(1e-7));
  }

  TEST_CASE("c1 grows like 4^r / sqrt r") {
    GapContext c = ctx51();
    for (int r = 2; r <= 10; ++r) {
      double ratio = c1(r + 1, 1, c).to_double() / c1(r, 1, c).to_double();
      CHECK(ratio == doctest::Approx(4 * std::sqrt(double(r) / (r + 1))).epsilon(1e-12));
    }
  }

  TEST_CASE("fin2 bound requires the threshold") {
    GapContext c = ctx51();
    Real t = xi1_threshold(c, ThresholdVariant::Inequality);
    CHECK_THROWS_AS(fin2_bound(1, t, c), HypothesisNotMet);
    Real above = t * 2L;
    CHECK(fin2_bound(1, above, c) > fin2_bound(1, t * Real(1.5, 128), c));
  }

  TEST_CASE("stirling bounds against lgamma") {
    for (long k = 1; k <= 200; ++k) {
      CHECK(stirling_check(k));
      double logC = std::lgamma(2.0 * k + 1) - 2 * std::lgamma(k + 1.0);
      double lo = k * std::log(4.0) - std::log(2 * std::sqrt(double(k)));
      double hi = k * std::log(4.0) - 0.5 * std::log(M_PI * k);
      CHECK(logC >= lo - 1e-9);
      CHECK(logC <= hi + 1e-9);
    }
  }

  TEST_CASE("product constant equals 1 / (Gamma(5/4) Gamma(7/4))") {
    ProductCheck p = product_constant_check(1000, 128);
    double limit = 1 / (std::tgamma(1.25) * std::tgamma(1.75));
    CHECK(p.limit.to_double() == doctest::Approx(limit).epsilon(1e-14));
    CHECK(16 / (3 * std::sqrt(2.0) * M_PI) == doctest::Approx(limit).epsilon(1e-14));
    CHECK(std::abs(p.partial_product.to_double() - limit) < 1e-3);
    CHECK(p.partial_product.to_double() < limit);
    CHECK(p.x_bound_holds);
    CHECK(p.recurrence_matches);
    CHECK(p.binomial_dominated);
  }
}
