#include <doctest.h>

#include <cmath>
#include <complex>

#include "helpers.hpp"
#include "quartic/bounds.hpp"
#include "quartic/errors.hpp"
#include "quartic/resolvent.hpp"
#include "quartic/thue_solver.hpp"

using namespace quartic;

namespace {

std::complex<double> to_std(const Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

}  // namespace

TEST_SUITE("resolvent") {
  TEST_CASE("grid identities on the published forms at 128 bits") {
    Real tol = two_pow(-64, 128);
    for (const auto& row : oracle::published_table()) {
      ResolventBasis b = resolvent_basis(testing::from_small(row.form), 128);
      GridReport g = grid_check(b, 10);
      CHECK(g.points == 441);
      CHECK(g.max_diagonal_residual < tol);
      CHECK(g.max_c62_residual < tol);
      CHECK(g.max_w_residual < tol);
      CHECK(b.I == row.I);
      CHECK(b.A4 != 0);
      CHECK(abs(b.A4) <= 4 * row.I);
    }
  }

  TEST_CASE("diagonal value reproduces F independently of the library evaluator") {
    QuarticForm f(1, 0, -12, 16, -4);
    ResolventBasis b = resolvent_basis(f, 128);
    auto a = testing::small(f);
    for (long x = -7; x <= 7; ++x)
      for (long y = -7; y <= 7; ++y) {
        std::complex<double> d = to_std(b.diagonal_value(x, y));
        double want = static_cast<double>(oracle::eval(a, x, y));
        CHECK(d.real() == doctest::Approx(want).epsilon(1e-12));
        CHECK(std::abs(d.imag()) <= 1e-9 * (1 + std::abs(want)));
      }
  }

  TEST_CASE("K has modulus 8 sqrt(3 I |A4|)") {
    for (const auto& row : oracle::published_table()) {
      ResolventBasis b = resolvent_basis(testing::from_small(row.form), 128);
      double want = 8 * std::sqrt(3.0 * row.I * std::abs(b.A4.get_d()));
      CHECK(b.K.abs().to_double() == doctest::Approx(want).epsilon(1e-14));
    }
  }

  TEST_CASE("z lies on |1 - z| = 1 at every published solution") {
    Real tol = two_pow(-64, 128);
    for (const auto& row : oracle::published_table()) {
      QuarticForm f = testing::from_small(row.form);
      ResolventBasis b = resolvent_basis(f, 128);
      for (auto [x, y] : row.solutions) {
        ResolventSample s = z_value(b, x, y);
        CHECK(s.unit_residual < tol);
        std::complex<double> z = to_std(s.z);
        CHECK(std::abs(std::abs(1.0 - z) - 1.0) < 1e-15);
        // eta = conj(xi) by construction.
        CHECK((s.eta - s.xi.conj()).abs() < tol);
      }
    }
  }

  TEST_CASE("omega mapping on the I = 51 form") {
    ResolventBasis b = resolvent_basis({1, -1, -6, 1, 1}, 128);
    CHECK(omega_assoc(b, -1, 0) == 0);
    CHECK(omega_assoc(b, 0, 1) == 2);
    CHECK(omega_assoc(b, 1, 2) == 3);
    CHECK(omega_assoc(b, -2, 1) == 1);
    // F = Re(w) - Im(w) / 4 with w = (x + i y)^4, so xi ~ x + i y, eta ~ x - i y and
    // (eta / xi)^4 = -(1 - i/4) / (1 + i/4) * ((x - i y) / (x + i y))^4.
    std::complex<double> c4 = -std::complex<double>(1, -0.25) / std::complex<double>(1, 0.25);
    for (long x = -6; x <= 6; ++x)
      for (long y = -6; y <= 6; ++y) {
        if (x == 0 && y == 0) continue;
        ResolventSample s = z_value(b, x, y);
        std::complex<double> ratio = to_std(s.eta) / to_std(s.xi);
        std::complex<double> base = std::complex<double>(x, -y) / std::complex<double>(x, y);
        std::complex<double> q = std::pow(ratio / base, 4);
        CHECK(std::abs(q - c4) < 1e-12);
        CHECK(std::abs(std::abs(ratio) - 1) < 1e-12);
      }
  }

  TEST_CASE("omega of (x, y) and (-x, -y) agree") {
    ResolventBasis b = resolvent_basis({1, 8, 6, -4, -2}, 128);
    for (long x = -5; x <= 5; ++x)
      for (long y = 1; y <= 5; ++y) CHECK(omega_assoc(b, x, y) == omega_assoc(b, -x, -y));
  }

  TEST_CASE("gap lemma holds at solutions") {
    for (const auto& row : oracle::published_table()) {
      ResolventBasis b = resolvent_basis(testing::from_small(row.form), 128);
      for (auto [x, y] : row.solutions) {
        GapCheck g = gap_lemma_check(z_value(b, x, y));
        CHECK(g.holds);
        CHECK(g.distance <= g.bound8 + two_pow(-60, 128));
      }
    }
  }

  TEST_CASE("gap kernel against double precision") {
    for (double t : {0.05, 0.2, 0.5, 0.7}) {
      double want = std::abs(4 * t) / std::sqrt(2 - 2 * std::cos(4 * t));
      CHECK(gap_kernel(Real(t, 128)).to_double() == doctest::Approx(want).epsilon(1e-13));
    }
  }

  TEST_CASE("z is nonzero at (-1, 0)") {
    ResolventBasis b = resolvent_basis({1, -1, -6, 1, 1}, 128);
    ResolventSample s = z_value(b, -1, 0);
    // eta / xi = 1 would give z = 0; the constant phase above gives z = 1 - c4 instead.
    std::complex<double> c4 = -std::complex<double>(1, -0.25) / std::complex<double>(1, 0.25);
    CHECK(s.z.abs().to_double() == doctest::Approx(std::abs(1.0 - c4)).epsilon(1e-14));
    CHECK(s.z.abs().to_double() > 1.9);
  }

  TEST_CASE("rejections") {
    CHECK_THROWS_AS(resolvent_basis({1, 0, 1, 0, 2}, 128), UnsupportedBranch);
    CHECK_THROWS_AS(resolvent_basis({1, -1, -6, 1, 1}, 16), PrecisionError);
  }
}
