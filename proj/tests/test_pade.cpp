#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "quartic/errors.hpp"
#include "quartic/pade.hpp"

using namespace quartic;

namespace {

std::vector<Rat> coeffs(const RationalPoly& p) { return p.coefficients(); }

}  // namespace

TEST_SUITE("pade_hypergeometric") {
  TEST_CASE("scaled pairs and quartic identities match the published lists") {
    for (const auto& row : oracle::published_pade()) {
      PadePair p = scaled_pair(row.r);
      CHECK(coeffs(p.A) == oracle::to_q(row.A));
      CHECK(coeffs(p.B) == oracle::to_q(row.B));
      CHECK(coeffs(quartic_identity(row.r)) == oracle::to_q(row.F));
    }
  }

  TEST_CASE("published lists satisfy the quartic identity on their own") {
    for (const auto& row : oracle::published_pade()) {
      auto diff = oracle::quartic_difference(oracle::to_q(row.A), oracle::to_q(row.B));
      std::size_t shift = static_cast<std::size_t>(2 * row.r + 1);
      for (std::size_t k = 0; k < shift; ++k) CHECK(diff[k] == 0);
      std::vector<Rat> F(diff.begin() + static_cast<long>(shift), diff.end());
      while (!F.empty() && F.back() == 0) F.pop_back();
      CHECK(F == oracle::to_q(row.F));
    }
  }

  TEST_CASE("contact orders 2r + 1 - g") {
    for (int r = 1; r <= 8; ++r)
      for (int g = 0; g <= 1; ++g) {
        PadePair p = pade_pair(r, g);
        int want = 2 * r + 1 - g;
        CHECK(contact_order(p, want + 4) == want);
        CHECK(oracle::contact(coeffs(p.A), coeffs(p.B), want + 4) == want);
      }
  }

  TEST_CASE("divisibility of the quartic identity up to r = 8") {
    for (int r = 1; r <= 8; ++r) {
      PadePair p = scaled_pair(r);
      auto diff = oracle::quartic_difference(coeffs(p.A), coeffs(p.B));
      for (int k = 0; k <= 2 * r; ++k) CHECK(diff[static_cast<std::size_t>(k)] == 0);
      CHECK_NOTHROW(quartic_identity(r));
    }
  }

  TEST_CASE("scaled pairs are coprime integers with positive constant term") {
    for (int r = 1; r <= 8; ++r) {
      PadePair p = scaled_pair(r);
      CHECK(p.A.has_integer_coefficients());
      CHECK(p.B.has_integer_coefficients());
      CHECK(p.A.coeff(0) > 0);
      Int g = 0;
      for (const auto& c : p.A.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      for (const auto& c : p.B.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      CHECK(g == 1);
      PadePair raw = pade_pair(r, 0);
      CHECK(raw.A * scaled_pair_factor(r) == p.A);
    }
    CHECK(scaled_pair_factor(1) == 4);
    CHECK(scaled_pair_factor(2) == Rat(32, 3));
    CHECK(scaled_pair_factor(5) == Rat(8192, 21));
  }

  TEST_CASE("quarter root series") {
    CHECK(quartic::quarter_root_series(12) == oracle::quarter_root(12));
  }

  TEST_CASE("fractional binomials") {
    CHECK(frac_binomial(Rat(1, 4), 2) == Rat(-3, 32));
    CHECK(frac_binomial(5, 2) == 10);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(40, 20) == Int("137846528820"));
  }

  TEST_CASE("combination identities, r = 5 reported as computed") {
    auto ids = combination_identities();
    REQUIRE(ids.size() == 9);
    for (const auto& id : ids) {
      if (id.name == "B4* A5* - A4* B5*") {
        CHECK_FALSE(id.matches);
        CHECK(id.computed == BinaryForm::from_terms(9, {{9, -14586}}));
      } else {
        CHECK_MESSAGE(id.matches, id.name);
      }
    }
  }

  TEST_CASE("remainder and A bounds on sampled points") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int r = 1; r <= 4; ++r)
      for (int g = 0; g <= 1; ++g)
        for (int i = 0; i < 50; ++i) {
          double rad = 0.98 * std::sqrt(u(rng)), th = 2 * M_PI * u(rng);
          Complex z(Real(rad * std::cos(th), 128), Real(rad * std::sin(th), 128));
          CHECK(remainder_bound_check(r, g, z).holds);
          double rad2 = std::sqrt(u(rng)), th2 = 2 * M_PI * u(rng);
          Complex w(Real(1 - rad2 * std::cos(th2), 128), Real(-rad2 * std::sin(th2), 128));
          CHECK(a_bound_check(r, g, w));
        }
    CHECK_THROWS_AS(remainder_bound_check(1, 0, Complex(Real(1L, 128))), DomainError);
    CHECK_THROWS_AS(a_bound_check(1, 0, Complex(Real(3L, 128))), DomainError);
  }

  TEST_CASE("wronskian is nonzero at sample rationals") {
    for (int r = 1; r <= 6; ++r)
      for (int h = 0; h <= 1; ++h)
        for (Rat z : {Rat(1, 3), Rat(-2, 7), Rat(5, 4)}) CHECK(wronskian_nonzero(r, h, z));
  }

  TEST_CASE("pade pair rejects bad indices") {
    CHECK_THROWS_AS(pade_pair(0, 0), InvalidInput);
    CHECK_THROWS_AS(pade_pair(1, 2), InvalidInput);
  }
}

TEST_SUITE("thue_recurrence") {
  TEST_CASE("x^4 + 1") {
    ThueRecurrenceState st = thue_recurrence(RationalPoly{1, 0, 0, 0, 1}, 3, 256);
    CHECK(st.kernel_det == 0);
    CHECK(st.U == RationalPoly{0, 1});
    CHECK(st.h_const == Rat(15, 4));
    CHECK(st.ch2_holds);
    Real tol = two_pow(-64, 256);
    REQUIRE(st.contact.size() == 3);
    for (const auto& c : st.contact) {
      CHECK(c.order == 2 * c.r + 1);
      CHECK(c.max_residual < tol);
    }
  }

  TEST_CASE("dehomogenized I = 51 form") {
    ThueRecurrenceState st = thue_recurrence(RationalPoly{1, 1, -6, -1, 1}, 3, 256);
    CHECK(st.kernel_det == 0);
    CHECK(st.U == RationalPoly{1, 0, 1});
    CHECK(st.h_const == -15);
    Real tol = two_pow(-64, 256);
    for (const auto& c : st.contact) {
      CHECK(c.order == 2 * c.r + 1);
      CHECK(c.max_residual < tol);
    }
  }

  TEST_CASE("constant Q0 loses contact from r = 2 on") {
    ThueRecurrenceState st = thue_recurrence(RationalPoly{1, 1, -6, -1, 1}, 3, 256, true);
    REQUIRE(st.contact.size() == 3);
    CHECK(st.contact[0].order == 3);
    CHECK(st.contact[1].order < 5);
    CHECK(st.contact[2].order < 7);
  }

  TEST_CASE("J != 0 has no kernel") {
    // x^4 + x^2 + 2 has J = 142; the kernel determinant is 4J.
    RationalPoly p{2, 0, 1, 0, 1};
    oracle::Coeffs c{1, 0, 1, 0, 2};
    Int J = oracle::J_of(c);
    try {
      thue_recurrence(p, 2, 128);
      FAIL("expected UnsupportedBranch");
    } catch (const UnsupportedBranch& e) {
      CHECK(std::string(e.what()).find(Int(4 * J).get_str()) != std::string::npos);
    }
  }
}
