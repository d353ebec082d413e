#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "quartic/errors.hpp"
#include "quartic/forms.hpp"

using namespace quartic;

TEST_SUITE("core_forms") {
  TEST_CASE("invariants agree with the closed forms on random forms") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
      QuarticForm f = testing::random_form(rng, 20);
      auto c = testing::coeffs(f);
      CHECK(invariant_I(f) == oracle::I_of(c));
      CHECK(invariant_J(f) == oracle::J_of(c));
      CHECK(resultant_discriminant(f) == Rat(oracle::disc_of(c)));
    }
  }

  TEST_CASE("invariants of x^4 + y^4 and the I = 51 form") {
    InvariantTriple t = invariants({1, 0, 0, 0, 1});
    CHECK(t.I == 12);
    CHECK(t.J == 0);
    CHECK(t.D == 256);
    InvariantTriple u = invariants({1, -1, -6, 1, 1});
    CHECK(u.I == 51);
    CHECK(u.J == 0);
    CHECK(u.D == 19652);
  }

  TEST_CASE("discriminant with a0 = 0") {
    QuarticForm f(0, 1, 2, -3, 5);
    CHECK(resultant_discriminant(f) == Rat(oracle::disc_of(testing::coeffs(f))));
    CHECK(invariants(f).D == Rat(oracle::disc_of(testing::coeffs(f))));
  }

  TEST_CASE("hessian matches F_xx F_yy - F_xy^2") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 2000; ++i) {
      QuarticForm f = testing::random_form(rng, 20);
      auto want = oracle::hessian_of(testing::coeffs(f));
      auto got = hessian(f).A;
      for (int k = 0; k < 5; ++k) CHECK(got[k] == want[k]);
    }
    CHECK(hessian({1, -1, -6, 1, 1}).as_form() == QuarticForm(-153, 0, -306, 0, -153));
  }

  TEST_CASE("hessian invariants and the six J identity") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
      QuarticForm f = testing::random_form(rng, 20);
      auto c = testing::coeffs(f);
      auto h = oracle::hessian_of(c);
      Int I = oracle::I_of(c), J = oracle::J_of(c);
      CHECK(oracle::I_of(h) == 144 * I * I);
      CHECK(oracle::J_of(h) == 1728 * (2 * I * I * I - J * J));
      CHECK(six_j_identity(f) == 6 * J);
    }
  }

  TEST_CASE("sextic syzygy for J = 0") {
    std::mt19937_64 rng(14);
    for (const QuarticForm& base : {QuarticForm(1, -1, -6, 1, 1), QuarticForm(1, 0, 0, 0, 1)}) {
      for (int i = 0; i < 20; ++i) {
        QuarticForm f = apply_unimodular(base, testing::random_map(rng, 4));
        BinaryForm H = hessian(f).as_binary(), Qc = sextic_covariant(f), F = f.as_binary();
        CHECK(H * H * H * Int(16) + Qc * Qc * Int(9) == H * F * F * Int(6912 * invariant_I(f)));
      }
    }
  }

  TEST_CASE("unimodular substitution agrees with pointwise evaluation") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 300; ++i) {
      QuarticForm f = testing::random_form(rng, 20);
      UnimodularMap m = testing::random_map(rng, 5);
      QuarticForm g = apply_unimodular(f, m);
      for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) CHECK(g(Int(x), Int(y)) == testing::mapped_value(f, m, x, y));
      CHECK(invariant_I(g) == invariant_I(f));
      CHECK(invariant_J(g) == invariant_J(f));
      UnimodularMap n = testing::random_map(rng, 3);
      CHECK(apply_unimodular(g, n) == apply_unimodular(f, m * n));
      CHECK(apply_unimodular(g, m.inverse()) == f);
    }
  }

  TEST_CASE("non-unimodular maps are rejected") {
    CHECK_THROWS_AS(apply_unimodular({1, 0, 0, 0, 1}, UnimodularMap{2, 0, 0, 1}), InvalidInput);
    CHECK_FALSE(UnimodularMap{2, 0, 0, 1}.is_unimodular());
    CHECK(UnimodularMap{0, -1, 1, 0}.is_unimodular());
  }

  TEST_CASE("irreducibility against constructed factorizations") {
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int i = 0; i < 200; ++i) {
      long a = d(rng), b = d(rng), c = d(rng), e = d(rng), f = d(rng), g = d(rng);
      if (a == 0 || e == 0) continue;
      // (a x^2 + b x y + c y^2)(e x^2 + f x y + g y^2)
      QuarticForm q(a * e, a * f + b * e, a * g + b * f + c * e, b * g + c * f, c * g);
      if (invariants(q).D == 0) continue;
      CHECK_FALSE(is_irreducible(q));
    }
    CHECK(is_irreducible({1, 0, 0, 0, 1}));
    CHECK(is_irreducible({1, -1, -6, 1, 1}));
    CHECK_FALSE(is_irreducible({1, 0, 0, 0, -1}));
    CHECK_FALSE(is_irreducible({1, 0, -5, 0, 4}));
    CHECK_FALSE(is_irreducible({1, 0, 0, 0, 4}));  // (x^2 + 2xy + 2y^2)(x^2 - 2xy + 2y^2)
  }

  TEST_CASE("real root counts") {
    CHECK(real_root_count({1, 0, -5, 0, 4}) == 4);
    CHECK(real_root_count({1, 0, 0, 0, 1}) == 0);
    CHECK(real_root_count({1, 0, 0, 0, -1}) == 2);
    CHECK(real_root_count({0, 1, 0, -1, 0}) == 4);  // x y (x - y)(x + y)
    for (const auto& row : oracle::published_table()) CHECK(real_root_count(testing::from_small(row.form)) == 4);
  }

  TEST_CASE("form literal parsing") {
    CHECK(QuarticForm::parse("[1,-1,-6,1,1]") == QuarticForm(1, -1, -6, 1, 1));
    CHECK(QuarticForm::parse(" 1, 2 ,3,4,5 ") == QuarticForm(1, 2, 3, 4, 5));
    CHECK(QuarticForm::parse("[1,-1,-6,1,1]").to_string() == "[1,-1,-6,1,1]");
    CHECK_THROWS_AS(QuarticForm::parse("[1,2,3,4]"), InvalidInput);
    CHECK_THROWS_AS(QuarticForm::parse("[1,2,x,4,5]"), InvalidInput);
  }

  TEST_CASE("bareiss determinant") {
    CHECK(bareiss_determinant({{2, 0}, {0, 3}}) == 6);
    CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  }
}

TEST_SUITE("poly") {
  TEST_CASE("sturm root counts and isolation") {
    RationalPoly p{4, 0, -5, 0, 1};  // (x^2 - 1)(x^2 - 4)
    CHECK(count_real_roots(p) == 4);
    auto roots = real_roots(p, 60);
    REQUIRE(roots.size() == 4);
    double want[4] = {-2, -1, 1, 2};
    for (int i = 0; i < 4; ++i) CHECK(roots[i].get_d() == doctest::Approx(want[i]).epsilon(1e-12));
    CHECK(count_real_roots(RationalPoly{1, 0, 1}) == 0);
  }

  TEST_CASE("gcd and squarefree part") {
    RationalPoly a = RationalPoly{-1, 1} * RationalPoly{-1, 1} * RationalPoly{2, 1};
    CHECK(squarefree_part(a) == RationalPoly{-1, 1} * RationalPoly{2, 1});
    CHECK(gcd(a, RationalPoly{-1, 1}) == RationalPoly{-1, 1});
    auto [q, r] = divmod(a, RationalPoly{2, 1});
    CHECK(r.is_zero());
    CHECK(q * RationalPoly{2, 1} == a);
  }

  TEST_CASE("complex roots of x^4 + 1") {
    auto roots = complex_roots(RationalPoly{1, 0, 0, 0, 1}, 128);
    REQUIRE(roots.size() == 4);
    for (const auto& z : roots) {
      Complex v = pow(z, 4) + Complex(Real(1L, 128));
      CHECK(v.abs().to_double() < 1e-30);
    }
  }

  TEST_CASE("binary form homogenize and substitute") {
    BinaryForm b = BinaryForm::homogenize(RationalPoly{8, -5}, 1);
    CHECK(b == BinaryForm(1, {8, -5}));
    BinaryForm f(2, {1, 0, 1});
    CHECK(f.substitute(1, 1, 0, 1) == BinaryForm(2, {1, 2, 2}));
  }
}
