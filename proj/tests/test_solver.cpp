#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "quartic/errors.hpp"
#include "quartic/thue_solver.hpp"

using namespace quartic;

namespace {

std::set<std::pair<long, long>> pairs(const std::vector<SolutionRecord>& v) {
  std::set<std::pair<long, long>> out;
  for (const auto& s : v) out.insert({s.x.get_si(), s.y.get_si()});
  return out;
}

std::set<std::pair<long, long>> pairs(const std::vector<oracle::Hit>& v) {
  std::set<std::pair<long, long>> out;
  for (const auto& s : v) out.insert({s.x, s.y});
  return out;
}

std::pair<long, long> canonical(long x, long y) {
  if (y < 0 || (y == 0 && x < 0)) return {-x, -y};
  return {x, y};
}

}  // namespace

TEST_SUITE("thue_solver") {
  TEST_CASE("published forms match brute force at bound 100") {
    for (const auto& row : oracle::published_table()) {
      QuarticForm f = testing::from_small(row.form);
      auto got = solve_equation(f, 1, 100);
      auto want = oracle::brute_solve(row.form, 1, 100);
      CHECK(pairs(got) == pairs(want));
      std::set<std::pair<long, long>> published;
      for (auto [x, y] : row.solutions) published.insert(canonical(x, y));
      CHECK(pairs(got) == published);
      for (const auto& s : got) {
        CHECK(s.value == f(s.x, s.y));
        CHECK(s.primitive);
      }
    }
  }

  TEST_CASE("random forms and right-hand sides match brute force") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> hd(1, 30);
    for (int i = 0; i < 60; ++i) {
      QuarticForm f = testing::random_form(rng, 6);
      if (invariants(f).D == 0) continue;
      long h = hd(rng);
      auto got = solve_equation(f, h, 40);
      CHECK(pairs(got) == pairs(oracle::brute_solve(testing::small(f), h, 40)));
      CHECK(std::is_sorted(got.begin(), got.end(), canonical_less));
    }
  }

  TEST_CASE("inequality solutions are coprime and within h") {
    QuarticForm f(1, -1, -6, 1, 1);
    auto sols = solve_inequality(f, 5, 30);
    CHECK_FALSE(sols.empty());
    for (const auto& s : sols) {
      Int g;
      mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.y.get_mpz_t());
      CHECK(g == 1);
      CHECK(abs(s.value) <= 5);
      CHECK(s.value != 0);
      REQUIRE(s.y_threshold_met);
      CHECK(*s.y_threshold_met == y_threshold(s.y, 5, 51));
    }
    long brute = 0;
    for (long y = 0; y <= 30; ++y)
      for (long x = -30; x <= 30; ++x) {
        if (y == 0 && x <= 0) continue;
        if (std::gcd(x, y) != 1) continue;
        long v = oracle::eval(testing::small(f), x, y);
        if (v != 0 && std::labs(v) <= 5) ++brute;
      }
    CHECK(static_cast<long>(sols.size()) == brute);
  }

  TEST_CASE("y threshold is exact at the boundary") {
    // 3 I y^8 >= h^6 with I = 51, h = 1: every y >= 1 qualifies.
    CHECK(y_threshold(1, 1, 51));
    // h = 8: h^6 = 262144, 153 y^8 >= 262144 needs y >= 3 (y = 2 gives 39168).
    CHECK_FALSE(y_threshold(2, 8, 51));
    CHECK(y_threshold(3, 8, 51));
    for (long y = 1; y <= 6; ++y)
      for (long h = 1; h <= 20; ++h)
        CHECK(y_threshold(y, h, 51) == (153.0 * std::pow(y, 8) >= std::pow(h, 6)));
  }

  TEST_CASE("omega association on the I = 51 form") {
    QuarticForm f(1, -1, -6, 1, 1);
    auto sols = solve_equation(f, 1, 100);
    populate_omegas(f, sols);
    // eta / xi = (x - i y) / (x + i y) for this form.
    for (const auto& s : sols) {
      REQUIRE(s.omega_index);
      std::complex<double> w(s.x.get_d(), -s.y.get_d());
      w /= std::complex<double>(s.x.get_d(), s.y.get_d());
      CHECK(*s.omega_index == oracle::nearest_omega(w));
    }
    Census c = census(sols);
    CHECK(c.counts == std::array<long, 4>{1, 1, 1, 1});
    CHECK(c.total == 4);
    CHECK(c.within_bounds);
  }

  TEST_CASE("census requires omegas") {
    std::vector<SolutionRecord> v(1);
    CHECK_THROWS_AS(census(v), IncompleteInput);
  }

  TEST_CASE("census flags more than three per omega") {
    std::vector<SolutionRecord> v(4);
    for (auto& s : v) s.omega_index = 2;
    Census c = census(v);
    CHECK_FALSE(c.within_bounds);
  }

  TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(solve_equation({1, -1, -6, 1, 1}, 0, 10), InvalidInput);
    CHECK_THROWS_AS(solve_equation({1, -1, -6, 1, 1}, 1, 0), InvalidInput);
    CHECK_THROWS_AS(solve_equation({0, 0, 0, 0, 0}, 1, 10), Error);
  }
}
