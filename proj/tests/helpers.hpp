#pragma once

#include <array>
#include <random>

#include "oracles.hpp"
#include "quartic/forms.hpp"

namespace testing {

inline oracle::Coeffs coeffs(const quartic::QuarticForm& f) { return {f.a[0], f.a[1], f.a[2], f.a[3], f.a[4]}; }

inline std::array<long, 5> small(const quartic::QuarticForm& f) {
  std::array<long, 5> out{};
  for (int i = 0; i < 5; ++i) out[i] = f.a[i].get_si();
  return out;
}

inline quartic::QuarticForm from_small(const std::array<long, 5>& a) {
  return {a[0], a[1], a[2], a[3], a[4]};
}

inline quartic::QuarticForm random_form(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    quartic::QuarticForm f(d(rng), d(rng), d(rng), d(rng), d(rng));
    if (!f.is_zero()) return f;
  }
}

// Product of elementary shears and the swap (x, y) -> (-y, x).
inline quartic::UnimodularMap random_map(std::mt19937_64& rng, int steps) {
  std::uniform_int_distribution<long> k(-3, 3);
  std::uniform_int_distribution<int> kind(0, 2);
  quartic::UnimodularMap m;
  for (int i = 0; i < steps; ++i) {
    int t = kind(rng);
    if (t == 0) m = m * quartic::UnimodularMap{1, k(rng), 0, 1};
    else if (t == 1) m = m * quartic::UnimodularMap{1, 0, k(rng), 1};
    else m = m * quartic::UnimodularMap{0, -1, 1, 0};
  }
  return m;
}

// F(m x + l y, p x + q y) sampled at (x, y), evaluated directly.
inline mpz_class mapped_value(const quartic::QuarticForm& f, const quartic::UnimodularMap& m, long x, long y) {
  return f(m.m * x + m.l * y, m.p * x + m.q * y);
}

}  // namespace testing
