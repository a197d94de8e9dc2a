#pragma once

#include <cstdint>
#include <vector>

#include "etaq/frame/frame_shape.hpp"
#include "etaq/numeric/rational.hpp"

namespace etaq::frame {

// Exact constants of an eta-quotient.
//
//   n0     = -(1/24) sum_m m delta_m
//   c1     = -(1/2)  sum_m delta_m                   (a half-integer)
//   c2(k)^2 = prod_m (gcd(m,k)/m)^{delta_m}
//   c3(k)  = -sum_m delta_m gcd(m,k)^2 / m
//   g(k)   = min_m gcd(m,k)^2/m - c3(k)/24
//
// The k-dependent tables cover one period k = 1..lcm(M); the *_at accessors
// extend them periodically to every k >= 1. c2 itself is irrational in
// general, so only its exact square is kept.
struct DerivedConstants {
  Rational n0;
  Rational c1;
  std::int64_t period = 1;
  std::vector<Rational> c2_squared;  // index k-1
  std::vector<Rational> c3;          // index k-1
  std::vector<Rational> g;           // index k-1

  const Rational& c2_squared_at(std::int64_t k) const { return c2_squared[residue(k)]; }
  const Rational& c3_at(std::int64_t k) const { return c3[residue(k)]; }
  const Rational& g_at(std::int64_t k) const { return g[residue(k)]; }

 private:
  std::size_t residue(std::int64_t k) const;
};

DerivedConstants derive_constants(const FrameShape& shape);

// Hypotheses of the convergent series: c1 > 0 and g(k) >= 0 for all k.
// g has period lcm(M), so one period is checked.
struct HypothesisReport {
  bool c1_positive = false;
  bool g_nonnegative = false;
  bool satisfied = false;
  Rational min_g;
  Rational c1;
};

HypothesisReport check_hypotheses(const FrameShape& shape);
HypothesisReport check_hypotheses(const DerivedConstants& constants);

}  // namespace etaq::frame
