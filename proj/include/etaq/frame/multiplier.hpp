#pragma once

#include <cstdint>

#include "etaq/numeric/rational.hpp"
#include "etaq/numeric/real.hpp"

namespace etaq::frame {

// Integer matrix [[a, b], [c, d]] with determinant 1.
class MatrixSL2 {
 public:
  // Throws std::invalid_argument unless a*d - b*c == 1.
  MatrixSL2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t c() const noexcept { return c_; }
  std::int64_t d() const noexcept { return d_; }

  MatrixSL2 operator-() const { return MatrixSL2(-a_, -b_, -c_, -d_); }
  friend bool operator==(const MatrixSL2&, const MatrixSL2&) = default;

 private:
  std::int64_t a_, b_, c_, d_;
};

// Exact exponent theta of the eta multiplier, eps(M) = exp(pi i theta),
// reduced to [0, 2). The convention is the one for which
//
//   eta(M tau) = eps(M) * sqrt(c tau + d) * eta(tau)
//
// holds with the principal square root:
//
//   c = 0, d =  1:  theta =  b/12
//   c = 0, d = -1:  theta = -b/12 - 1/2
//   c > 0:          theta = (a+d)/(12c) - s(d, c) - 1/4
//   c < 0:          theta = (a+d)/(12c) - s(-d, -c) + 1/4
//
// The c < 0 and d = -1 rows carry the extra factor +-i that
// sqrt(c tau + d) = -+i sqrt(-(c tau + d)) introduces for the principal
// branch; the other rows are Dedekind's classical formula.
Rational multiplier_phase(const MatrixSL2& m);

// eps(M) as a unit complex number at the given precision.
Complex multiplier_epsilon(const MatrixSL2& m, int digits = kDefaultDigits);

}  // namespace etaq::frame
