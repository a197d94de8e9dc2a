#include "etaq/frame/multiplier.hpp"

#include <stdexcept>

#include "etaq/frame/dedekind.hpp"

namespace etaq::frame {

MatrixSL2::MatrixSL2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
  const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1) throw std::invalid_argument("matrix is not in SL2(Z): determinant != 1");
}

namespace {

Rational reduce_mod_two(const Rational& theta) { return frac(theta / 2) * 2; }

}  // namespace

Rational multiplier_phase(const MatrixSL2& m) {
  Rational theta;
  if (m.c() == 0) {
    // det = a d = 1 forces a = d = +-1.
    theta = make_rational(to_bigint(m.b()), BigInt(12));
    if (m.d() == -1) theta = -theta - Rational(1, 2);
  } else if (m.c() > 0) {
    theta = make_rational(to_bigint(m.a()) + to_bigint(m.d()), to_bigint(m.c()) * 12) - dedekind_sum_fast(m.d(), m.c()) - Rational(1, 4);
  } else {
    theta = make_rational(to_bigint(m.a()) + to_bigint(m.d()), to_bigint(m.c()) * 12) - dedekind_sum_fast(-m.d(), -m.c()) + Rational(1, 4);
  }
  return reduce_mod_two(theta);
}

Complex multiplier_epsilon(const MatrixSL2& m, int digits) {
  return unit_phase(Real(multiplier_phase(m), digits) * Real::pi(digits));
}

}  // namespace etaq::frame
