#include "etaq/numeric/rational.hpp"

#include <stdexcept>

namespace etaq {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(to_bigint(num), to_bigint(den));
}

BigInt to_bigint(std::int64_t v) {
  // mpz_class(long) is enough on LP64; go through the string path otherwise.
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    return BigInt(static_cast<long>(v));
  } else {
    return BigInt(std::to_string(v));
  }
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(v.get_si());
}

BigInt floor(const Rational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& x) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return make_rational(r, x.get_den());
}

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational pow(const Rational& x, std::int64_t e) {
  if (e < 0) {
    if (x == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / x, -e);
  }
  Rational result(1);
  Rational base = x;
  auto n = static_cast<std::uint64_t>(e);
  while (n != 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return result;
}

}  // namespace etaq
