#include "etaq/frame/dedekind.hpp"

#include <numeric>
#include <stdexcept>

namespace etaq::frame {

namespace {

std::int64_t reduce_mod(std::int64_t h, std::int64_t k) {
  const std::int64_t r = h % k;
  return r < 0 ? r + k : r;
}

BigInt from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(u >> 64));
  BigInt lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

}  // namespace

Rational dedekind_sum(std::int64_t h, std::int64_t k) {
  if (k < 1) throw std::domain_error("Dedekind sum needs k >= 1");
  h = reduce_mod(h, k);
  // sum_n (n/k)((hn mod k)/k - 1/2) = [sum_n n (hn mod k)] / k^2 - (k-1)/4
  __int128 weighted = 0;
  std::int64_t residue = 0;  // h*n mod k, advanced incrementally
  for (std::int64_t n = 1; n < k; ++n) {
    residue += h;
    if (residue >= k) residue -= k;
    weighted += static_cast<__int128>(n) * residue;
  }
  const BigInt kk = to_bigint(k);
  Rational s = make_rational(from_int128(weighted), kk * kk);
  s -= make_rational(k - 1, 4);
  return s;
}

std::int64_t scaled_dedekind_sum(std::int64_t h, std::int64_t k) {
  if (k < 1) throw std::domain_error("Dedekind sum needs k >= 1");
  h = reduce_mod(h, k);
  if (std::gcd(h, k) != 1) throw std::domain_error("scaled Dedekind sum needs gcd(h, k) = 1");
  if (k == 1) return 0;

  // Euclid on (k, h) with quotients a_1..a_r; the Bezout coefficient of h
  // yields the inverse of h mod k.
  __int128 alternating = 0;
  int steps = 0;
  std::int64_t r_prev = k;
  std::int64_t r = h;
  std::int64_t t_prev = 0;
  std::int64_t t = 1;
  while (r != 0) {
    const std::int64_t a = r_prev / r;
    alternating += (steps % 2 == 0) ? a : -a;
    ++steps;
    const std::int64_t r_next = r_prev - a * r;
    const std::int64_t t_next = t_prev - a * t;
    r_prev = r;
    r = r_next;
    t_prev = t;
    t = t_next;
  }
  const std::int64_t inverse = reduce_mod(t_prev, k);
  const __int128 value = static_cast<__int128>(k) * alternating + h + inverse - (steps % 2 == 1 ? 3 * k : k);
  return static_cast<std::int64_t>(value);
}

Rational dedekind_sum_fast(std::int64_t h, std::int64_t k) {
  if (k < 1) throw std::domain_error("Dedekind sum needs k >= 1");
  if (std::gcd(reduce_mod(h, k), k) != 1) return dedekind_sum(h, k);
  return make_rational(to_bigint(scaled_dedekind_sum(h, k)), to_bigint(12) * to_bigint(k));
}

}  // namespace etaq::frame
