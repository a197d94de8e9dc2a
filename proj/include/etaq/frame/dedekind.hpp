#pragma once

#include <cstdint>

#include "etaq/numeric/rational.hpp"

namespace etaq::frame {

// s(h, k) = sum_{n=1}^{k-1} (n/k) (hn/k - floor(hn/k) - 1/2), evaluated term
// by term in exact integer arithmetic. O(k). h is reduced mod k (negative h
// allowed); k = 1 gives the empty sum 0. Throws std::domain_error for k < 1.
Rational dedekind_sum(std::int64_t h, std::int64_t k);

// The integer 12 k s(h, k) for gcd(h, k) = 1, in O(log k) machine
// arithmetic. With a_1..a_r the partial quotients of k/h (0 < h < k) and
// h' the inverse of h mod k,
//
//   12 k s(h, k) = k (a_1 - a_2 + ... + (-1)^{r+1} a_r) + h + h' - (3k if r is odd, else k),
//
// which follows from iterating the reciprocity law. Throws std::domain_error
// for k < 1 or gcd(h, k) > 1.
std::int64_t scaled_dedekind_sum(std::int64_t h, std::int64_t k);

// s(h, k) via scaled_dedekind_sum when gcd(h, k) = 1. The closed form only
// holds for coprime arguments; otherwise this falls back to the defining sum.
Rational dedekind_sum_fast(std::int64_t h, std::int64_t k);

}  // namespace etaq::frame
