#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace etaq {

using BigInt = mpz_class;

// mpq_class keeps its value canonical (reduced, positive denominator) through
// arithmetic; make_rational is the only place a raw num/den pair is accepted.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(std::int64_t num, std::int64_t den);

BigInt to_bigint(std::int64_t v);
std::int64_t to_int64(const BigInt& v);  // throws std::overflow_error

// Fractional part in [0, 1).
Rational frac(const Rational& x);
BigInt floor(const Rational& x);

// "p/q" with q printed even when it is 1.
std::string to_fraction_string(const Rational& x);

// x^e for a signed integer exponent; throws std::domain_error on 0^(negative).
Rational pow(const Rational& x, std::int64_t e);

}  // namespace etaq
