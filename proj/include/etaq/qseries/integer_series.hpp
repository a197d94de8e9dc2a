#pragma once

#include <cstdint>
#include <vector>

#include "etaq/numeric/rational.hpp"

namespace etaq::qseries {

// Power series a_0 + a_1 q + ... + a_T q^T with arbitrary-size integer
// coefficients, understood modulo q^{T+1}. Storage is dense.
class IntegerSeries {
 public:
  // The zero series truncated at T.
  explicit IntegerSeries(std::int64_t truncation);
  // Coefficients a_0..a_T; T = coefficients.size() - 1. Must be nonempty.
  explicit IntegerSeries(std::vector<BigInt> coefficients);

  // 1 + O(q^{T+1})
  static IntegerSeries one(std::int64_t truncation);

  std::int64_t truncation() const noexcept { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  const BigInt& operator[](std::int64_t i) const { return coefficients_[static_cast<std::size_t>(i)]; }
  BigInt& operator[](std::int64_t i) { return coefficients_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

// prod_{n>=1} (1 - q^n) mod q^{T+1}, from the pentagonal number theorem:
// coefficient (-1)^j at every exponent j(3j-1)/2, j in Z.
IntegerSeries euler_series(std::int64_t truncation);

// Product mod q^{T+1}. Both operands must share the truncation T.
IntegerSeries multiply(const IntegerSeries& a, const IntegerSeries& b);

// Multiplicative inverse; the constant term must be +1 or -1 (anything else
// leaves Z[[q]]), otherwise std::domain_error.
IntegerSeries invert(const IntegerSeries& a);

// a^e for any integer e; e < 0 inverts first. a^0 is 1.
IntegerSeries pow(const IntegerSeries& a, std::int64_t e);

// Substitution q -> q^m, truncated at `truncation`: coefficient i of `a`
// moves to exponent m*i and is dropped if m*i > truncation. Exponents of the
// result above m*T(a) are zero, so to get an exact result mod q^{T'+1} the
// input needs T(a) >= floor(T'/m).
IntegerSeries dilate(const IntegerSeries& a, std::int64_t m, std::int64_t truncation);

}  // namespace etaq::qseries
