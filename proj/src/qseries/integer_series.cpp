#include "etaq/qseries/integer_series.hpp"

#include <stdexcept>

namespace etaq::qseries {

namespace {

// Indices of nonzero coefficients; Euler-type series are very sparse.
std::vector<std::int64_t> support(const IntegerSeries& a) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= a.truncation(); ++i) {
    if (sgn(a[i]) != 0) out.push_back(i);
  }
  return out;
}

}  // namespace

IntegerSeries::IntegerSeries(std::int64_t truncation) {
  if (truncation < 0) throw std::invalid_argument("series truncation must be >= 0");
  coefficients_.assign(static_cast<std::size_t>(truncation) + 1, BigInt(0));
}

IntegerSeries::IntegerSeries(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

IntegerSeries IntegerSeries::one(std::int64_t truncation) {
  IntegerSeries s(truncation);
  s[0] = 1;
  return s;
}

IntegerSeries euler_series(std::int64_t truncation) {
  IntegerSeries s(truncation);
  // j and -j give the two pentagonal exponents j(3j-1)/2 and j(3j+1)/2.
  s[0] = 1;
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t lower = j * (3 * j - 1) / 2;
    if (lower > truncation) break;
    const int sign = (j % 2 == 0) ? 1 : -1;
    s[lower] += sign;
    const std::int64_t upper = j * (3 * j + 1) / 2;
    if (upper <= truncation) s[upper] += sign;
  }
  return s;
}

IntegerSeries multiply(const IntegerSeries& a, const IntegerSeries& b) {
  if (a.truncation() != b.truncation()) throw std::invalid_argument("series truncations differ");
  const std::int64_t t = a.truncation();
  IntegerSeries out(t);
  // Schoolbook, iterating over the sparser operand's support.
  const auto sa = support(a);
  const auto sb = support(b);
  const bool a_sparser = sa.size() <= sb.size();
  const IntegerSeries& sparse = a_sparser ? a : b;
  const IntegerSeries& dense = a_sparser ? b : a;
  for (const std::int64_t i : a_sparser ? sa : sb) {
    const BigInt& ai = sparse[i];
    for (std::int64_t j = 0; i + j <= t; ++j) {
      if (sgn(dense[j]) != 0) mpz_addmul(out[i + j].get_mpz_t(), ai.get_mpz_t(), dense[j].get_mpz_t());
    }
  }
  return out;
}

IntegerSeries invert(const IntegerSeries& a) {
  const BigInt& lead = a[0];
  if (lead != 1 && lead != -1) {
    throw std::domain_error("only series with constant term +1 or -1 are invertible over Z");
  }
  const std::int64_t t = a.truncation();
  const auto sa = support(a);
  IntegerSeries b(t);
  b[0] = lead;  // 1/(+-1) = +-1
  BigInt acc;
  for (std::int64_t n = 1; n <= t; ++n) {
    acc = 0;
    for (const std::int64_t i : sa) {
      if (i == 0) continue;
      if (i > n) break;
      mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[n - i].get_mpz_t());
    }
    // a_0 b_n + sum_{i>=1} a_i b_{n-i} = 0
    b[n] = -acc * lead;
  }
  return b;
}

IntegerSeries pow(const IntegerSeries& a, std::int64_t e) {
  if (e < 0) return pow(invert(a), -e);
  IntegerSeries result = IntegerSeries::one(a.truncation());
  IntegerSeries base = a;
  auto n = static_cast<std::uint64_t>(e);
  while (n != 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n != 0) base = multiply(base, base);
  }
  return result;
}

IntegerSeries dilate(const IntegerSeries& a, std::int64_t m, std::int64_t truncation) {
  if (m < 1) throw std::invalid_argument("dilation factor must be >= 1");
  IntegerSeries out(truncation);
  for (std::int64_t i = 0; i <= a.truncation() && i * m <= truncation; ++i) out[i * m] = a[i];
  return out;
}

}  // namespace etaq::qseries
