#pragma once

#include <cstdint>

#include "etaq/frame/multiplier.hpp"
#include "etaq/numeric/real.hpp"

namespace etaq::rademacher {

// Smallest T with |q|^T < 10^-(digits+5), q = exp(2 pi i tau).
std::int64_t eta_truncation(const Complex& tau, int digits);

// eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n), evaluated through the
// pentagonal expansion q^{1/24} sum_j (-1)^j q^{j(3j-1)/2} with every
// exponent up to the truncation T (O(sqrt T) terms). Throws
// std::domain_error unless Im tau > 0.
Complex eta_numeric(const Complex& tau, int digits = kDefaultDigits);
Complex eta_numeric(const Complex& tau, int digits, std::int64_t truncation);

// The same function from the literal truncated product (O(T) factors).
Complex eta_product(const Complex& tau, int digits, std::int64_t truncation);

// |eta(M tau) - eps(M) sqrt(c tau + d) eta(tau)| with the principal root.
Real transform_check(const frame::MatrixSL2& m, const Complex& tau, int digits = kDefaultDigits);

}  // namespace etaq::rademacher
