#pragma once

#include "etaq/numeric/rational.hpp"
#include "etaq/numeric/real.hpp"

namespace etaq::rademacher {

// Gamma(s) for s in (1/2)Z, s > 0, by exact recurrence from Gamma(1) = 1
// and Gamma(1/2) = sqrt(pi).
Real half_integer_gamma(const Rational& s, int digits);

// Modified Bessel function of the first kind,
//
//   I_nu(x) = sum_{j>=0} (x/2)^{2j+nu} / (Gamma(j+nu+1) j!),
//
// for nu in (1/2)Z with nu >= 0 and x >= 0. The series is summed until a
// term drops below 10^-(digits+5) times the running sum. Orders outside that
// set throw std::domain_error, as does x < 0.
Real bessel_i(const Rational& nu, const Real& x, int digits);

}  // namespace etaq::rademacher
