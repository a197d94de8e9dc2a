#include <doctest.h>

#include <stdexcept>

#include "etaq/error.hpp"
#include "etaq/frame/constants.hpp"
#include "etaq/frame/multiplier.hpp"
#include "etaq/qseries/exact_coefficients.hpp"
#include "etaq/rademacher/asymptotics.hpp"
#include "etaq/rademacher/bessel.hpp"
#include "etaq/rademacher/eta.hpp"
#include "etaq/rademacher/series.hpp"
#include "oracles.hpp"

using namespace etaq;
using namespace etaq::rademacher;

namespace {

Rational q(std::int64_t p, std::int64_t d) { return make_rational(p, d); }

Real min(const Real& a, const Real& b) { return b < a ? b : a; }

Real relative_gap(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

Complex tau(double re, double im, int digits) { return Complex(Real(re, digits), Real(im, digits)); }

const frame::FrameShape kPartitions(frame::FrameShape::Entries{{1, -1}});

}  // namespace

TEST_CASE("gamma at half-integers") {
  const int digits = 50;
  const Real tol = frame::vanishing_tolerance(digits);
  const Real sqrt_pi = sqrt(Real::pi(digits));
  CHECK(abs(half_integer_gamma(1, digits) - Real(1L, digits)) < tol);
  CHECK(abs(half_integer_gamma(5, digits) - Real(24L, digits)) < tol);
  CHECK(abs(half_integer_gamma(q(1, 2), digits) - sqrt_pi) < tol);
  CHECK(abs(half_integer_gamma(q(7, 2), digits) - sqrt_pi * Real(Rational(q(15, 8)), digits)) < tol);
  CHECK_THROWS_AS(half_integer_gamma(q(1, 3), digits), std::domain_error);
  CHECK_THROWS_AS(half_integer_gamma(0, digits), std::domain_error);
}

TEST_CASE("bessel examples") {
  const int digits = 50;
  const Real tol = power_of_ten(-38, digits);
  CHECK(abs(bessel_i(q(3, 2), Real(1L, digits), digits) -
            Real::parse("0.2935253263474797997886288580631092360156", digits)) < tol);
  CHECK(abs(bessel_i(q(3, 2), Real(2L, digits), digits) -
            Real::parse("1.099473188633109675513528489721211781485", digits)) < tol);
  CHECK(bessel_i(2, Real(digits), digits).is_zero());
  CHECK(bessel_i(0, Real(digits), digits) == 1.0);
  CHECK_THROWS_AS(bessel_i(-1, Real(1L, digits), digits), std::domain_error);
  CHECK_THROWS_AS(bessel_i(q(1, 3), Real(1L, digits), digits), std::domain_error);
  CHECK_THROWS_AS(bessel_i(1, Real(-1L, digits), digits), std::domain_error);
}

TEST_CASE("bessel closed form and recurrence at two precisions") {
  for (const int digits : {50, 100}) {
    CAPTURE(digits);
    const Real tol = frame::vanishing_tolerance(digits);
    for (const char* xs : {"0.5", "1", "5", "20"}) {
      CAPTURE(xs);
      const Real x = Real::parse(xs, digits);
      const Real closed =
          sqrt(Real(2L, digits) / (Real::pi(digits) * x)) * (cosh(x) - sinh(x) / x);
      CHECK(relative_gap(bessel_i(q(3, 2), x, digits), closed) < tol);
      for (const Rational& nu : {q(3, 2), Rational(2), q(5, 2), Rational(3)}) {
        const Real lhs = bessel_i(nu - 1, x, digits) - bessel_i(nu + 1, x, digits);
        const Real rhs = Real(Rational(nu * 2), digits) / x * bessel_i(nu, x, digits);
        CHECK(relative_gap(lhs, rhs) < tol);
      }
    }
  }
}

TEST_CASE("partial sum examples") {
  CHECK(abs(partial_sum(kPartitions, 5, 100) - Real(7L, 50)) < 1e-3);
  CHECK(abs(partial_sum(frame::FrameShape(frame::FrameShape::Entries{{2, -1}}), 4, 100) - Real(2L, 50)) < 1e-2);
  // The single k = 1 term at n = 1 is 1.13355844728588...
  CHECK(abs(partial_sum(kPartitions, 1, 1) - Real::parse("1.13355844728588067459824093346", 50)) < 1e-25);
  CHECK(abs(partial_sum(kPartitions, 1, 2) - Real(1L, 50)) < 0.01);
}

TEST_CASE("term table invariants") {
  const frame::FrameShape shape({{1, -1}, {22, -1}});
  const RademacherTermTable table = term_table(shape, 7, 60);
  const frame::DerivedConstants c = frame::derive_constants(shape);
  REQUIRE(table.terms.size() == 60);
  CHECK(table.guaranteed);
  for (std::int64_t k = 1; k <= 60; ++k) {
    if (c.c3_at(k) <= 0) CHECK(table.terms[static_cast<std::size_t>(k - 1)].is_zero());
  }
  const auto sums = table.partial_sums();
  CHECK(sums.back() == table.partial_sum(60));
  CHECK(sums[9] == table.partial_sum(10));
  CHECK(table.partial_sum(0).is_zero());
}

TEST_CASE("the k = 2 term carries the sign (-1)^n") {
  const frame::DerivedConstants c = frame::derive_constants(kPartitions);
  CHECK(rademacher_term(kPartitions, c, 3, 2).sign() < 0);
  CHECK(rademacher_term(kPartitions, c, 4, 2).sign() > 0);
}

TEST_CASE("terms with c3(k) <= 0 are zero") {
  // eta(tau) / eta(2 tau)^2 has c3(k) = 0 for every odd k.
  const frame::FrameShape shape({{1, 1}, {2, -2}});
  const frame::DerivedConstants c = frame::derive_constants(shape);
  REQUIRE(c.c3_at(1) == 0);
  CHECK(rademacher_term(shape, c, 5, 1).is_zero());
  CHECK(rademacher_term(shape, c, 5, 3).is_zero());
}

TEST_CASE("domain errors") {
  const frame::DerivedConstants c = frame::derive_constants(kPartitions);
  CHECK_THROWS_AS(rademacher_term(kPartitions, c, 0, 1), std::domain_error);
  CHECK_THROWS_AS(rademacher_term(kPartitions, c, 3, 0), std::domain_error);
  CHECK_THROWS_AS(partial_sum(kPartitions, 0, 5), std::domain_error);
  CHECK_THROWS_AS(partial_sum(kPartitions, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum(frame::FrameShape(frame::FrameShape::Entries{{1, 2}}), 3, 5), HypothesisError);
  EvaluationOptions forced;
  forced.force = true;
  CHECK_THROWS_AS(partial_sum(frame::FrameShape(frame::FrameShape::Entries{{1, 2}}), 3, 5, forced), HypothesisError);
  CHECK_THROWS_AS(partial_sum(frame::FrameShape(frame::FrameShape::Entries{{1, -30}}), 3, 5), HypothesisError);
  CHECK_NOTHROW(partial_sum(frame::FrameShape(frame::FrameShape::Entries{{1, -30}}), 3, 5, forced));
  CHECK_FALSE(term_table(frame::FrameShape(frame::FrameShape::Entries{{1, -30}}), 3, 5, forced).guaranteed);
}

TEST_CASE("estimate_coefficient examples") {
  CHECK(estimate_coefficient(kPartitions, 20, 100) == 627);
  const frame::FrameShape shape({{1, -3}, {4, 1}});
  CHECK(estimate_coefficient(shape, 3, 5000) == qseries::exact_coefficients(shape, 3)[3]);
  CHECK_THROWS_AS(estimate_coefficient(kPartitions, 1, 0), NotConverged);
  try {
    estimate_coefficient(kPartitions, 1, 0);
  } catch (const NotConverged& e) {
    CHECK(e.cap() == 0);
  }
}

TEST_CASE("adjacent agreeing partial sums do not stop the estimate early") {
  // d(34, 2) = 298.09 and d(34, 3) = 298.01 for 1/eta(2 tau), yet d(34) = p(17) = 297.
  CHECK(estimate_coefficient(frame::FrameShape(frame::FrameShape::Entries{{2, -1}}), 34, 5000) == 297);
  CHECK(estimate_coefficient(frame::FrameShape(frame::FrameShape::Entries{{1, -2}, {11, -2}}), 39, 5000) == 7673760);
}

TEST_CASE("rounding needs enough working digits") {
  EvaluationOptions narrow;
  narrow.digits = 20;
  CHECK_THROWS_AS(estimate_coefficient(kPartitions, 200, 5000, narrow), PrecisionFault);
  CHECK(estimate_coefficient(kPartitions, 50, 5000, narrow) == 204226);
}

TEST_CASE("estimates never return a wrong integer") {
  for (const auto& shape : testing::experiment_shapes()) {
    CAPTURE(shape.to_string());
    const RademacherSeries series(shape);
    const auto exact = qseries::exact_coefficients(shape, 40);
    for (std::int64_t n = 1; n <= 40; ++n) {
      if (Rational(n) <= series.constants().n0) continue;
      CAPTURE(n);
      try {
        CHECK(series.estimate_coefficient(n, 300) == exact[static_cast<std::size_t>(n)]);
      } catch (const NotConverged&) {
      }
    }
  }
}

TEST_CASE("best partial sum improves on the first term") {
  for (const auto& shape : testing::experiment_shapes()) {
    CAPTURE(shape.to_string());
    const RademacherSeries series(shape);
    const auto exact = qseries::exact_coefficients(shape, 20);
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 1; n <= 20; ++n) {
      if (Rational(n) > series.constants().n0) ns.push_back(n);
    }
    const auto tables = series.term_tables(ns, 100);
    for (const auto& table : tables) {
      CAPTURE(table.n);
      const Real oracle(exact[static_cast<std::size_t>(table.n)], 50);
      const auto sums = table.partial_sums();
      Real best = abs(sums.front() - oracle);
      const Real first = best;
      for (const Real& s : sums) best = min(best, abs(s - oracle));
      CHECK(best <= first);
      CHECK(best < 0.4);
    }
  }
}

TEST_CASE("precision stability") {
  for (const auto& shape : testing::experiment_shapes()) {
    CAPTURE(shape.to_string());
    EvaluationOptions wide;
    wide.digits = 70;
    const Real at50 = partial_sum(shape, 9, 40);
    const Real at70 = partial_sum(shape, 9, 40, wide);
    CHECK(relative_gap(at50, at70) < frame::vanishing_tolerance(50));
  }
}

TEST_CASE("asymptotic data") {
  const AsymptoticData p = asymptotic_estimate(kPartitions, 100);
  CHECK(p.leading_set == std::vector<std::int64_t>{1});
  CHECK(p.c3_max == 1);
  CHECK_FALSE(p.degenerate);
  CHECK(relative_gap(p.estimate, Real(190569292L, 50)) < 1e-3);
  const auto exact = testing::partitions_by_recurrence(100);
  CHECK(relative_gap(asymptotic_estimate(kPartitions, 50).estimate, Real(exact[50], 50)) < 1e-3);

  const frame::FrameShape two(frame::FrameShape::Entries{{2, -1}});
  const AsymptoticData d = asymptotic_estimate(two, 100);
  CHECK(d.leading_set == std::vector<std::int64_t>{1, 2});
  CHECK(d.c3_max == q(1, 2));
  CHECK(relative_gap(d.estimate, Real(exact[50], 50)) < 1e-2);
  CHECK(asymptotic_estimate(two, 101).degenerate);

  CHECK_THROWS_AS(asymptotic_estimate(kPartitions, 0), std::domain_error);
  CHECK_THROWS_AS(asymptotic_estimate(frame::FrameShape(frame::FrameShape::Entries{{1, 2}}), 5), HypothesisError);
}

TEST_CASE("eta series agrees with the literal product") {
  const int digits = 50;
  for (const Complex& t : {tau(0, 1, digits), tau(0.5, 1, digits), tau(0.1, 0.3, digits), tau(-0.37, 0.8, digits)}) {
    const std::int64_t truncation = eta_truncation(t, digits);
    const Complex series = eta_numeric(t, digits);
    const Complex product = eta_product(t, digits, truncation);
    CHECK(abs(series - product) < frame::vanishing_tolerance(digits));
  }
  // eta(i) = Gamma(1/4) / (2 pi^{3/4})
  const Complex at_i = eta_numeric(tau(0, 1, digits), digits);
  CHECK(abs(at_i.re - Real::parse("0.76822542232605665900259417957618064", digits)) < power_of_ten(-34, digits));
  CHECK(abs(at_i.im) < frame::vanishing_tolerance(digits));
  CHECK_THROWS_AS(eta_numeric(tau(0.2, 0, digits), digits), std::domain_error);
  CHECK_THROWS_AS(eta_numeric(tau(0.2, -1, digits), digits), std::domain_error);
}

TEST_CASE("transformation law examples") {
  const int digits = 50;
  const Real tol = frame::vanishing_tolerance(digits);
  CHECK(transform_check(frame::MatrixSL2(1, 0, 0, 1), tau(0, 1, digits), digits) < tol);
  CHECK(transform_check(frame::MatrixSL2(1, 1, 0, 1), tau(0, 1, digits), digits) < tol);
  CHECK(transform_check(frame::MatrixSL2(0, -1, 1, 0), tau(0, 2, digits), digits) < tol);
  CHECK(transform_check(frame::MatrixSL2(-1, 0, 0, -1), tau(0.3, 0.7, digits), digits) < tol);
  CHECK(transform_check(frame::MatrixSL2(0, 1, -1, 0), tau(0.1, 0.3, digits), digits) < tol);
  CHECK(transform_check(frame::MatrixSL2(-1, 3, 0, -1), tau(0.5, 1, digits), digits) < tol);
}
