#include <doctest.h>

#include <random>
#include <stdexcept>

#include "etaq/qseries/exact_coefficients.hpp"
#include "etaq/qseries/integer_series.hpp"
#include "oracles.hpp"

using namespace etaq;
using namespace etaq::qseries;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> values) {
  std::vector<BigInt> out;
  for (const long v : values) out.emplace_back(v);
  return out;
}

IntegerSeries random_unit_series(std::mt19937_64& rng, std::int64_t truncation) {
  std::uniform_int_distribution<long> coefficient(-9, 9);
  std::vector<BigInt> c(static_cast<std::size_t>(truncation) + 1);
  c[0] = (rng() % 2 == 0) ? 1 : -1;
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = coefficient(rng);
  return IntegerSeries(c);
}

}  // namespace

TEST_CASE("euler series from the pentagonal number theorem") {
  CHECK(euler_series(8).coefficients() == ints({1, -1, -1, 0, 0, 1, 0, 1, 0}));
  CHECK(euler_series(0).coefficients() == ints({1}));
  // Exponents 12 and 15 come from j = 3 and j = -3, so both carry (-1)^3.
  CHECK(euler_series(12)[12] == -1);
  CHECK(euler_series(15)[15] == -1);
  CHECK(euler_series(22)[22] == 1);
  CHECK(euler_series(26)[26] == 1);
}

TEST_CASE("euler series matches the literal product") {
  const std::int64_t t = 60;
  IntegerSeries product = IntegerSeries::one(t);
  for (std::int64_t n = 1; n <= t; ++n) {
    IntegerSeries factor = IntegerSeries::one(t);
    factor[n] = -1;
    product = multiply(product, factor);
  }
  CHECK(product == euler_series(t));
}

TEST_CASE("inverting the euler series gives partition numbers") {
  CHECK(invert(euler_series(5)).coefficients() == ints({1, 1, 2, 3, 5, 7}));
  const auto p = testing::partitions_by_recurrence(300);
  CHECK(invert(euler_series(300)).coefficients() == p);
}

TEST_CASE("inversion requires a unit constant term") {
  CHECK_THROWS_AS(invert(IntegerSeries(ints({2, 1}))), std::domain_error);
  CHECK_THROWS_AS(invert(IntegerSeries(ints({0, 1}))), std::domain_error);
  CHECK(invert(IntegerSeries(ints({-1, 1, 0}))).coefficients() == ints({-1, -1, -1}));
}

TEST_CASE("series powers") {
  const IntegerSeries a(ints({1, 3, -2, 5}));
  CHECK(pow(a, 0).coefficients() == ints({1, 0, 0, 0}));
  CHECK(pow(a, 1) == a);
  CHECK(pow(a, 3) == multiply(a, multiply(a, a)));
  CHECK(pow(a, -2) == invert(multiply(a, a)));
  CHECK(pow(IntegerSeries(ints({1, 1, 0, 0, 0})), 4).coefficients() == ints({1, 4, 6, 4, 1}));
}

TEST_CASE("multiplication requires matching truncations") {
  CHECK_THROWS_AS(multiply(IntegerSeries(2), IntegerSeries(3)), std::invalid_argument);
}

TEST_CASE("dilation moves exponents") {
  CHECK(dilate(IntegerSeries(ints({1, -1})), 2, 4).coefficients() == ints({1, 0, -1, 0, 0}));
  CHECK(dilate(IntegerSeries(ints({1, 2, 3})), 3, 4).coefficients() == ints({1, 0, 0, 2, 0}));
}

TEST_CASE("multiplying by the inverse gives one") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    const IntegerSeries a = random_unit_series(rng, 40);
    CHECK(multiply(a, invert(a)) == IntegerSeries::one(40));
    CHECK(multiply(invert(a), a) == IntegerSeries::one(40));
  }
}

TEST_CASE("exact coefficient examples") {
  CHECK(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{1, -1}}), 6) == ints({1, 1, 2, 3, 5, 7, 11}));
  CHECK(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{1, 1}}), 7) == ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{2, -1}}), 6) == ints({1, 0, 1, 0, 2, 0, 3}));
  CHECK(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{1, -1}}), 0) == ints({1}));
}

TEST_CASE("every eta-quotient series starts with 1") {
  for (const auto& shape : testing::experiment_shapes()) CHECK(exact_coefficients(shape, 10)[0] == 1);
}

TEST_CASE("known expansions") {
  // eta(tau)^3 = sum (-1)^j (2j+1) q^{j(j+1)/2} (Jacobi).
  std::vector<BigInt> jacobi(50, 0);
  for (long j = 0; j * (j + 1) / 2 < 50; ++j) jacobi[static_cast<std::size_t>(j * (j + 1) / 2)] = (j % 2 ? -1 : 1) * (2 * j + 1);
  CHECK(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{1, 3}}), 49) == jacobi);
  // eta(2 tau)^2 / eta(tau) = sum q^{j(j+1)/2} (Gauss).
  std::vector<BigInt> gauss(60, 0);
  for (long j = 0; j * (j + 1) / 2 < 60; ++j) gauss[static_cast<std::size_t>(j * (j + 1) / 2)] = 1;
  CHECK(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{1, -1}, {2, 2}}), 59) == gauss);
}

TEST_CASE("disjoint shapes multiply") {
  const std::int64_t n = 80;
  const frame::FrameShape left(frame::FrameShape::Entries{{1, -3}});
  const frame::FrameShape right({{4, 1}, {6, -2}});
  const frame::FrameShape both({{1, -3}, {4, 1}, {6, -2}});
  CHECK(multiply(eta_quotient_series(left, n), eta_quotient_series(right, n)) == eta_quotient_series(both, n));
}

TEST_CASE("negative argument is rejected") {
  CHECK_THROWS_AS(exact_coefficients(frame::FrameShape(frame::FrameShape::Entries{{1, -1}}), -1), std::invalid_argument);
}
