#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <jackpoly/bessel.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace jackpoly;

TEST_CASE("zero arguments give the bare constant term") {
  const std::vector<double> l{1.5, 0.5}, zero{0.0, 0.0};
  CHECK(bessel_series(l, zero, Rational(1, 2), 12).value == 1.0L);
  CHECK(bessel_series(zero, l, Rational(1, 2), 12).value == 1.0L);
  CHECK(bessel_series(zero, zero, Rational(2), 0).value == 1.0L);
}

TEST_CASE("one variable collapses to the exponential for every theta") {
  for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(7, 3)})
    for (const auto [l, x] : {std::pair{1.5, 0.8}, std::pair{2.0, 1.0}, std::pair{0.5, 3.0},
                              std::pair{-1.0, 0.75}}) {
      const std::vector<double> lv{l}, xv{x};
      const long double reference = std::exp(static_cast<long double>(l) * x);
      const long double value = bessel_series(lv, xv, theta, 30).value;
      CHECK(std::fabs(value - reference) <= 1e-12L * std::fabs(reference));
    }
}

TEST_CASE("tail estimate is the contribution of the last degree") {
  const std::vector<double> l{0.8, 0.3}, x{0.5, 0.2};
  const Rational theta(1, 2);
  const BesselEval full = bessel_series(l, x, theta, 10);
  const BesselEval prev = bessel_series(l, x, theta, 9);
  CHECK(static_cast<double>(full.tail_estimate) ==
        doctest::Approx(static_cast<double>(std::fabs(full.value - prev.value)))
            .epsilon(1e-6));
  CHECK(full.degree_cut == 10);
  CHECK(full.l == l);
  CHECK(full.x == x);
}

TEST_CASE("partial sums are Cauchy for contracting arguments") {
  const std::vector<double> l{1.0, 0.5}, x{0.9, 0.4};
  for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(2)}) {
    const long double d1 =
        std::fabs(bessel_series(l, x, theta, 8).value - bessel_series(l, x, theta, 6).value);
    const long double d2 =
        std::fabs(bessel_series(l, x, theta, 14).value - bessel_series(l, x, theta, 12).value);
    CHECK(d2 < d1 / 8);
  }
}

TEST_CASE("mismatched lengths and negative cuts are rejected") {
  const std::vector<double> two{1.0, 0.5}, three{1.0, 0.5, 0.2};
  CHECK_THROWS_AS(bessel_series(two, three, Rational(1), 4), std::domain_error);
  CHECK_THROWS_AS(bessel_series(two, two, Rational(1), -1), std::domain_error);
  CHECK_THROWS_AS(bessel_symmetry_gap(two, three, Rational(1), 4), std::domain_error);
  CHECK_THROWS_AS(bessel_limit_probe(three, three, Rational(1), 0, 4), std::domain_error);
  const std::vector<double> rising{0.5, 1.0};
  CHECK_THROWS_AS(bessel_limit_probe(rising, two, Rational(1), 5, 4), std::domain_error);
}

TEST_CASE("the series is symmetric in l and x") {
  const std::vector<double> l{1.0, 0.5}, x{0.3, 0.1};
  CHECK(bessel_symmetry_gap(l, l, Rational(1, 2), 8) == 0.0L);
  const std::vector<double> a{1.7}, b{0.4};
  CHECK(bessel_symmetry_gap(a, b, Rational(3, 2), 12) == 0.0L);
  // Term-by-term symmetric grouping keeps the truncated gap at the noise
  // floor; it must never grow with the cut.
  long double prev = bessel_symmetry_gap(l, x, Rational(1, 2), 4);
  CHECK(prev <= 1e-8L);
  for (int cut : {8, 12}) {
    const long double gap = bessel_symmetry_gap(l, x, Rational(1, 2), cut);
    CHECK(gap <= prev);
    CHECK(gap <= 1e-8L);
    prev = gap;
  }
}

TEST_CASE("finite-kappa quotients approach the series") {
  // Classical limit: (1 + 1/kappa)^kappa -> e.
  const std::vector<double> one{1.0};
  long double prev = bessel_limit_probe(one, one, Rational(1), 1, 30);
  for (long kappa : {10L, 100L}) {
    const long double d = bessel_limit_probe(one, one, Rational(1), kappa, 30);
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev < 2e-2L);

  // Zero direction: the quotient is identically one.
  const std::vector<double> zero{0.0, 0.0}, x{0.6, 0.2};
  CHECK(bessel_limit_probe(zero, x, Rational(1, 2), 7, 16) == 0.0L);

  // Two-variable probe tightens from kappa = 10 to kappa = 40.
  const std::vector<double> l2{2.0, 1.0}, x2{0.2, 0.1};
  CHECK(bessel_limit_probe(l2, x2, Rational(1, 2), 40, 30) <
        bessel_limit_probe(l2, x2, Rational(1, 2), 10, 30));
}
