#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <jackpoly/shifted.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace jackpoly;

namespace {
Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }

MultiPoly x(int n, int i) { return MultiPoly::variable(n, i); }
}  // namespace

TEST_CASE("pinned shifted polynomials") {
  const Rational theta(1, 2);
  CHECK(shifted_jack(p({1}), JackParams(2, theta)) == x(2, 1) + x(2, 2));
  CHECK(shifted_jack(p({1}), JackParams(3, theta)) == x(3, 1) + x(3, 2) + x(3, 3));
  CHECK(shifted_jack(p({1, 1}), JackParams(2, theta)) ==
        x(2, 2) * (x(2, 1) + MultiPoly::constant(2, theta)));
  CHECK(shifted_jack(p({2}), JackParams(1, theta)) ==
        x(1, 1) * (x(1, 1) - MultiPoly::constant(1, Rational(1))));
  CHECK(shifted_jack(p({1, 1, 1}), JackParams(2, theta)).is_zero());
  CHECK(shifted_jack(Partition(), JackParams(2, theta)) ==
        MultiPoly::constant(2, Rational(1)));
}

TEST_CASE("evaluation at partition points") {
  const Rational theta(2, 3);
  CHECK(shifted_eval(p({2}), p({2}), JackParams(1, theta)) == Rational(2));
  CHECK(shifted_eval(p({2}), p({2}), JackParams(1, Rational(5))) == Rational(2));
  CHECK(shifted_eval(p({2, 1}), p({3}), JackParams(2, theta)) == Rational(0));
  CHECK(shifted_eval(p({1}), p({2, 1}), JackParams(2, theta)) == Rational(3));
  CHECK_THROWS_AS(shifted_eval(p({1}), p({2, 1, 1}), JackParams(2, theta)), std::domain_error);
  CHECK_THROWS_AS(shifted_eval(p({1, 1, 1}), p({2}), JackParams(2, theta)), std::domain_error);
}

TEST_CASE("evaluation matches substituting into the expanded polynomial") {
  const JackParams params(3, Rational(3, 2));
  for (const auto& mu : partitions_up_to(3, 3))
    for (const auto& lambda : partitions_up_to(4, 3)) {
      std::vector<Rational> point;
      for (int i = 1; i <= params.n; ++i) point.emplace_back(lambda.part(i));
      CHECK(shifted_eval(mu, lambda, params) == shifted_jack(mu, params).evaluate(point));
    }
}

TEST_CASE("top homogeneous component is the ordinary Jack polynomial") {
  CHECK(shifted_top_term(p({1, 1}), JackParams(2, Rational(1, 2))) == x(2, 1) * x(2, 2));
  CHECK(shifted_top_term(p({2}), JackParams(1, Rational(1, 2))) ==
        MultiPoly::monomial(1, {2}, Rational(1)));
  for (const Rational& theta : {Rational(1, 2), Rational(2)})
    for (int n = 1; n <= 3; ++n)
      for (const auto& mu : partitions_up_to(4, n))
        CHECK(shifted_top_term(mu, JackParams(n, theta)) ==
              jack_combinatorial(mu, JackParams(n, theta)));
}

TEST_CASE("shifted symmetry predicate") {
  const Rational theta(1, 2);
  CHECK(is_shifted_symmetric(shifted_jack(p({2, 1}), JackParams(3, theta)), theta));
  CHECK(!is_shifted_symmetric(x(2, 1), theta));
  CHECK(is_shifted_symmetric(MultiPoly::constant(2, Rational(7)), theta));
  // Ordinary symmetric but not shifted-symmetric once degree exceeds 1.
  CHECK(!is_shifted_symmetric(x(2, 1) * x(2, 1) + x(2, 2) * x(2, 2), theta));
  // Power sums of degree one are both.
  CHECK(is_shifted_symmetric(x(2, 1) + x(2, 2), theta));
}

TEST_CASE("interpolation conditions across a theta grid") {
  for (const Rational& theta : {Rational(1, 2), Rational(1), Rational(3, 2)})
    for (const auto& mu : partitions_up_to(5, 4)) {
      const JackParams params(4, theta);
      CHECK(shifted_eval(mu, mu, params) == hook_h(mu, theta));
      for (const auto& lambda : partitions_up_to(mu.size(), 4))
        if (lambda != mu) CHECK(shifted_eval(mu, lambda, params).is_zero());
    }
}

TEST_CASE("extra vanishing beyond the defining conditions") {
  const Rational theta(4, 3);
  for (const auto& mu : partitions_up_to(4, 4))
    for (const auto& lambda : partitions_up_to(5, 4)) {
      if (contains(lambda, mu)) continue;
      const int n = std::max({mu.length(), lambda.length(), 1});
      CHECK(shifted_eval(mu, lambda, JackParams(n, theta)).is_zero());
    }
}

TEST_CASE("setting the last variable to zero recovers fewer variables") {
  for (const Rational& theta : {Rational(1, 2), Rational(3)})
    for (const auto& mu : partitions_up_to(4, 2))
      CHECK(shifted_jack(mu, JackParams(3, theta)).restrict_last_to_zero() ==
            shifted_jack(mu, JackParams(2, theta)));
}

TEST_CASE("agrees with the interpolation linear-system oracle") {
  for (const auto& mu : partitions_up_to(4, 4))
    CHECK(oracles::shifted_jack_interpolation(mu, 4, Rational(1)) ==
          shifted_jack(mu, JackParams(4, Rational(1))));
  // One non-Schur spot check.
  CHECK(oracles::shifted_jack_interpolation(p({2, 1}), 3, Rational(1, 2)) ==
        shifted_jack(p({2, 1}), JackParams(3, Rational(1, 2))));
}
