#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <jackpoly/partition.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace jackpoly;

namespace {
Partition p(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("parse grammar: comma-separated parts, empty and 0 are the empty partition") {
  CHECK(Partition::parse("3,1,1").parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition::parse("0") == Partition());
  CHECK(Partition::parse("4,0") == p({4}));  // trailing zeros dropped
  CHECK(Partition::parse("3,1,1").str() == "3,1,1");
  CHECK(Partition().str() == "0");
  CHECK_THROWS_AS(Partition::parse("1,2"), std::domain_error);     // increasing
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
}

TEST_CASE("size, length, part access beyond the length") {
  const Partition mu = p({3, 1, 1});
  CHECK(mu.size() == 5);
  CHECK(mu.length() == 3);
  CHECK(mu.part(1) == 3);
  CHECK(mu.part(3) == 1);
  CHECK(mu.part(4) == 0);
  CHECK(mu.part(100) == 0);
  CHECK(Partition().empty());
  CHECK(Partition().size() == 0);
}

TEST_CASE("containment and interlacing predicates") {
  CHECK(contains(p({3, 2}), p({2, 1})));
  CHECK(contains(p({3, 2}), Partition()));
  CHECK(!contains(p({3, 2}), p({2, 2, 1})));
  CHECK(!contains(p({3, 2}), p({4})));
  CHECK(interlaces(p({2}), p({3, 1})));
  CHECK(interlaces(p({3}), p({3, 1})));
  CHECK(interlaces(p({3, 1}), p({3, 1, 1})));
  CHECK(!interlaces(p({2, 2}), p({3, 1, 1})));  // nu_2 > lambda_2
  CHECK(interlaces(Partition(), p({2})));
  CHECK(!interlaces(Partition(), p({2, 1})));   // nu_1 = 0 < lambda_2
}

TEST_CASE("arm, leg, co-arm, co-leg at pinned cells") {
  const Square s11{1, 1};
  CHECK(arm(p({3, 1}), s11) == 2);
  CHECK(leg(p({3, 1}), s11) == 1);
  CHECK(coarm(s11) == 0);
  CHECK(coleg(s11) == 0);

  CHECK(arm(p({1}), s11) == 0);
  CHECK(leg(p({1}), s11) == 0);

  const Square s12{1, 2};
  CHECK(arm(p({2, 2}), s12) == 0);
  CHECK(leg(p({2, 2}), s12) == 1);
  CHECK(coarm(s12) == 1);
  CHECK(coleg(s12) == 0);
}

TEST_CASE("conjugation transposes arms and legs") {
  CHECK(p({3, 1}).conjugate() == p({2, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  for (const auto& mu : partitions_up_to(6, 6)) {
    CHECK(mu.conjugate().conjugate() == mu);
    for (int i = 1; i <= mu.length(); ++i)
      for (int j = 1; j <= mu.part(i); ++j) {
        CHECK(arm(mu, {i, j}) == leg(mu.conjugate(), {j, i}));
        CHECK(leg(mu, {i, j}) == arm(mu.conjugate(), {j, i}));
      }
  }
}

TEST_CASE("hook products at pinned values") {
  const Rational theta(2, 3);
  CHECK(hook_h(Partition(), theta) == Rational(1));
  CHECK(hook_h(p({2, 1}), theta) == theta + Rational(2));
  CHECK(hook_h(p({2}), Rational(1)) == Rational(2));
  CHECK(hook_hprime(p({2, 1}), theta) == theta * theta * (Rational(2) * theta + Rational(1)));
  CHECK(hook_hprime(p({2, 1}), Rational(1)) == Rational(3));
}

TEST_CASE("hook products coincide at theta = 1") {
  for (const auto& mu : partitions_up_to(8, 8))
    CHECK(hook_h(mu, Rational(1)) == hook_hprime(mu, Rational(1)));
}

TEST_CASE("generalized Pochhammer symbol") {
  const Rational t(1, 2), theta(1, 3);
  CHECK(pochhammer(t, Partition(), theta) == Rational(1));
  // One row: (t)_(3) = t(t+1)(t+2) independent of theta.
  const Rational row = t * (t + Rational(1)) * (t + Rational(2));
  CHECK(pochhammer(t, p({3}), theta) == row);
  CHECK(pochhammer(t, p({3}), Rational(5, 2)) == row);
  // Hook (2,1): t(t+1)(t-theta).
  CHECK(pochhammer(t, p({2, 1}), theta) == t * (t + Rational(1)) * (t - theta));
}

TEST_CASE("graded-lex enumeration order and bounds") {
  const auto list = partitions_up_to(2, 2);
  REQUIRE(list.size() == 4);
  CHECK(list[0] == Partition());
  CHECK(list[1] == p({1}));
  CHECK(list[2] == p({2}));
  CHECK(list[3] == p({1, 1}));

  CHECK(partitions_up_to(0, 3) == std::vector<Partition>{Partition()});
  CHECK(partitions_up_to(3, 1) ==
        std::vector<Partition>{Partition(), p({1}), p({2}), p({3})});

  // The documented head of the graded-lex sequence.
  const auto head = partitions_up_to(3, 3);
  REQUIRE(head.size() == 7);
  CHECK(head[4] == p({3}));
  CHECK(head[5] == p({2, 1}));
  CHECK(head[6] == p({1, 1, 1}));
  for (std::size_t i = 0; i + 1 < head.size(); ++i) CHECK(graded_lex_less(head[i], head[i + 1]));
}

TEST_CASE("interlacings in n variables, descending lex, truncated to n-1 rows") {
  CHECK(interlacings(p({2}), 2) == std::vector<Partition>{p({2}), p({1}), Partition()});
  CHECK(interlacings(p({1, 1}), 2) == std::vector<Partition>{p({1})});
  CHECK(interlacings(Partition(), 1) == std::vector<Partition>{Partition()});
  CHECK_THROWS_AS(interlacings(p({1, 1}), 1), std::domain_error);

  // Every emitted nu interlaces lambda; n = length + 1 emits them all.
  const Partition lambda = p({3, 2, 1});
  const auto all = interlacings(lambda, 4);
  for (const auto& nu : all) CHECK(interlaces(nu, lambda));
  CHECK(all.size() == 8);  // (3-2+1)*(2-1+1)*(1-0+1)
  for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
}

TEST_CASE("subpartitions enumerate exactly the contained shapes") {
  const Partition lambda = p({2, 1});
  const auto subs = subpartitions(lambda);
  REQUIRE(subs.size() == 5);
  for (const auto& mu : subs) CHECK(contains(lambda, mu));
  for (const auto& mu : partitions_up_to(3, 3)) {
    const bool listed = std::find(subs.begin(), subs.end(), mu) != subs.end();
    CHECK(listed == contains(lambda, mu));
  }
}
