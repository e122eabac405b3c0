#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "graev/norm.hpp"

using namespace graev;

TEST_CASE("is_sigma") {
  CHECK(is_sigma(std::vector<int>{1, 2, 3, 4}));
  CHECK(is_sigma(std::vector<int>{2, 1}));
  CHECK_FALSE(is_sigma(std::vector<int>{3, 4, 1, 2}));
  CHECK(is_sigma(std::vector<int>{3, 2, 1}));
  CHECK(is_sigma(std::vector<int>{4, 3, 2, 1}));
  CHECK(is_sigma(std::vector<int>{2, 1, 4, 3}));
  CHECK_FALSE(is_sigma(std::vector<int>{2, 3, 1}));  // not an involution
  CHECK(is_sigma(std::vector<int>{}));
  CHECK_THROWS_AS(is_sigma(std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(is_sigma(std::vector<int>{0, 2}), std::invalid_argument);
}

TEST_CASE("enumerate_sigma") {
  CHECK(enumerate_sigma(1) == std::vector{SigmaMatching::identity(1)});
  CHECK(enumerate_sigma(2).size() == 2);
  const auto three = enumerate_sigma(3);
  CHECK(three == std::vector<SigmaMatching>{SigmaMatching({1, 2, 3}), SigmaMatching({1, 3, 2}),
                                            SigmaMatching({2, 1, 3}), SigmaMatching({3, 2, 1})});
  const long motzkin[] = {1, 2, 4, 9, 21, 51, 127, 323, 835, 2188};
  for (int k = 1; k <= 10; ++k) CHECK(enumerate_sigma(k).size() == motzkin[k - 1]);
  CHECK_THROWS_AS(enumerate_sigma(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_sigma(11), std::out_of_range);
}

TEST_CASE("matchings") {
  const SigmaMatching a({3, 2, 1});
  CHECK(a.pairs() == std::vector<std::pair<int, int>>{{1, 3}});
  CHECK(a.fixed() == std::vector<int>{2});
  CHECK(a(1) == 3);
  CHECK_THROWS_AS(SigmaMatching({2, 3, 1}), std::invalid_argument);
}

TEST_CASE("brute force") {
  const auto s = PointedMetricSpace::conjugacy_space(3);
  CHECK(norm_bruteforce(s.parse("e1"), s) == 1);
  CHECK(norm_bruteforce(Word{}, s) == 0);
  CHECK(norm_bruteforce(s.parse("e1 e2 e1^-1"), s) == 1);
  CHECK(norm_bruteforce(s.parse("e1 e1^-1"), s) == 0);
  CHECK_THROWS(norm_bruteforce(s.parse("e1 e2 e1 e2 e1 e2 e1 e2 e1 e2 e1"), s));
}

TEST_CASE("DP") {
  const auto i = PointedMetricSpace::interval();
  const auto s = PointedMetricSpace::conjugacy_space(3);

  const auto r = norm_dp(i.parse("2/5 4/5^-1"), i);
  CHECK(r.value == Rational(2, 5));
  CHECK(r.matching == SigmaMatching({2, 1}));

  CHECK(norm(s.parse("e1 e2"), s) == 2);
  CHECK(norm(i.parse("2/5 2/5^-1"), i) == 0);
  CHECK(norm(Word{}, i) == 0);

  const auto c = norm_dp(s.parse("e1 e2 e1^-1"), s);
  CHECK(c.value == 1);
  CHECK(c.matching == SigmaMatching({3, 2, 1}));

  // Long words are fine for the DP.
  Word big;
  for (int n = 0; n < 40; ++n) big = concat(big, s.parse("e1 e2"));
  CHECK(norm(big, s) == 80);
  CHECK(norm(concat(big, invert(big)), s) == 0);
}

TEST_CASE("ties prefer the fixed point") {
  // e1 e2: pairing costs d~(e1, e2^-1) = 2, the same as two fixed points.
  const auto s = PointedMetricSpace::conjugacy_space(2);
  CHECK(norm_dp(s.parse("e1 e2"), s).matching == SigmaMatching::identity(2));
}

TEST_CASE("graev metric") {
  const auto i = PointedMetricSpace::interval();
  const auto s = PointedMetricSpace::conjugacy_space(3);
  CHECK(graev_metric(i.parse("2/5"), i.parse("4/5"), i) == Rational(2, 5));
  CHECK(graev_metric(s.parse("e1 e2"), s.parse("e1 e2"), s) == 0);
  CHECK(graev_metric(s.parse("e1"), s.parse("e2"), s) == 2);
}
