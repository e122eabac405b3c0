#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "graev/space.hpp"

using namespace graev;

namespace {
Letter L(const char* text) { return parse_word(text)[0]; }
}  // namespace

TEST_CASE("validate_metric") {
  CHECK_FALSE(validate_metric(PointedMetricSpace::conjugacy_space(3)));
  CHECK_FALSE(validate_metric(PointedMetricSpace::prefix_space(4)));
  CHECK_FALSE(validate_metric(PointedMetricSpace::interval()));

  const auto bad = PointedMetricSpace::finite_unchecked(
      "e", {"e", "a", "b"}, {0, 1, 1, 1, 0, 5, 1, 5, 0});
  const auto v = validate_metric(bad);
  REQUIRE(v);
  CHECK(v->axiom == "triangle");
  CHECK(v->points == std::vector<std::string>{"a", "e", "b"});

  CHECK_THROWS_AS(PointedMetricSpace::finite("e", {"e", "a", "b"}, {0, 1, 1, 1, 0, 5, 1, 5, 0}),
                  std::invalid_argument);
  const auto asym = PointedMetricSpace::finite_unchecked("e", {"e", "a"}, {0, 1, 2, 0});
  CHECK(validate_metric(asym)->axiom == "symmetry");
  const auto zero = PointedMetricSpace::finite_unchecked("e", {"e", "a"}, {0, 0, 0, 0});
  CHECK(validate_metric(zero)->axiom == "identity");
  const auto neg = PointedMetricSpace::finite_unchecked("e", {"e", "a"}, {0, -1, -1, 0});
  CHECK(validate_metric(neg)->axiom == "nonnegativity");
}

TEST_CASE("tilde_dist on the conjugacy space") {
  const auto s = PointedMetricSpace::conjugacy_space(3);
  CHECK(tilde_dist(L("e1^-1"), L("e2^-1"), s) == 2);
  CHECK(tilde_dist(L("e1"), L("e2^-1"), s) == 2);
  CHECK(tilde_dist(L("e1"), L("e1^-1"), s) == 2);
  CHECK(tilde_dist(L("e1"), L("e1"), s) == 0);
  CHECK(tilde_dist(L("e2^-1"), L("e2^-1"), s) == 0);
  CHECK(tilde_dist(pos(Point::base()), neg(Point::base()), s) == 0);
  CHECK(tilde_dist(L("e3"), neg(Point::base()), s) == 1);
}

TEST_CASE("tilde_dist on the interval") {
  const auto s = PointedMetricSpace::interval();
  CHECK(tilde_dist(L("2/5"), L("4/5"), s) == Rational(2, 5));
  CHECK(tilde_dist(L("2/5"), L("4/5^-1"), s) == Rational(6, 5));
  CHECK(tilde_dist(L("2/5^-1"), L("4/5^-1"), s) == Rational(2, 5));
}

TEST_CASE("points and names") {
  const auto s = PointedMetricSpace::conjugacy_space(2);
  CHECK(s.points().size() == 3);
  CHECK(s.points().front() == Point::base());
  CHECK(s.letters().size() == 4);
  CHECK(s.parse("e e1")[0] == pos(Point::base()));
  CHECK(s.format(s.parse("e1 e2^-1")) == "e1 e2^-1");
  CHECK_THROWS_AS(s.parse("e3"), std::invalid_argument);

  const auto i = PointedMetricSpace::interval();
  CHECK(i.contains(Point::rational(1)));
  CHECK_FALSE(i.contains(Point::rational(Rational(3, 2))));
  CHECK_THROWS_AS(i.parse("e1"), std::invalid_argument);
  CHECK(i.dist(Point::base(), Point::rational(Rational(1, 3))) == Rational(1, 3));

  const auto p = PointedMetricSpace::prefix_space(3);
  CHECK(p.dist(Point::generator("f1"), Point::generator("f3")) == 2);
  CHECK(p.dist(Point::generator("f3"), Point::base()) == 3);
}
