#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "graev/certificates.hpp"
#include "graev/norm.hpp"

using namespace graev;

namespace {
const PointedMetricSpace& I() {
  static const auto s = PointedMetricSpace::interval();
  return s;
}
Word w(const char* text) { return parse_word(text); }
Point e(int i) { return Point::generator("e" + std::to_string(i)); }

PowerCertificate two_fifths(Rational c = Rational(1, 2)) {
  return {{I().parse("2/5")}, 3, c, I().parse("2/5 2/5 2/5")};
}
}  // namespace

TEST_CASE("in_ball is strict") {
  CHECK(in_ball(I().parse("2/5"), Rational(1, 2), I()));
  CHECK_FALSE(in_ball(I().parse("2/5"), Rational(2, 5), I()));
  CHECK(in_ball(Word{}, Rational(1, 100), I()));
}

TEST_CASE("decompose_conjugates") {
  auto d = decompose_conjugates(w("e1 e2 e1^-1"), 3);
  REQUIRE(d);
  CHECK(d->factors == std::vector<ConjugateFactor>{{w("e1"), pos(e(2))}});
  CHECK(verify_conjugate_decomposition(*d));

  d = decompose_conjugates(w("e1 e2"), 3);
  REQUIRE(d);
  CHECK(d->factors == std::vector<ConjugateFactor>{{Word{}, pos(e(1))}, {Word{}, pos(e(2))}});

  CHECK_FALSE(decompose_conjugates(w("e1 e2 e3"), 3));

  d = decompose_conjugates(Word{}, 1);
  REQUIRE(d);
  CHECK(d->factors.empty());

  // Nested zero-cost pairs build up the conjugator.
  d = decompose_conjugates(w("e1 e2 e3 e2^-1 e1^-1"), 3);
  REQUIRE(d);
  CHECK(d->factors == std::vector<ConjugateFactor>{{w("e1 e2"), pos(e(3))}});
  CHECK(product(*d) == w("e1 e2 e3 e2^-1 e1^-1"));

  CHECK_THROWS_AS(decompose_conjugates(w("e4"), 3), std::invalid_argument);
  CHECK_THROWS_AS(decompose_conjugates(w("e1"), 0), std::invalid_argument);
}

TEST_CASE("verify_conjugate_decomposition") {
  CHECK_FALSE(verify_conjugate_decomposition({3, w("e2"), {{w("e1"), pos(e(2))}}}));
  CHECK(verify_conjugate_decomposition({1, Word{}, {}}));
  CHECK(verify_conjugate_decomposition({3, w("e1 e2 e1^-1"), {{w("e1"), pos(e(2))}}}));
  // Too many factors for m = 2.
  const ConjugateDecomposition many{2, w("e1 e2"), {{Word{}, pos(e(1))}, {Word{}, pos(e(2))}}};
  CHECK_FALSE(verify_conjugate_decomposition(many));
  // The identity letter is allowed.
  CHECK(verify_conjugate_decomposition({2, Word{}, {{w("e1"), pos(Point::base())}}}));
  CHECK(conjugate_decomposition_error({3, w("e1"), {{Word{}, pos(e(5))}}}));
}

TEST_CASE("verify_power_certificate") {
  CHECK(verify_power_certificate(two_fifths(), I()));
  CHECK(*power_certificate_error(two_fifths(Rational(1, 3)), I()) == "N(base 1) = 2/5 ≥ c");
  CHECK(verify_power_certificate({{}, 3, 1, Word{}}, I()));
  CHECK_FALSE(verify_power_certificate({{}, 4, 1, Word{}}, I()));
  CHECK_FALSE(verify_power_certificate({{}, 3, 0, Word{}}, I()));
  CHECK_FALSE(verify_power_certificate({{I().parse("2/5")}, 3, 1, I().parse("2/5 2/5")}, I()));
}

TEST_CASE("transport_certificate") {
  const auto half = transport_certificate(two_fifths(), PointMap::scaling(Rational(1, 2)));
  CHECK(half.bases == std::vector<Word>{I().parse("1/5")});
  CHECK(half.target == I().parse("1/5 1/5 1/5"));
  CHECK(verify_power_certificate(half, I()));

  const auto same = transport_certificate(two_fifths(), PointMap::identity(I()));
  CHECK(same.bases == two_fifths().bases);
  CHECK(same.target == two_fifths().target);

  const auto gone = transport_certificate(two_fifths(), PointMap::collapse(I()));
  CHECK(gone.bases.empty());
  CHECK(gone.target.empty());
  CHECK(verify_power_certificate(gone, I()));

  CHECK_THROWS_AS(transport_certificate(two_fifths(Rational(1, 3)), PointMap::identity(I())),
                  std::invalid_argument);
  CHECK_THROWS_AS(transport_certificate(two_fifths(), PointMap::scaling(2)), std::invalid_argument);
}

TEST_CASE("search_power_certificate") {
  auto r = search_power_certificate(I().parse("2/5 2/5 2/5"), Rational(1, 2), 3, {1, 1, 1000}, I());
  REQUIRE(r.certificate);
  CHECK(r.certificate->bases == std::vector<Word>{I().parse("2/5")});

  const auto m2 = PointedMetricSpace::conjugacy_space(2);
  r = search_power_certificate(w("e1"), 10, 3, {2, 2, 100000}, m2);
  CHECK_FALSE(r.certificate);

  r = search_power_certificate(Word{}, 1, 3, {}, I());
  REQUIRE(r.certificate);
  CHECK(r.certificate->bases.empty());

  // Two factors: (e1 e2)^3 (e2)^3 over lemma32-m2 with c = 3.
  r = search_power_certificate(w("e1 e2 e1 e2 e1 e2 e2 e2 e2"), 3, 3, {2, 2, 100000}, m2);
  REQUIRE(r.certificate);
  CHECK(verify_power_certificate(*r.certificate, m2));

  CHECK_THROWS_AS(search_power_certificate(w("e1"), 1, 4, {}, m2), std::invalid_argument);
}

TEST_CASE("exponent sums") {
  CHECK(exponent_sum(w("e1 e2 e1^-1"), e(1)) == 0);
  CHECK(exponent_sum(w("e1 e1 e1"), e(1)) == 3);
  CHECK(exponent_sum(w("e1 e2^-1 e2^-1"), e(2)) == -2);
}

TEST_CASE("exponent_obstruction") {
  const auto r = exponent_obstruction(power(w("e1 e2"), 2), 2, 3);
  REQUIRE(r);
  CHECK(r->sums == std::vector<long>{2, 2});
  CHECK_FALSE(r->describe().empty());
  CHECK_FALSE(exponent_obstruction(w("e1 e2 e1^-1"), 2, 3));
  CHECK_FALSE(exponent_obstruction(power(w("e1 e2 e3"), 3), 3, 3));
  CHECK_THROWS_AS(exponent_obstruction(w("e3"), 2, 3), std::invalid_argument);
}
