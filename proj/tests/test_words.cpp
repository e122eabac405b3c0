#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "graev/rational.hpp"
#include "graev/word.hpp"

using namespace graev;

namespace {
Word w(const char* text) { return parse_word(text); }
}  // namespace

TEST_CASE("rationals parse exactly and print in lowest terms") {
  CHECK(to_string(parse_rational("2/4")) == "1/2");
  CHECK(to_string(parse_rational("0.4")) == "2/5");
  CHECK(to_string(parse_rational("-3/1")) == "-3");
  CHECK(to_string(parse_rational("7")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("parsing") {
  const Word x = w("2/5 4/5^-1 e1 e2^-1 f3^1");
  REQUIRE(x.size() == 5);
  CHECK(x[0] == pos(Point::rational(Rational(2, 5))));
  CHECK(x[1] == neg(Point::rational(Rational(4, 5))));
  CHECK(x[2] == pos(Point::generator("e1")));
  CHECK(x[3] == neg(Point::generator("e2")));
  CHECK(x[4] == pos(Point::generator("f3")));
  CHECK(w("").empty());
  CHECK(w("   ").empty());
  CHECK(Point::rational(0) == Point::base());

  try {
    parse_word("e1 e2^-2");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("e2^-2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_word("1/0"), std::invalid_argument);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"", "e1", "e1 e2^-1 e3", "2/5 4/5^-1", "1"}) {
    CHECK(to_string(w(text)) == text);
  }
}

TEST_CASE("reduce") {
  CHECK(reduce(w("e1 e1^-1")).empty());
  CHECK(reduce(w("e1 e2 e2^-1 e3")) == w("e1 e3"));
  CHECK(reduce(w("e1 e2")) == w("e1 e2"));
  CHECK(reduce(w("e1 e2 e3 e3^-1 e2^-1 e1^-1")).empty());
  CHECK(reduce(w("1/2 0 1/2^-1")).empty());
  CHECK(w("e1 e2").is_reduced());
  CHECK_FALSE(w("e1 e1^-1").is_reduced());
  CHECK_FALSE(Word{pos(Point::base())}.is_reduced());
}

TEST_CASE("invert, concat, conjugate") {
  CHECK(invert(w("e1 e2^-1")) == w("e2 e1^-1"));
  CHECK(concat(w("e1"), w("e1^-1")).empty());
  CHECK(conjugate(w("e1"), w("e2")) == w("e1 e2 e1^-1"));
  CHECK(conjugate(w("e1"), w("e1^-1 e2")) == w("e2 e1^-1"));
  CHECK(power(w("e1 e2"), 2) == w("e1 e2 e1 e2"));
  CHECK(power(w("e1 e2"), -1) == w("e2^-1 e1^-1"));
  CHECK(power(w("e1"), 0).empty());
}

TEST_CASE("cyclic shift") {
  CHECK(cyclic_shift(w("e1 e2 e3"), 1) == w("e2 e3 e1"));
  CHECK(cyclic_shift(w("e1 e2 e3"), 0) == w("e1 e2 e3"));
  CHECK(cyclic_shift(w("e1 e2"), 2) == w("e1 e2"));
  CHECK(cyclic_shift(w("e1 e2 e3"), -1) == w("e3 e1 e2"));
  CHECK(cyclic_shift(Word{}, 3).empty());
}

TEST_CASE("basis substitution") {
  CHECK(substitute_basis(w("f2"), BasisDirection::kFToE) == w("e1 e2"));
  CHECK(substitute_basis(w("f1^-1"), BasisDirection::kFToE) == w("e1^-1"));
  CHECK(substitute_basis(w("f2 f1^-1"), BasisDirection::kFToE) == w("e1 e2 e1^-1"));
  CHECK(substitute_basis(w("e2"), BasisDirection::kEToF) == w("f1^-1 f2"));
  CHECK(substitute_basis(w("e1 e2 e1^-1"), BasisDirection::kEToF) == w("f2 f1^-1"));
  CHECK_THROWS_AS(substitute_basis(w("e1"), BasisDirection::kFToE), std::invalid_argument);
  CHECK_THROWS_AS(substitute_basis(w("f1"), BasisDirection::kEToF), std::invalid_argument);
}

TEST_CASE("reduced word enumeration") {
  const std::vector<Letter> ab{pos(Point::generator("a")), neg(Point::generator("a")),
                               pos(Point::generator("b")), neg(Point::generator("b"))};
  const auto words = reduced_words(ab, 3);
  // 1 + 4 + 12 + 36
  CHECK(words.size() == 53);
  CHECK(words.front().empty());
  for (std::size_t i = 0; i < words.size(); ++i) {
    CHECK(words[i].is_reduced());
    if (i) CHECK(words[i - 1] < words[i]);
  }
}

TEST_CASE("generator names order naturally") {
  CHECK(Point::generator("e2") < Point::generator("e10"));
  CHECK(generator_index(Point::generator("e12"), 'e') == 12);
  CHECK(generator_index(Point::generator("f3"), 'e') == 0);
}
