#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "graev/io.hpp"

using namespace graev;
using io::json;

namespace {
std::string data(const char* name) { return std::string(GRAEV_TEST_DATA) + "/" + name; }
}  // namespace

TEST_CASE("space files") {
  const auto s = io::resolve_space(data("lemma32-m3.json"));
  const auto ref = PointedMetricSpace::conjugacy_space(3);
  CHECK(s.names() == ref.names());
  for (const auto& a : ref.points()) {
    for (const auto& b : ref.points()) CHECK(s.dist(a, b) == ref.dist(a, b));
  }
  CHECK(io::space_to_json(s) == io::space_to_json(ref));
  CHECK(io::space_from_json(io::space_to_json(ref)).names() == ref.names());
  CHECK_FALSE(io::resolve_space(data("interval.json")).is_finite());

  try {
    io::resolve_space(data("triangle-broken.json"));
    FAIL("expected a metric violation");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("not a metric") != std::string::npos);
  }
}

TEST_CASE("space schema errors") {
  auto load = [](const char* text) { return io::space_from_json(json::parse(text)); };
  CHECK_THROWS_AS(load(R"({"kind":"sphere"})"), std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"kind":"finite","base":"e","points":["e","a"],"dist":{}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"kind":"finite","base":"e","points":["e","a"],"dist":{"e,a":"1","a,e":"2"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"kind":"finite","base":"e","points":["e","a"],"dist":{"e,b":"1"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load(R"({"kind":"finite","base":"x","points":["e","a"],"dist":{"e,a":"1"}})"),
                  std::invalid_argument);
  CHECK(load(R"({"kind":"finite","base":"e","points":["e","a"],"dist":{"a,e":"1/2"}})")
            .dist(Point::generator("a"), Point::base()) == Rational(1, 2));
}

TEST_CASE("built-in spaces") {
  CHECK(io::builtin_space("interval"));
  CHECK(io::builtin_space("lemma32-m3.json")->names().size() == 4);
  CHECK(io::builtin_space("lemma31-m2")->names() == std::vector<std::string>{"e", "f1", "f2"});
  CHECK_FALSE(io::builtin_space("lemma32-m"));
  CHECK_FALSE(io::builtin_space("lemma32-mx"));
  CHECK_FALSE(io::builtin_space("sphere"));
  CHECK_THROWS_AS(io::resolve_space("sphere"), std::invalid_argument);
}

TEST_CASE("matching round trip") {
  const auto s = PointedMetricSpace::conjugacy_space(3);
  const auto r = norm_dp(s.parse("e1 e2 e1^-1"), s);
  const json j = io::matching_to_json(r);
  CHECK(j == json::parse(R"({"k":3,"map":[3,2,1],"cost":"1","pairs":[[1,3]],"fixed":[2]})"));
  const auto back = io::matching_from_json(j);
  CHECK(back.value == r.value);
  CHECK(back.matching == r.matching);
  CHECK_THROWS_AS(io::matching_from_json(json::parse(R"({"k":2,"map":[2,2],"cost":"0"})")),
                  std::invalid_argument);
}

TEST_CASE("point maps") {
  const auto s = PointedMetricSpace::conjugacy_space(2);
  const auto swap = io::point_map_from_json(json::parse(R"({"map":{"e1":"e2","e2":"e1"}})"), s);
  CHECK(swap.apply(Point::generator("e1")) == Point::generator("e2"));
  CHECK(io::point_map_from_json(io::point_map_to_json(swap), s).table_entries() == swap.table_entries());

  const auto i = PointedMetricSpace::interval();
  const auto half = io::point_map_from_json(json::parse(R"({"scale":"1/2"})"), i);
  CHECK(half.scale() == Rational(1, 2));
  CHECK(io::point_map_to_json(half) == json::parse(R"({"scale":"1/2"})"));

  const auto steep = io::point_map_from_json(json::parse(R"({"knots":[["0","0"],["1/2","1"]]})"), i);
  CHECK_FALSE(check_contraction(steep));
  CHECK(io::point_map_from_json(io::point_map_to_json(steep), i).knots() == steep.knots());
}

TEST_CASE("partial contractions") {
  const auto p = io::partial_contraction_from_json(io::load_json(data("partial.json")));
  CHECK(p.points == std::vector<Rational>{0, Rational(1, 2)});
  CHECK(p.values == std::vector<Rational>{0, Rational(1, 4)});
  CHECK(io::partial_contraction_to_json(p) == io::load_json(data("partial.json")));
}

TEST_CASE("certificates") {
  const auto i = PointedMetricSpace::interval();
  const json pj = io::load_json(data("power-2-5.json"));
  const auto cert = io::certificate_from_json(pj, i);
  REQUIRE(std::holds_alternative<PowerCertificate>(cert));
  const auto& p = std::get<PowerCertificate>(cert);
  CHECK(verify_power_certificate(p, i));
  CHECK(io::power_certificate_to_json(p, i) == pj);

  const json dj = io::load_json(data("conjugate.json"));
  const auto d = io::certificate_from_json(dj, i);
  REQUIRE(std::holds_alternative<ConjugateDecomposition>(d));
  CHECK(verify_conjugate_decomposition(std::get<ConjugateDecomposition>(d)));
  CHECK(io::decomposition_to_json(std::get<ConjugateDecomposition>(d)) == dj);

  CHECK_THROWS_AS(io::certificate_from_json(json::parse(R"({"n":3})"), i), std::invalid_argument);
  CHECK_THROWS_AS(io::load_json("{not json"), std::invalid_argument);
  CHECK_THROWS_AS(io::load_json(data("missing.json")), std::invalid_argument);
}
