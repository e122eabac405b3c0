#include "graev/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace graev::io {

namespace {

[[noreturn]] void schema(const std::string& what) {
  throw std::invalid_argument("schema error: " + what);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) schema(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational rational(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(text(j, what));
}

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
}

}  // namespace

PointedMetricSpace space_from_json(const json& j) {
  const std::string kind = text(field(j, "kind"), "kind");
  if (kind == "interval") return PointedMetricSpace::interval();
  if (kind != "finite") schema("unknown space kind '" + kind + "'");

  const std::string base = text(field(j, "base"), "base");
  const auto& pts = field(j, "points");
  if (!pts.is_array()) schema("points must be an array");
  std::vector<std::string> names;
  std::map<std::string, std::size_t> index;
  for (const auto& p : pts) {
    names.push_back(text(p, "point"));
    if (!index.emplace(names.back(), names.size() - 1).second) {
      schema("duplicate point '" + names.back() + "'");
    }
  }
  const std::size_t n = names.size();
  std::vector<std::optional<Rational>> table(n * n);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = Rational(0);

  const auto& dist = field(j, "dist");
  if (!dist.is_object()) schema("dist must be an object");
  for (const auto& [key, value] : dist.items()) {
    auto comma = key.find(',');
    if (comma == std::string::npos) schema("dist key '" + key + "' is not \"a,b\"");
    auto a = index.find(trim(key.substr(0, comma)));
    auto b = index.find(trim(key.substr(comma + 1)));
    if (a == index.end() || b == index.end()) schema("dist key '" + key + "' names unknown points");
    Rational d = rational(value, "distance");
    for (auto [x, y] : {std::pair{a->second, b->second}, std::pair{b->second, a->second}}) {
      auto& slot = table[x * n + y];
      if (slot && *slot != d) schema("conflicting distances for '" + key + "'");
      slot = d;
    }
  }

  std::vector<Rational> full;
  full.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!table[i * n + k]) schema("missing distance " + names[i] + "," + names[k]);
      full.push_back(*table[i * n + k]);
    }
  }
  return PointedMetricSpace::finite(base, std::move(names), std::move(full));
}

json space_to_json(const PointedMetricSpace& s) {
  if (!s.is_finite()) return {{"kind", "interval"}};
  json dist = json::object();
  const auto& names = s.names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t k = i + 1; k < names.size(); ++k) {
      dist[names[i] + "," + names[k]] = to_string(s.table(i, k));
    }
  }
  return {{"kind", "finite"}, {"base", s.base_name()}, {"points", names}, {"dist", dist}};
}

std::optional<PointedMetricSpace> builtin_space(std::string_view name) {
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") name.remove_suffix(5);
  if (auto slash = name.find_last_of('/'); slash != std::string_view::npos) {
    name.remove_prefix(slash + 1);
  }
  if (name == "interval") return PointedMetricSpace::interval();
  for (auto [prefix, prefix_kind] : {std::pair{std::string_view("lemma32-m"), 0},
                                     std::pair{std::string_view("lemma31-m"), 1}}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    auto digits = name.substr(prefix.size());
    int m = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || m < 1 || m > 64) {
      return std::nullopt;
    }
    return prefix_kind == 0 ? PointedMetricSpace::conjugacy_space(m)
                            : PointedMetricSpace::prefix_space(m);
  }
  return std::nullopt;
}

json load_json(const std::string& source) {
  auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    try {
      return json::parse(source);
    } catch (const json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot read '" + source + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + source + "': " + e.what());
  }
}

PointedMetricSpace resolve_space(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return space_from_json(load_json(spec));
  if (auto s = builtin_space(spec)) return *s;
  throw std::invalid_argument("unknown space '" + spec + "'");
}

json matching_to_json(const NormResult& r) {
  json pairs = json::array();
  for (auto [i, j] : r.matching.pairs()) pairs.push_back({i, j});
  std::vector<int> map(r.matching.map().begin(), r.matching.map().end());
  return {{"k", r.matching.k()},
          {"map", map},
          {"cost", to_string(r.value)},
          {"pairs", pairs},
          {"fixed", r.matching.fixed()}};
}

NormResult matching_from_json(const json& j) {
  const auto& map = field(j, "map");
  if (!map.is_array()) schema("map must be an array");
  std::vector<int> images;
  for (const auto& x : map) {
    if (!x.is_number_integer()) schema("map entries must be integers");
    images.push_back(x.get<int>());
  }
  SigmaMatching m(std::move(images));
  const auto& k = field(j, "k");
  if (!k.is_number_integer() || k.get<int>() != m.k()) schema("k does not match map length");
  return {rational(field(j, "cost"), "cost"), std::move(m)};
}

PointMap point_map_from_json(const json& j, const PointedMetricSpace& space) {
  if (j.contains("scale")) return PointMap::scaling(rational(j.at("scale"), "scale"));
  if (j.contains("knots")) {
    std::vector<Knot> knots;
    for (const auto& k : j.at("knots")) {
      if (!k.is_array() || k.size() != 2) schema("knot must be a [t, value] pair");
      knots.push_back({rational(k[0], "knot"), rational(k[1], "knot")});
    }
    return PointMap::piecewise_linear(std::move(knots));
  }
  const auto& table = field(j, "map");
  if (!table.is_object()) schema("map must be an object");
  std::map<Point, Point> mapping;
  auto point = [&space](const std::string& name) {
    Word w = space.parse(name);
    if (w.size() != 1 || w[0].sign != 1) schema("'" + name + "' is not a point");
    return w[0].point;
  };
  for (const auto& [from, to] : table.items()) mapping[point(from)] = point(text(to, "image"));
  return PointMap::table(space, space, std::move(mapping));
}

json point_map_to_json(const PointMap& h) {
  if (h.is_scaling()) return {{"scale", to_string(h.scale())}};
  if (h.is_piecewise()) {
    json knots = json::array();
    for (const auto& k : h.knots()) knots.push_back({to_string(k.t), to_string(k.value)});
    return {{"knots", knots}};
  }
  json table = json::object();
  for (const auto& [from, to] : h.table_entries()) {
    table[h.domain().name_of(from)] = h.codomain().name_of(to);
  }
  return {{"map", table}};
}

PartialContraction partial_contraction_from_json(const json& j) {
  PartialContraction p;
  const auto& pts = field(j, "points");
  const auto& vals = field(j, "values");
  if (!pts.is_array() || !vals.is_array()) schema("points and values must be arrays");
  for (const auto& x : pts) p.points.push_back(rational(x, "point"));
  for (const auto& x : vals) p.values.push_back(rational(x, "value"));
  return p;
}

json partial_contraction_to_json(const PartialContraction& p) {
  json pts = json::array();
  json vals = json::array();
  for (const auto& x : p.points) pts.push_back(to_string(x));
  for (const auto& x : p.values) vals.push_back(to_string(x));
  return {{"points", pts}, {"values", vals}};
}

json decomposition_to_json(const ConjugateDecomposition& d) {
  const auto space = PointedMetricSpace::conjugacy_space(d.m);
  json factors = json::array();
  for (const auto& f : d.factors) {
    factors.push_back({{"g", space.format(f.g)}, {"a", space.format(Word{f.a})}});
  }
  return {{"m", d.m}, {"target", space.format(d.target)}, {"factors", factors}};
}

ConjugateDecomposition decomposition_from_json(const json& j) {
  ConjugateDecomposition d;
  const auto& m = field(j, "m");
  if (!m.is_number_integer()) schema("m must be an integer");
  d.m = m.get<int>();
  d.target = parse_word(text(field(j, "target"), "target"));
  const auto& factors = field(j, "factors");
  if (!factors.is_array()) schema("factors must be an array");
  for (const auto& f : factors) {
    Word a = parse_word(text(field(f, "a"), "a"));
    if (a.size() != 1) schema("factor letter must be a single letter");
    d.factors.push_back({parse_word(text(field(f, "g"), "g")), a[0]});
  }
  return d;
}

json power_certificate_to_json(const PowerCertificate& p, const PointedMetricSpace& s) {
  json bases = json::array();
  for (const auto& x : p.bases) bases.push_back(s.format(x));
  return {{"n", p.n}, {"c", to_string(p.c)}, {"target", s.format(p.target)}, {"bases", bases}};
}

PowerCertificate power_certificate_from_json(const json& j, const PointedMetricSpace& s) {
  PowerCertificate p;
  const auto& n = field(j, "n");
  if (!n.is_number_integer()) schema("n must be an integer");
  p.n = n.get<int>();
  p.c = rational(field(j, "c"), "c");
  p.target = s.parse(text(field(j, "target"), "target"));
  const auto& bases = field(j, "bases");
  if (!bases.is_array()) schema("bases must be an array");
  for (const auto& b : bases) p.bases.push_back(s.parse(text(b, "base")));
  return p;
}

Certificate certificate_from_json(const json& j, const PointedMetricSpace& s) {
  if (j.is_object() && j.contains("factors")) return decomposition_from_json(j);
  if (j.is_object() && j.contains("bases")) return power_certificate_from_json(j, s);
  schema("certificate has neither \"factors\" nor \"bases\"");
}

}  // namespace graev::io
