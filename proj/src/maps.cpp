#include "graev/maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "graev/norm.hpp"

namespace graev {

PointMap PointMap::table(PointedMetricSpace domain, PointedMetricSpace codomain,
                         std::map<Point, Point> mapping) {
  std::map<Point, Point> canon;
  for (const auto& [from, to] : mapping) {
    Point x = domain.canonical(from);
    Point y = codomain.canonical(to);
    if (x.is_base() && !y.is_base()) {
      throw std::invalid_argument("map must send the base point to the base point");
    }
    canon[x] = y;
  }
  canon.emplace(Point::base(), Point::base());
  return PointMap(std::move(domain), std::move(codomain), Table{std::move(canon)});
}

PointMap PointMap::scaling(Rational gamma) {
  if (gamma <= 0) throw std::invalid_argument("scaling factor must be positive");
  auto interval = PointedMetricSpace::interval();
  return PointMap(interval, interval, Scaling{std::move(gamma)});
}

PointMap PointMap::piecewise_linear(std::vector<Knot> knots) {
  if (knots.empty() || knots.front().t != 0 || knots.front().value != 0) {
    throw std::invalid_argument("first knot must be (0, 0)");
  }
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].t < 0 || knots[i].t > 1 || knots[i].value < 0 || knots[i].value > 1) {
      throw std::invalid_argument("knot outside [0,1]");
    }
    if (i > 0 && knots[i].t <= knots[i - 1].t) {
      throw std::invalid_argument("knots must be strictly increasing");
    }
  }
  auto interval = PointedMetricSpace::interval();
  return PointMap(interval, interval, Piecewise{std::move(knots)});
}

PointMap PointMap::identity(const PointedMetricSpace& s) {
  if (!s.is_finite()) return scaling(1);
  std::map<Point, Point> mapping;
  for (const auto& p : s.points()) mapping.emplace(p, p);
  return table(s, s, std::move(mapping));
}

PointMap PointMap::collapse(const PointedMetricSpace& s) {
  if (!s.is_finite()) return piecewise_linear({{0, 0}});
  std::map<Point, Point> mapping;
  for (const auto& p : s.points()) mapping.emplace(p, Point::base());
  return table(s, s, std::move(mapping));
}

namespace {

Rational evaluate(const std::vector<Knot>& knots, const Rational& t) {
  if (t >= knots.back().t) return knots.back().value;
  auto upper = std::upper_bound(knots.begin(), knots.end(), t,
                                [](const Rational& x, const Knot& k) { return x < k.t; });
  const Knot& b = *upper;
  const Knot& a = *(upper - 1);
  return a.value * (b.t - t) / (b.t - a.t) + b.value * (t - a.t) / (b.t - a.t);
}

}  // namespace

Point PointMap::apply(const Point& p) const {
  Point x = domain_.canonical(p);
  if (const auto* table = std::get_if<Table>(&rule_)) {
    auto it = table->mapping.find(x);
    if (it == table->mapping.end()) {
      throw std::invalid_argument("point '" + to_string(x) + "' is outside the map's domain");
    }
    return it->second;
  }
  if (x.is_base()) return x;
  Rational image = std::holds_alternative<Scaling>(rule_)
                       ? std::get<Scaling>(rule_).gamma * x.coordinate()
                       : evaluate(std::get<Piecewise>(rule_).knots, x.coordinate());
  return codomain_.canonical(Point::rational(image));
}

Word extend_endomorphism(const PointMap& h, const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& a : w) out.push_back({h.apply(a.point), a.sign});
  return reduce(Word(std::move(out)));
}

bool check_contraction(const PointMap& h) {
  if (h.is_scaling()) return h.scale() <= 1;
  if (h.is_piecewise()) {
    const auto& k = h.knots();
    for (std::size_t i = 1; i < k.size(); ++i) {
      if (abs_diff(k[i].value, k[i - 1].value) > k[i].t - k[i - 1].t) return false;
    }
    return true;
  }
  const auto& entries = h.table_entries();
  for (auto a = entries.begin(); a != entries.end(); ++a) {
    for (auto b = std::next(a); b != entries.end(); ++b) {
      if (h.codomain().dist(a->second, b->second) > h.domain().dist(a->first, b->first)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<std::string> partial_contraction_error(const PartialContraction& p) {
  if (p.points.size() != p.values.size()) return "points and values differ in length";
  bool has_zero = false;
  for (std::size_t i = 0; i < p.points.size(); ++i) {
    const auto& y = p.points[i];
    const auto& v = p.values[i];
    if (y < 0 || y > 1) return "point " + to_string(y) + " is outside [0,1]";
    if (v < 0 || v > 1) return "value " + to_string(v) + " is outside [0,1]";
    if (y == 0) {
      has_zero = true;
      if (v != 0) return "h*(0) must be 0";
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (p.points[j] == y) return "point " + to_string(y) + " listed twice";
      if (abs_diff(p.values[j], v) > abs_diff(p.points[j], y)) {
        return "|h*(" + to_string(p.points[j]) + ") - h*(" + to_string(y) + ")| exceeds |" +
               to_string(p.points[j]) + " - " + to_string(y) + "|";
      }
    }
  }
  if (!has_zero) return "Y must contain 0";
  return std::nullopt;
}

PointMap extend_partial_contraction(const PartialContraction& p) {
  if (auto err = partial_contraction_error(p)) {
    throw std::invalid_argument("invalid partial contraction: " + *err);
  }
  std::vector<Knot> knots;
  for (std::size_t i = 0; i < p.points.size(); ++i) knots.push_back({p.points[i], p.values[i]});
  std::sort(knots.begin(), knots.end(), [](const Knot& a, const Knot& b) { return a.t < b.t; });
  return PointMap::piecewise_linear(std::move(knots));
}

std::pair<Rational, Rational> scaling_norm_law(const Rational& gamma, const Word& w) {
  const auto interval = PointedMetricSpace::interval();
  const auto h = PointMap::scaling(gamma);
  return {norm(extend_endomorphism(h, w), interval), gamma * norm(w, interval)};
}

PointMap phi_map(int m) {
  if (m < 1) throw std::invalid_argument("phi_map: m must be positive");
  std::map<Point, Point> mapping;
  for (int k = 1; k <= m; ++k) {
    mapping.emplace(Point::rational(Rational(k, m)), Point::generator("f" + std::to_string(k)));
  }
  return PointMap::table(PointedMetricSpace::interval(), PointedMetricSpace::prefix_space(m),
                         std::move(mapping));
}

Word apply_phi(int m, const Word& w, bool to_e_basis) {
  Word image = extend_endomorphism(phi_map(m), w);
  return to_e_basis ? substitute_basis(image, BasisDirection::kFToE) : image;
}

BasisTranslation BasisTranslation::prefix_products(int m) {
  BasisTranslation t;
  for (int i = 1; i <= m; ++i) {
    Word f_i{pos(Point::generator("f" + std::to_string(i)))};
    Word e_i{pos(Point::generator("e" + std::to_string(i)))};
    t.forward.emplace(f_i[0].point, substitute_basis(f_i, BasisDirection::kFToE));
    t.backward.emplace(e_i[0].point, substitute_basis(e_i, BasisDirection::kEToF));
  }
  return t;
}

BasisTranslation BasisTranslation::identity(const PointedMetricSpace& s) {
  BasisTranslation t;
  for (const auto& p : s.points()) {
    if (p.is_base()) continue;
    t.forward.emplace(p, Word{pos(p)});
    t.backward.emplace(p, Word{pos(p)});
  }
  return t;
}

Word translate(const Word& w, const std::map<Point, Word>& images) {
  std::vector<Letter> out;
  for (const auto& a : w) {
    if (a.is_identity()) continue;
    auto it = images.find(a.point);
    if (it == images.end()) {
      throw std::invalid_argument("no image for letter '" + to_string(a) + "'");
    }
    Word piece = a.sign > 0 ? it->second : invert(it->second);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce(Word(std::move(out)));
}

namespace {

void require_basis_correspondence(const PointedMetricSpace& s1, const PointedMetricSpace& s2,
                                  const BasisTranslation& t) {
  auto check_side = [](const PointedMetricSpace& from, const PointedMetricSpace& to,
                       const std::map<Point, Word>& there, const std::map<Point, Word>& back) {
    std::size_t generators = 0;
    for (const auto& p : from.points()) {
      if (p.is_base()) continue;
      ++generators;
      auto it = there.find(p);
      if (it == there.end()) {
        throw std::invalid_argument("translation misses generator '" + to_string(p) + "'");
      }
      for (const auto& a : it->second) to.canonical(a.point);
      Word round_trip = translate(it->second, back);
      if (round_trip != Word{pos(p)}) {
        throw std::invalid_argument("translation is not invertible at '" + to_string(p) + "'");
      }
    }
    if (there.size() != generators) {
      throw std::invalid_argument("translation maps points outside the basis");
    }
  };
  check_side(s1, s2, t.forward, t.backward);
  check_side(s2, s1, t.backward, t.forward);
}

}  // namespace

CrossExtensionResult check_cross_extension(const PointedMetricSpace& s1,
                                           const PointedMetricSpace& s2,
                                           const BasisTranslation& t,
                                           const std::vector<std::pair<Word, Word>>& samples) {
  if (!s1.is_finite() || !s2.is_finite()) {
    throw std::invalid_argument("cross extension needs finite spaces");
  }
  require_basis_correspondence(s1, s2, t);

  CrossExtensionResult result;
  auto lift = [](const Point& p, const std::map<Point, Word>& images) {
    return p.is_base() ? Word{} : images.at(p);
  };

  // rho_1 restricted to X_2 must equal d_2, and rho_2 on X_1 must equal d_1.
  auto hypothesis_side = [&](const PointedMetricSpace& native, const PointedMetricSpace& other,
                             const std::map<Point, Word>& into_other) -> bool {
    const auto pts = native.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Rational rho = graev_metric(lift(pts[i], into_other), lift(pts[j], into_other), other);
        Rational d = native.dist(pts[i], pts[j]);
        if (rho != d) {
          result.detail = "rho(" + native.name_of(pts[i]) + ", " + native.name_of(pts[j]) +
                          ") = " + to_string(rho) + " but d = " + to_string(d);
          return false;
        }
      }
    }
    return true;
  };
  result.hypothesis = hypothesis_side(s2, s1, t.backward) && hypothesis_side(s1, s2, t.forward);
  if (!result.hypothesis) return result;

  for (const auto& [u, v] : samples) {
    Rational rho1 = graev_metric(u, v, s1);
    Rational rho2 = graev_metric(translate(u, t.forward), translate(v, t.forward), s2);
    if (rho1 != rho2) {
      result.detail = "samples (" + s1.format(u) + ", " + s1.format(v) + "): " + to_string(rho1) +
                      " vs " + to_string(rho2);
      return result;
    }
  }
  result.agrees = true;
  return result;
}

}  // namespace graev
