#include "graev/space.hpp"

#include <algorithm>
#include <stdexcept>

namespace graev {

PointedMetricSpace PointedMetricSpace::interval() {
  PointedMetricSpace s;
  s.kind_ = SpaceKind::kInterval;
  s.base_name_ = "0";
  return s;
}

PointedMetricSpace PointedMetricSpace::finite_unchecked(std::string base,
                                                        std::vector<std::string> names,
                                                        std::vector<Rational> distances) {
  if (distances.size() != names.size() * names.size()) {
    throw std::invalid_argument("distance table has wrong size");
  }
  PointedMetricSpace s;
  s.kind_ = SpaceKind::kFinite;
  s.base_name_ = std::move(base);
  s.names_ = std::move(names);
  s.table_ = std::move(distances);
  for (std::size_t i = 0; i < s.names_.size(); ++i) {
    if (!s.index_.emplace(s.names_[i], i).second) {
      throw std::invalid_argument("duplicate point '" + s.names_[i] + "'");
    }
  }
  auto it = s.index_.find(s.base_name_);
  if (it == s.index_.end()) throw std::invalid_argument("base point '" + s.base_name_ + "' missing");
  s.base_index_ = it->second;
  return s;
}

PointedMetricSpace PointedMetricSpace::finite(std::string base, std::vector<std::string> names,
                                              std::vector<Rational> distances) {
  auto s = finite_unchecked(std::move(base), std::move(names), std::move(distances));
  if (auto v = validate_metric(s)) throw std::invalid_argument("not a metric: " + v->message);
  return s;
}

PointedMetricSpace PointedMetricSpace::conjugacy_space(int m) {
  if (m < 0) throw std::invalid_argument("negative generator count");
  std::vector<std::string> names{"e"};
  for (int i = 1; i <= m; ++i) names.push_back("e" + std::to_string(i));
  const std::size_t n = names.size();
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d[i * n + j] = (i == 0 || j == 0) ? 1 : 2;
    }
  }
  return finite("e", std::move(names), std::move(d));
}

PointedMetricSpace PointedMetricSpace::prefix_space(int m) {
  if (m < 0) throw std::invalid_argument("negative generator count");
  std::vector<std::string> names{"e"};
  for (int i = 1; i <= m; ++i) names.push_back("f" + std::to_string(i));
  const std::size_t n = names.size();
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      d[i * n + j] = i > j ? i - j : j - i;
    }
  }
  return finite("e", std::move(names), std::move(d));
}

std::vector<Point> PointedMetricSpace::points() const {
  std::vector<Point> out;
  if (!is_finite()) return out;
  out.push_back(Point::base());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i != base_index_) out.push_back(Point::generator(names_[i]));
  }
  return out;
}

std::vector<Letter> PointedMetricSpace::letters() const {
  std::vector<Letter> out;
  for (const auto& p : points()) {
    if (p.is_base()) continue;
    out.push_back(pos(p));
    out.push_back(neg(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PointedMetricSpace::contains(const Point& p) const {
  if (p.is_base()) return true;
  if (is_finite()) return p.is_generator() && index_.count(p.name()) != 0;
  return p.is_rational() && p.coordinate() >= 0 && p.coordinate() <= 1;
}

Point PointedMetricSpace::canonical(const Point& p) const {
  if (!contains(p)) {
    throw std::invalid_argument("point '" + to_string(p) + "' is not in the space");
  }
  if (p.is_generator() && p.name() == base_name_) return Point::base();
  return p;
}

Word PointedMetricSpace::resolve(const Word& w) const {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const auto& a : w) out.push_back({canonical(a.point), a.sign});
  return Word(std::move(out));
}

Word PointedMetricSpace::parse(std::string_view text) const { return resolve(parse_word(text)); }

std::size_t PointedMetricSpace::index_of(const Point& p) const {
  if (p.is_base()) return base_index_;
  auto it = p.is_generator() ? index_.find(p.name()) : index_.end();
  if (it == index_.end()) throw std::invalid_argument("point '" + to_string(p) + "' is not in the space");
  return it->second;
}

Rational PointedMetricSpace::dist(const Point& a, const Point& b) const {
  if (is_finite()) return table(index_of(a), index_of(b));
  auto coord = [this](const Point& p) -> Rational {
    if (p.is_base()) return 0;
    if (!contains(p)) throw std::invalid_argument("point '" + to_string(p) + "' is not in the space");
    return p.coordinate();
  };
  return abs_diff(coord(a), coord(b));
}

std::string PointedMetricSpace::name_of(const Point& p) const {
  return p.is_base() ? base_name_ : to_string(p);
}

std::string PointedMetricSpace::format(const Word& w) const {
  std::string out;
  for (const auto& a : w) {
    if (!out.empty()) out += ' ';
    out += name_of(a.point);
    if (a.sign < 0) out += "^-1";
  }
  return out;
}

std::optional<MetricViolation> validate_metric(const PointedMetricSpace& s) {
  if (!s.is_finite()) return std::nullopt;
  const auto& names = s.names();
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& d = s.table(i, j);
      if (d < 0) {
        return MetricViolation{"nonnegativity", {names[i], names[j]},
                               "d(" + names[i] + "," + names[j] + ") = " + to_string(d) + " < 0"};
      }
      if (i == j && d != 0) {
        return MetricViolation{"identity", {names[i]},
                               "d(" + names[i] + "," + names[i] + ") = " + to_string(d) + " != 0"};
      }
      if (i != j && d == 0) {
        return MetricViolation{"identity", {names[i], names[j]},
                               "d(" + names[i] + "," + names[j] + ") = 0 for distinct points"};
      }
      if (d != s.table(j, i)) {
        return MetricViolation{"symmetry", {names[i], names[j]},
                               "d(" + names[i] + "," + names[j] + ") != d(" + names[j] + "," +
                                   names[i] + ")"};
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (s.table(x, z) > s.table(x, y) + s.table(y, z)) {
          return MetricViolation{
              "triangle",
              {names[x], names[y], names[z]},
              "d(" + names[x] + "," + names[z] + ") = " + to_string(s.table(x, z)) + " > d(" +
                  names[x] + "," + names[y] + ") + d(" + names[y] + "," + names[z] + ") = " +
                  to_string(s.table(x, y) + s.table(y, z))};
        }
      }
    }
  }
  return std::nullopt;
}

Rational tilde_dist(const Letter& a, const Letter& b, const PointedMetricSpace& s) {
  const int sa = a.is_identity() ? 1 : a.sign;
  const int sb = b.is_identity() ? 1 : b.sign;
  if (sa == sb) return s.dist(a.point, b.point);
  const Point e = Point::base();
  return s.dist(a.point, e) + s.dist(e, b.point);
}

}  // namespace graev
