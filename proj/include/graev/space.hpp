#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graev/rational.hpp"
#include "graev/word.hpp"

namespace graev {

enum class SpaceKind { kFinite, kInterval };

// A failed metric axiom, naming the offending pair or triple of points.
struct MetricViolation {
  std::string axiom;
  std::vector<std::string> points;
  std::string message;
};

// A set X with base point e and an exact metric d. Either a finite table of
// named points or the rational unit interval with base point 0.
//
// Instances are immutable. Generator names equal to the base name are mapped
// to BasePoint by canonical(), so words over a space never need to know how
// its base point is spelled.
class PointedMetricSpace {
 public:
  static PointedMetricSpace interval();

  // `distances` is an n x n row-major table over `names` (which must contain
  // `base`). Throws std::invalid_argument when the table is not a metric.
  static PointedMetricSpace finite(std::string base, std::vector<std::string> names,
                                   std::vector<Rational> distances);
  // Same, skipping validation. Only useful for exercising validate_metric.
  static PointedMetricSpace finite_unchecked(std::string base, std::vector<std::string> names,
                                             std::vector<Rational> distances);

  // {e, e1..em}: d(e, e_i) = 1, d(e_i, e_j) = 2 for i != j.
  static PointedMetricSpace conjugacy_space(int m);
  // {e, f1..fm}: d(f_i, f_j) = |i - j|, d(f_i, e) = i. The 1/m grid of [0,1]
  // scaled by m, carried onto the basis f_i = e_1 ... e_i.
  static PointedMetricSpace prefix_space(int m);

  SpaceKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == SpaceKind::kFinite; }
  const std::string& base_name() const { return base_name_; }
  const std::vector<std::string>& names() const { return names_; }
  // All points of a finite space, base point first. Empty for the interval.
  std::vector<Point> points() const;

  // x and x^-1 for every non-base point of a finite space, sorted.
  std::vector<Letter> letters() const;

  bool contains(const Point& p) const;
  // Maps the base point's name to BasePoint. Throws std::invalid_argument
  // when p is not a point of this space.
  Point canonical(const Point& p) const;
  Word resolve(const Word& w) const;
  Word parse(std::string_view text) const;

  Rational dist(const Point& a, const Point& b) const;
  // Printable name of a canonical point ("e" or "0" for the base).
  std::string name_of(const Point& p) const;
  std::string format(const Word& w) const;

  // Raw table access for finite spaces.
  const Rational& table(std::size_t i, std::size_t j) const { return table_[i * names_.size() + j]; }

 private:
  PointedMetricSpace() = default;
  std::size_t index_of(const Point& p) const;

  SpaceKind kind_ = SpaceKind::kInterval;
  std::string base_name_;
  std::size_t base_index_ = 0;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<Rational> table_;
};

// Checks d(a,b) >= 0, d(a,b) = 0 iff a = b, symmetry, and every triangle.
std::optional<MetricViolation> validate_metric(const PointedMetricSpace& s);

// The extension of d to signed letters: same signs give d(x, y), opposite
// signs give d(x, e) + d(e, y). Base-point letters count as positive.
Rational tilde_dist(const Letter& a, const Letter& b, const PointedMetricSpace& s);

}  // namespace graev
