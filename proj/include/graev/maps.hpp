#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graev/rational.hpp"
#include "graev/space.hpp"
#include "graev/word.hpp"

namespace graev {

// Breakpoint of a piecewise-linear map on [0,1].
struct Knot {
  Rational t;
  Rational value;
  friend bool operator==(const Knot&, const Knot&) = default;
};

// A base-point-preserving map h: X -> X', extended letterwise to words.
class PointMap {
 public:
  // Finite table. Unlisted base points map to the base point; any other
  // unlisted point is outside the domain. Throws if h(e) != e.
  static PointMap table(PointedMetricSpace domain, PointedMetricSpace codomain,
                        std::map<Point, Point> mapping);
  // t -> gamma t on [0,1], gamma > 0. Images above 1 are rejected on apply.
  static PointMap scaling(Rational gamma);
  // Linear between consecutive knots, constant after the last one. The first
  // knot must be (0, 0); knots strictly increasing in t; values in [0,1].
  static PointMap piecewise_linear(std::vector<Knot> knots);
  static PointMap identity(const PointedMetricSpace& s);
  // Sends every point to the base point.
  static PointMap collapse(const PointedMetricSpace& s);

  const PointedMetricSpace& domain() const { return domain_; }
  const PointedMetricSpace& codomain() const { return codomain_; }

  bool is_table() const { return std::holds_alternative<Table>(rule_); }
  bool is_scaling() const { return std::holds_alternative<Scaling>(rule_); }
  bool is_piecewise() const { return std::holds_alternative<Piecewise>(rule_); }
  const std::map<Point, Point>& table_entries() const { return std::get<Table>(rule_).mapping; }
  const Rational& scale() const { return std::get<Scaling>(rule_).gamma; }
  const std::vector<Knot>& knots() const { return std::get<Piecewise>(rule_).knots; }

  // Throws std::invalid_argument when p is outside the domain.
  Point apply(const Point& p) const;

 private:
  struct Table {
    std::map<Point, Point> mapping;
  };
  struct Scaling {
    Rational gamma;
  };
  struct Piecewise {
    std::vector<Knot> knots;
  };
  using Rule = std::variant<Table, Scaling, Piecewise>;

  PointMap(PointedMetricSpace domain, PointedMetricSpace codomain, Rule rule)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), rule_(std::move(rule)) {}

  PointedMetricSpace domain_;
  PointedMetricSpace codomain_;
  Rule rule_;
};

// h~(x_1 ... x_k) = h(x_1)^{s_1} ... h(x_k)^{s_k}, reduced.
Word extend_endomorphism(const PointMap& h, const Word& w);

// d'(h(x), h(y)) <= d(x, y) wherever checkable: all pairs of a table, |gamma|
// for a scaling, and every segment slope of a piecewise-linear map.
bool check_contraction(const PointMap& h);

// A map h* on a finite Y subset of [0,1] containing 0, with h*(0) = 0.
struct PartialContraction {
  std::vector<Rational> points;
  std::vector<Rational> values;
};

// Empty when p is a valid partial contraction, otherwise the reason.
std::optional<std::string> partial_contraction_error(const PartialContraction& p);

// Affine interpolation between consecutive points of Y, constant to the right
// of max(Y). Throws std::invalid_argument when p is invalid.
PointMap extend_partial_contraction(const PartialContraction& p);

// (N(h~_gamma(w)), gamma N(w)) over the interval space.
std::pair<Rational, Rational> scaling_norm_law(const Rational& gamma, const Word& w);

// The map k/m -> f_k, 0 -> e from the 1/m grid of [0,1] onto prefix_space(m).
PointMap phi_map(int m);

// Applies phi_map(m) to a word on the 1/m grid. With `to_e_basis`, the result
// is further rewritten through f_k = e_1 ... e_k. Throws std::invalid_argument
// for points off the grid.
Word apply_phi(int m, const Word& w, bool to_e_basis = false);

// Generator images that identify two bases of one free group.
struct BasisTranslation {
  std::map<Point, Word> forward;   // X_1 generator -> word over X_2
  std::map<Point, Word> backward;  // X_2 generator -> word over X_1

  // f_i -> e_1 ... e_i and e_i -> f_{i-1}^-1 f_i.
  static BasisTranslation prefix_products(int m);
  static BasisTranslation identity(const PointedMetricSpace& s);
};

// Homomorphic image of w under generator images. Throws std::invalid_argument
// for letters with no image.
Word translate(const Word& w, const std::map<Point, Word>& images);

struct CrossExtensionResult {
  bool hypothesis = false;  // rho_1 on X_2 equals d_2 and rho_2 on X_1 equals d_1
  bool agrees = false;      // every sample pair has equal distances
  std::string detail;       // first failure, if any
  bool ok() const { return hypothesis && agrees; }
};

// Checks that the Graev metrics of s1 and s2 coincide under `t`. The
// hypothesis is verified on all generator pairs first; samples are pairs of
// words over s1. Throws std::invalid_argument when `t` is not a mutually
// inverse basis correspondence.
CrossExtensionResult check_cross_extension(const PointedMetricSpace& s1,
                                           const PointedMetricSpace& s2,
                                           const BasisTranslation& t,
                                           const std::vector<std::pair<Word, Word>>& samples);

}  // namespace graev
