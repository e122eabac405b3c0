#include "graev/random.hpp"

#include <algorithm>
#include <set>

namespace graev {

Rational Rng::unit_rational(long max_den) {
  long q = between(1, max_den);
  long p = between(0, q);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Letter random_letter(const PointedMetricSpace& s, Rng& rng, long max_den) {
  const int sign = rng.coin() ? 1 : -1;
  if (s.is_finite()) {
    auto pts = s.points();
    return {pts[1 + rng.below(pts.size() - 1)], sign};
  }
  Rational q;
  do {
    q = rng.unit_rational(max_den);
  } while (q == 0);
  return {Point::rational(q), sign};
}

Word random_word(const PointedMetricSpace& s, Rng& rng, int min_len, int max_len, long max_den) {
  const long len = rng.between(min_len, max_len);
  std::vector<Letter> letters;
  for (long i = 0; i < len; ++i) letters.push_back(random_letter(s, rng, max_den));
  return Word(std::move(letters));
}

Word random_reduced_word(const PointedMetricSpace& s, Rng& rng, int min_len, int max_len,
                         long max_den) {
  const long len = rng.between(min_len, max_len);
  std::vector<Letter> letters;
  while (static_cast<long>(letters.size()) < len) {
    Letter a = random_letter(s, rng, max_den);
    if (!letters.empty() && letters.back() == a.inverse()) continue;
    letters.push_back(a);
  }
  return Word(std::move(letters));
}

Word insert_cancelling_pairs(const Word& w, int count, const PointedMetricSpace& s, Rng& rng,
                             long max_den) {
  std::vector<Letter> letters(w.begin(), w.end());
  for (int i = 0; i < count; ++i) {
    Letter y = random_letter(s, rng, max_den);
    auto at = letters.begin() + static_cast<long>(rng.below(letters.size() + 1));
    at = letters.insert(at, y.inverse());
    letters.insert(at, y);
  }
  return Word(std::move(letters));
}

PartialContraction random_partial_contraction(Rng& rng, int max_points, long max_den) {
  std::set<Rational> ys{Rational(0)};
  const long extra = rng.between(0, max_points - 1);
  for (long attempts = 0; static_cast<long>(ys.size()) < extra + 1 && attempts < 100; ++attempts) {
    ys.insert(rng.unit_rational(max_den));
  }

  PartialContraction p;
  Rational prev_y = 0;
  Rational prev_v = 0;
  for (const auto& y : ys) {
    Rational v = 0;
    if (y != 0) {
      // Uniform on a grid of [max(0, prev_v - gap), min(1, prev_v + gap)].
      const Rational gap = y - prev_y;
      Rational lo = prev_v - gap;
      Rational hi = prev_v + gap;
      if (lo < 0) lo = 0;
      if (hi > 1) hi = 1;
      const long steps = max_den;
      v = lo + (hi - lo) * Rational(rng.between(0, steps), steps);
      v.canonicalize();
    }
    p.points.push_back(y);
    p.values.push_back(v);
    prev_y = y;
    prev_v = v;
  }
  // Present Y in a shuffled order; the extension must not rely on sorting.
  for (std::size_t i = p.points.size(); i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(p.points[i - 1], p.points[j]);
    std::swap(p.values[i - 1], p.values[j]);
  }
  return p;
}

PointMap random_contraction(const PointedMetricSpace& s, Rng& rng) {
  if (!s.is_finite()) {
    if (rng.coin()) {
      Rational gamma;
      do {
        gamma = rng.unit_rational(12);
      } while (gamma == 0);
      return PointMap::scaling(gamma);
    }
    return extend_partial_contraction(random_partial_contraction(rng, 6));
  }
  const auto pts = s.points();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::map<Point, Point> mapping;
    for (const auto& p : pts) {
      mapping[p] = p.is_base() ? p : pts[rng.below(pts.size())];
    }
    auto h = PointMap::table(s, s, std::move(mapping));
    if (check_contraction(h)) return h;
  }
  return PointMap::identity(s);
}

}  // namespace graev
