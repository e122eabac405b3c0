#pragma once

#include <cstdint>
#include <random>

#include "graev/maps.hpp"
#include "graev/rational.hpp"
#include "graev/space.hpp"
#include "graev/word.hpp"

namespace graev {

// Seeded generator for the property suites. Draws only from the raw engine
// output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  // Inclusive range.
  long between(long lo, long hi) { return lo + static_cast<long>(below(hi - lo + 1)); }
  bool coin() { return (engine_() >> 17) & 1; }
  // p/q with 1 <= q <= max_den and 0 <= p <= q.
  Rational unit_rational(long max_den);

 private:
  std::mt19937_64 engine_;
};

// A random non-base letter: a generator of a finite space, or a nonzero
// rational with denominator <= max_den on the interval.
Letter random_letter(const PointedMetricSpace& s, Rng& rng, long max_den = 12);

// Length uniform in [min_len, max_len]; not necessarily reduced.
Word random_word(const PointedMetricSpace& s, Rng& rng, int min_len, int max_len,
                 long max_den = 12);

// Reduced, length uniform in [min_len, max_len].
Word random_reduced_word(const PointedMetricSpace& s, Rng& rng, int min_len, int max_len,
                         long max_den = 12);

// Inserts `count` pairs y y^-1 at random positions.
Word insert_cancelling_pairs(const Word& w, int count, const PointedMetricSpace& s, Rng& rng,
                             long max_den = 12);

// 0 in Y plus up to max_points - 1 further distinct rationals, with values
// drawn so that consecutive points (and hence all pairs) are 1-Lipschitz.
PartialContraction random_partial_contraction(Rng& rng, int max_points, long max_den = 12);

// A contraction of s: on the interval either a scaling with gamma <= 1 or the
// extension of a random partial contraction; on a finite space a random
// base-preserving table, retried until it contracts (identity as fallback).
PointMap random_contraction(const PointedMetricSpace& s, Rng& rng);

}  // namespace graev
