#pragma once

#include <span>
#include <utility>
#include <vector>

#include "graev/rational.hpp"
#include "graev/space.hpp"
#include "graev/word.hpp"

namespace graev {

// An involution of {1..k}, stored as the 1-based image array. Its 2-cycles
// are the matched pairs, the rest are fixed points. The empty matching has k = 0.
class SigmaMatching {
 public:
  SigmaMatching() = default;
  // Throws std::invalid_argument unless `map` is an involution of {1..k}.
  explicit SigmaMatching(std::vector<int> map);
  static SigmaMatching identity(int k);

  int k() const { return static_cast<int>(map_.size()); }
  std::span<const int> map() const { return map_; }
  int operator()(int i) const { return map_[i - 1]; }

  // Pairs (i, j) with i < j, ordered by i.
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<int> fixed() const;

  friend bool operator==(const SigmaMatching&, const SigmaMatching&) = default;
  friend bool operator<(const SigmaMatching& a, const SigmaMatching& b) { return a.map_ < b.map_; }

 private:
  std::vector<int> map_;
};

// Literal membership test for sigma_k: alpha is an involution, and every pair
// i < j satisfies one of
//   1. alpha(j) < i and alpha(j) < alpha(i) < j
//   2. alpha(i) > j and i < alpha(j) < alpha(i)
//   3. i < alpha(j), alpha(i) < alpha(j) and alpha(i) < j
//   4. alpha(j) = i
// `alpha` holds 1-based images. Throws std::invalid_argument if it is not a
// permutation of {1..k}.
bool is_sigma(std::span<const int> alpha);

inline constexpr int kMaxBruteForceLength = 10;

// All of sigma_k, obtained by filtering the involutions of S_k through
// is_sigma. Sorted by image array. Requires 1 <= k <= kMaxBruteForceLength.
std::vector<SigmaMatching> enumerate_sigma(int k);

// sum_i d~(x_i, x_{alpha(i)}^-1) for the given letters (not halved).
Rational matching_cost(std::span<const Letter> letters, const SigmaMatching& alpha,
                       const PointedMetricSpace& s);

// Half the minimum of matching_cost over all of sigma_k, evaluated on the
// letters exactly as written (no reduction). |w| <= kMaxBruteForceLength.
Rational norm_bruteforce(const Word& w, const PointedMetricSpace& s);

struct NormResult {
  Rational value;
  SigmaMatching matching;  // optimal, over the letters the DP was run on
};

// Interval DP over non-crossing matchings of the given letters, O(k^3) time.
// Works on any letter sequence; ties prefer leaving the right end unmatched,
// then the smallest partner index.
NormResult min_cost_matching(std::span<const Letter> letters, const PointedMetricSpace& s);

// The Graev norm of w: min_cost_matching on reduce(w). The matching refers to
// positions of the reduced word.
NormResult norm_dp(const Word& w, const PointedMetricSpace& s);

inline Rational norm(const Word& w, const PointedMetricSpace& s) { return norm_dp(w, s).value; }

// rho(u, v) = N(u v^-1).
Rational graev_metric(const Word& u, const Word& v, const PointedMetricSpace& s);

}  // namespace graev
