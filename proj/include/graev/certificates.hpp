#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graev/maps.hpp"
#include "graev/rational.hpp"
#include "graev/space.hpp"
#include "graev/word.hpp"

namespace graev {

// N(w) < c, strictly.
bool in_ball(const Word& w, const Rational& c, const PointedMetricSpace& s);

// One conjugated letter g a g^-1. `a` may be the base point (the identity).
struct ConjugateFactor {
  Word g;
  Letter a;
  friend bool operator==(const ConjugateFactor&, const ConjugateFactor&) = default;
};

// target = g_1 a_1 g_1^-1 ... g_r a_r g_r^-1 with r <= m - 1, over the
// generators e1..em of PointedMetricSpace::conjugacy_space(m).
struct ConjugateDecomposition {
  int m = 1;
  Word target;
  std::vector<ConjugateFactor> factors;
};

Word product(const ConjugateDecomposition& d);

// On conjugacy_space(m): if N(w) < m, writes w as exactly N(w) conjugated
// letters read off an optimal matching. Zero-cost pairs stay matched, every
// other position becomes one factor whose conjugator is the product of the
// matched letters before it. Returns nullopt when N(w) >= m. Throws
// std::invalid_argument for letters outside e1..em.
std::optional<ConjugateDecomposition> decompose_conjugates(const Word& w, int m);

// Reason the decomposition is invalid, or nullopt.
std::optional<std::string> conjugate_decomposition_error(const ConjugateDecomposition& d);
inline bool verify_conjugate_decomposition(const ConjugateDecomposition& d) {
  return !conjugate_decomposition_error(d);
}

// A witness target = x_1^n ... x_k^n with N(x_i) < c: membership in the
// subgroup generated by n-th powers of the open ball of radius c.
struct PowerCertificate {
  std::vector<Word> bases;
  int n = 3;
  Rational c = 1;
  Word target;
};

// Reason the certificate fails over `s`, or nullopt. Rejects n that is not an
// odd integer >= 3 and c <= 0.
std::optional<std::string> power_certificate_error(const PowerCertificate& p,
                                                   const PointedMetricSpace& s);
inline bool verify_power_certificate(const PowerCertificate& p, const PointedMetricSpace& s) {
  return !power_certificate_error(p, s);
}

// Pushes a certificate through a contraction: bases h~(x_i), target
// h~(target). Throws std::invalid_argument when p does not verify over
// h.domain() or h is not a contraction.
PowerCertificate transport_certificate(const PowerCertificate& p, const PointMap& h);

struct SearchBudget {
  int max_factors = 2;
  int max_base_length = 2;
  std::size_t max_nodes = 200000;
};

struct SearchResult {
  std::optional<PowerCertificate> certificate;  // nullopt means unknown
  std::size_t explored = 0;
  std::size_t candidate_bases = 0;
};

// Breadth-first search over products of at most max_factors n-th powers of
// reduced words of length <= max_base_length with N < c. Words are drawn from
// all generators of a finite space, or the points occurring in w for the
// interval. Expansion follows shortlex order, so the result is deterministic.
// Never claims non-membership.
SearchResult search_power_certificate(const Word& w, const Rational& c, int n,
                                      const SearchBudget& budget, const PointedMetricSpace& s);

// Sum of the signs of the occurrences of `generator` in w.
long exponent_sum(const Word& w, const Point& generator);

struct ObstructionReport {
  int m = 0;
  int n = 0;
  std::vector<long> sums;  // exponent sums of e1..em
  std::string describe() const;
};

// Fires when every exponent sum of e1..em is nonzero mod n. A product of
// m - 1 conjugated letters times n-th powers always has some sum = 0 mod n,
// so such a word is not of that form. Throws for letters outside e1..em.
std::optional<ObstructionReport> exponent_obstruction(const Word& w, int m, int n);

}  // namespace graev
