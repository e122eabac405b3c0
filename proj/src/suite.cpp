#include "graev/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "graev/certificates.hpp"
#include "graev/maps.hpp"
#include "graev/norm.hpp"
#include "graev/random.hpp"

namespace graev {

namespace {

class Recorder {
 public:
  Recorder(std::string group, std::string name) {
    outcome_.group = std::move(group);
    outcome_.name = std::move(name);
  }

  // `describe` is only called for the first failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++outcome_.checked;
    if (ok) return;
    if (outcome_.failed++ == 0) outcome_.counterexample = describe();
  }

  PropertyOutcome done() { return std::move(outcome_); }

 private:
  PropertyOutcome outcome_;
};

using Outcomes = std::vector<PropertyOutcome>;

std::uint64_t group_seed(std::uint64_t seed, std::string_view group) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : group) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return seed ^ h;
}

std::vector<PointedMetricSpace> test_spaces() {
  return {PointedMetricSpace::interval(), PointedMetricSpace::conjugacy_space(3),
          PointedMetricSpace::prefix_space(3)};
}

// Interval words draw from a coarse grid so points repeat and cancel.
constexpr long kCoarseDen = 6;

Outcomes run_sigma() {
  Recorder counts("sigma", "sigma_k cardinality is Motzkin(k), k = 1..8");
  std::vector<long> motzkin{1, 1};
  for (int n = 2; n <= 8; ++n) {
    long m = motzkin[n - 1];
    for (int i = 0; i <= n - 2; ++i) m += motzkin[i] * motzkin[n - 2 - i];
    motzkin.push_back(m);
  }
  for (int k = 1; k <= 8; ++k) {
    const auto size = static_cast<long>(enumerate_sigma(k).size());
    counts.check(size == motzkin[k], [&] {
      return "k=" + std::to_string(k) + ": " + std::to_string(size) + " != " +
             std::to_string(motzkin[k]);
    });
  }

  Recorder shape("sigma", "is_sigma <=> non-crossing involution, all of S_k, k <= 8");
  for (int k = 1; k <= 8; ++k) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i + 1;
    do {
      bool involution = true;
      for (int i = 1; i <= k; ++i) involution &= perm[perm[i - 1] - 1] == i;
      bool crossing = false;
      for (int a = 1; a <= k && involution && !crossing; ++a) {
        const int b = perm[a - 1];
        if (b <= a) continue;
        for (int c = a + 1; c < b; ++c) {
          const int d = perm[c - 1];
          if (d > b) crossing = true;
        }
      }
      const bool expected = involution && !crossing;
      shape.check(is_sigma(perm) == expected, [&] {
        std::string s;
        for (int v : perm) s += std::to_string(v) + " ";
        return "alpha = " + s;
      });
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {counts.done(), shape.done()};
}

Outcomes run_words(Rng& rng, const SuiteOptions& o) {
  const auto space = PointedMetricSpace::conjugacy_space(2);

  Recorder confluent("words", "reduce is idempotent and order-independent, |w| <= 12");
  for (std::size_t n = 0; n < o.random_instances; ++n) {
    const Word w = random_word(space, rng, 0, 12);
    std::vector<Letter> letters(w.begin(), w.end());
    // Cancel a random adjacent inverse pair until none is left.
    for (;;) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (letters[i + 1] == letters[i].inverse()) spots.push_back(i);
      }
      if (spots.empty()) break;
      const auto at = static_cast<long>(spots[rng.below(spots.size())]);
      letters.erase(letters.begin() + at, letters.begin() + at + 2);
    }
    const Word r = reduce(w);
    confluent.check(Word(letters) == r && reduce(r) == r && r.is_reduced(),
                    [&] { return "w = " + space.format(w); });
  }

  Recorder inverse("words", "concat(w, invert(w)) is empty");
  for (std::size_t n = 0; n < o.random_instances; ++n) {
    const Word w = random_word(space, rng, 0, 12);
    inverse.check(concat(w, invert(w)).empty(), [&] { return "w = " + space.format(w); });
  }

  Recorder basis("words", "basis substitution round-trips, reduced words of length <= 6");
  for (int m : {2, 3}) {
    const int max_len = m == 2 ? 6 : 4;
    for (const auto& w : reduced_words(PointedMetricSpace::prefix_space(m).letters(), max_len)) {
      const Word there = substitute_basis(w, BasisDirection::kFToE);
      basis.check(substitute_basis(there, BasisDirection::kEToF) == w,
                  [&] { return "f-word " + to_string(w); });
    }
    for (const auto& w : reduced_words(PointedMetricSpace::conjugacy_space(m).letters(), max_len)) {
      const Word there = substitute_basis(w, BasisDirection::kEToF);
      basis.check(substitute_basis(there, BasisDirection::kFToE) == w,
                  [&] { return "e-word " + to_string(w); });
    }
  }
  return {confluent.done(), inverse.done(), basis.done()};
}

Outcomes run_spaces(Rng& rng, const SuiteOptions& o) {
  Recorder finite("spaces", "d~ is a metric on signed letters (finite, exhaustive)");
  Recorder inverse_pair("spaces", "d~(x, x^-1) = 2 d(x, e)");
  Recorder restricts("spaces", "d~ on positive letters equals d");

  auto check_triple = [](Recorder& r, const PointedMetricSpace& s, const Letter& a,
                         const Letter& b, const Letter& c) {
    const Rational ab = tilde_dist(a, b, s);
    const Rational bc = tilde_dist(b, c, s);
    const Rational ac = tilde_dist(a, c, s);
    const bool same_ab = (a.is_identity() && b.is_identity()) || a == b;
    const bool ok = ab >= 0 && (ab == 0) == same_ab && ab == tilde_dist(b, a, s) && ac <= ab + bc;
    r.check(ok, [&] { return to_string(a) + ", " + to_string(b) + ", " + to_string(c); });
  };

  for (const auto& s : {PointedMetricSpace::conjugacy_space(3), PointedMetricSpace::prefix_space(3)}) {
    std::vector<Letter> letters = s.letters();
    letters.push_back(pos(Point::base()));
    for (const auto& a : letters) {
      for (const auto& b : letters) {
        for (const auto& c : letters) check_triple(finite, s, a, b, c);
      }
    }
    for (const auto& p : s.points()) {
      inverse_pair.check(tilde_dist(pos(p), neg(p), s) == 2 * s.dist(p, Point::base()),
                         [&] { return s.name_of(p); });
      for (const auto& q : s.points()) {
        restricts.check(tilde_dist(pos(p), pos(q), s) == s.dist(p, q),
                        [&] { return s.name_of(p) + ", " + s.name_of(q); });
      }
    }
  }

  Recorder interval("spaces", "d~ is a metric on signed letters (interval, random triples)");
  const auto s = PointedMetricSpace::interval();
  for (std::size_t n = 0; n < 2 * o.random_instances; ++n) {
    Letter a = random_letter(s, rng, kCoarseDen);
    Letter b = random_letter(s, rng, kCoarseDen);
    Letter c = random_letter(s, rng, kCoarseDen);
    check_triple(interval, s, a, b, c);
    inverse_pair.check(tilde_dist(a, a.inverse(), s) == 2 * s.dist(a.point, Point::base()),
                       [&] { return to_string(a); });
    restricts.check(tilde_dist(pos(a.point), pos(b.point), s) == s.dist(a.point, b.point),
                    [&] { return to_string(a) + ", " + to_string(b); });
  }
  return {finite.done(), interval.done(), inverse_pair.done(), restricts.done()};
}

Outcomes run_oracle(Rng& rng, const SuiteOptions& o) {
  Recorder exhaustive("oracle", "DP = brute force, all reduced words |w| <= 6 over lemma32-m2");
  const auto s2 = PointedMetricSpace::conjugacy_space(2);
  for (const auto& w : reduced_words(s2.letters(), 6)) {
    const auto r = norm_dp(w, s2);
    const Rational bf = norm_bruteforce(w, s2);
    exhaustive.check(r.value == bf, [&] {
      return "w = " + s2.format(w) + ": dp " + to_string(r.value) + ", brute " + to_string(bf);
    });
  }

  Recorder random("oracle", "DP = brute force, random interval words |w| <= 8");
  Recorder witness("oracle", "DP matching lies in sigma_k and attains the DP value");
  const auto interval = PointedMetricSpace::interval();
  for (std::size_t n = 0; n < o.oracle_random; ++n) {
    const Word w = random_reduced_word(interval, rng, 0, 8, n % 2 ? kCoarseDen : 12);
    const auto r = norm_dp(w, interval);
    const Rational bf = norm_bruteforce(w, interval);
    random.check(r.value == bf, [&] {
      return "w = " + interval.format(w) + ": dp " + to_string(r.value) + ", brute " +
             to_string(bf);
    });
    const bool sigma = r.matching.k() == 0 || is_sigma(r.matching.map());
    witness.check(sigma && matching_cost(w.letters(), r.matching, interval) == 2 * r.value,
                  [&] { return "w = " + interval.format(w); });
  }
  return {exhaustive.done(), random.done(), witness.done()};
}

Outcomes run_norm(Rng& rng, const SuiteOptions& o) {
  const auto spaces = test_spaces();
  Recorder rep("norm", "N independent of the written form (<= 3 inserted y y^-1)");
  Recorder conj("norm", "N(g w g^-1) = N(w) and N invariant under cyclic shift");
  Recorder sym("norm", "N(w^-1) = N(w) and rho symmetric");
  Recorder sub("norm", "N(u v) <= N(u) + N(v)");
  Recorder ext("norm", "rho(x, y) = d(x, y) on X");
  Recorder upper("norm", "N(w) <= sum d~(x_i, e)");
  Recorder zero("norm", "N(w) = 0 iff w reduces to the identity");

  for (std::size_t n = 0; n < o.norm_instances; ++n) {
    const auto& s = spaces[n % spaces.size()];
    auto fmt = [&s](const Word& w) { return s.format(w); };

    const Word w = random_reduced_word(s, rng, 0, 4, kCoarseDen);
    const int pairs = static_cast<int>(rng.between(1, 3));
    const Word padded = insert_cancelling_pairs(w, pairs, s, rng, kCoarseDen);
    const Rational nw = norm(w, s);
    rep.check(norm_bruteforce(padded, s) == nw && min_cost_matching(padded.letters(), s).value == nw,
              [&] { return fmt(padded) + " vs " + fmt(w); });

    const Word g = random_word(s, rng, 0, 3, kCoarseDen);
    const Word v = random_reduced_word(s, rng, 0, 4, kCoarseDen);
    const Word shifted = cyclic_shift(v, static_cast<long>(rng.below(v.size() + 1)));
    conj.check(norm(conjugate(g, v), s) == norm(v, s) &&
                   norm_bruteforce(conjugate(g, v), s) == norm(v, s) &&
                   norm(shifted, s) == norm(v, s),
               [&] { return "g = " + fmt(g) + ", w = " + fmt(v); });

    const Word a = random_word(s, rng, 0, 6, kCoarseDen);
    const Word b = random_word(s, rng, 0, 6, kCoarseDen);
    sym.check(norm(invert(a), s) == norm(a, s) && graev_metric(a, b, s) == graev_metric(b, a, s),
              [&] { return fmt(a) + " / " + fmt(b); });
    sub.check(norm(concat(a, b), s) <= norm(a, s) + norm(b, s),
              [&] { return fmt(a) + " / " + fmt(b); });

    Letter x = random_letter(s, rng);
    Letter y = random_letter(s, rng);
    if (rng.coin()) x = pos(Point::base());
    ext.check(graev_metric(Word{pos(x.point)}, Word{pos(y.point)}, s) == s.dist(x.point, y.point),
              [&] { return s.name_of(x.point) + ", " + s.name_of(y.point); });

    Rational bound = 0;
    for (const auto& letter : a) bound += tilde_dist(letter, pos(Point::base()), s);
    upper.check(norm_dp(a, s).value <= bound, [&] { return fmt(a); });

    const Word r = random_word(s, rng, 0, 8, 3);
    zero.check((norm(r, s) == 0) == reduce(r).empty(), [&] { return fmt(r); });
  }
  return {rep.done(), conj.done(), sym.done(), sub.done(), ext.done(), upper.done(), zero.done()};
}

PowerCertificate random_certificate(const PointedMetricSpace& s, Rng& rng) {
  PowerCertificate p;
  p.n = rng.coin() ? 3 : 5;
  const long count = rng.between(0, 3);
  Rational largest = 0;
  for (long i = 0; i < count; ++i) {
    Word x = random_reduced_word(s, rng, 1, 3, kCoarseDen);
    largest = std::max(largest, norm(x, s));
    p.target = concat(p.target, power(x, p.n));
    p.bases.push_back(std::move(x));
  }
  p.c = largest + Rational(rng.between(1, 4), 4);
  return p;
}

Outcomes run_contraction(Rng& rng, const SuiteOptions& o) {
  const auto spaces = test_spaces();
  const auto interval = PointedMetricSpace::interval();

  Recorder hom("contraction", "h~(u v) = h~(u) h~(v)");
  for (std::size_t n = 0; n < o.random_instances; ++n) {
    const auto& s = spaces[n % spaces.size()];
    const auto h = random_contraction(s, rng);
    const Word u = random_word(s, rng, 0, 5, kCoarseDen);
    const Word v = random_word(s, rng, 0, 5, kCoarseDen);
    hom.check(extend_endomorphism(h, concat(u, v)) ==
                  concat(extend_endomorphism(h, u), extend_endomorphism(h, v)),
              [&] { return s.format(u) + " / " + s.format(v); });
  }

  Recorder contraction("contraction", "N(h~(w)) <= N(w) for contractions h, |w| <= 8");
  for (std::size_t n = 0; n < o.contraction_pairs; ++n) {
    const auto& s = spaces[n % spaces.size()];
    const auto h = random_contraction(s, rng);
    const Word w = random_word(s, rng, 0, 8, kCoarseDen);
    contraction.check(check_contraction(h) && norm(extend_endomorphism(h, w), s) <= norm(w, s),
                      [&] { return s.format(w); });
  }

  Recorder scaling("contraction", "N(h~_gamma(w)) = gamma N(w) exactly");
  for (std::size_t n = 0; n < o.scaling_instances; ++n) {
    Rational gamma;
    do {
      gamma = rng.unit_rational(12);
    } while (gamma == 0);
    const Word w = random_word(interval, rng, 0, 8);
    const auto [lhs, rhs] = scaling_norm_law(gamma, w);
    scaling.check(lhs == rhs, [&] {
      return "gamma = " + to_string(gamma) + ", w = " + interval.format(w) + ": " +
             to_string(lhs) + " vs " + to_string(rhs);
    });
  }

  Recorder transport("contraction", "transported power certificates verify");
  for (std::size_t n = 0; n < o.transport_instances; ++n) {
    const auto& s = spaces[n % spaces.size()];
    const auto p = random_certificate(s, rng);
    const auto h = random_contraction(s, rng);
    bool ok = false;
    try {
      ok = verify_power_certificate(transport_certificate(p, h), h.codomain());
    } catch (const std::exception&) {
    }
    transport.check(ok, [&] { return "target " + s.format(p.target); });
  }
  return {hom.done(), contraction.done(), scaling.done(), transport.done()};
}

Outcomes run_extension(Rng& rng, const SuiteOptions& o) {
  Recorder slopes("extension", "extension of a partial contraction has every |slope| <= 1");
  Recorder agrees("extension", "extension agrees with h* on Y");
  for (std::size_t n = 0; n < o.partial_contractions; ++n) {
    const auto p = random_partial_contraction(rng, 6);
    const auto h = extend_partial_contraction(p);
    const auto& knots = h.knots();
    bool ok = true;
    for (std::size_t i = 1; i < knots.size(); ++i) {
      ok &= abs_diff(knots[i].value, knots[i - 1].value) <= knots[i].t - knots[i - 1].t;
    }
    slopes.check(ok && check_contraction(h), [&] { return "|Y| = " + std::to_string(p.points.size()); });

    bool same = true;
    for (std::size_t i = 0; i < p.points.size(); ++i) {
      const Point image = h.apply(Point::rational(p.points[i]));
      same &= image == Point::rational(p.values[i]);
    }
    agrees.check(same, [&] { return "|Y| = " + std::to_string(p.points.size()); });
  }
  return {slopes.done(), agrees.done()};
}

Outcomes run_conjugates(Rng& rng, const SuiteOptions& o) {
  Recorder equiv("conjugates", "N(w) < m <=> decomposition exists, with N(w) factors, |w| <= 5");
  Recorder integral("conjugates", "N is an integer on generator words");
  for (int m : {2, 3}) {
    const auto s = PointedMetricSpace::conjugacy_space(m);
    for (const auto& w : reduced_words(s.letters(), 5)) {
      const Rational value = norm(w, s);
      integral.check(value.get_den() == 1, [&] { return s.format(w); });
      const auto d = decompose_conjugates(w, m);
      bool ok = (value < m) == d.has_value();
      if (d) {
        ok &= Rational(static_cast<long>(d->factors.size())) == value;
        ok &= verify_conjugate_decomposition(*d);
        ok &= product(*d) == w;
      }
      equiv.check(ok, [&] { return "m = " + std::to_string(m) + ", w = " + s.format(w); });
    }
  }

  Recorder products("conjugates", "products of m - 1 conjugated letters have N <= m - 1");
  for (std::size_t n = 0; n < o.random_instances; ++n) {
    const int m = static_cast<int>(rng.between(2, 4));
    const auto s = PointedMetricSpace::conjugacy_space(m);
    ConjugateDecomposition d{m, {}, {}};
    const long count = rng.between(0, m - 1);
    for (long i = 0; i < count; ++i) {
      Letter a = rng.below(5) == 0 ? pos(Point::base()) : random_letter(s, rng);
      d.factors.push_back({random_word(s, rng, 0, 3), a});
    }
    d.target = product(d);
    products.check(verify_conjugate_decomposition(d) && norm(d.target, s) <= m - 1,
                   [&] { return s.format(d.target); });
  }
  return {equiv.done(), integral.done(), products.done()};
}

Outcomes run_rescaling(Rng& rng, const SuiteOptions& o) {
  Recorder phi("rescaling", "N_m(phi(w)) = m N(w) on the 1/m grid, |w| <= 5");
  const auto interval = PointedMetricSpace::interval();
  for (int m : {2, 3}) {
    std::vector<Letter> grid;
    for (int k = 1; k <= m; ++k) {
      grid.push_back(pos(Point::rational(Rational(k, m))));
      grid.push_back(neg(Point::rational(Rational(k, m))));
    }
    std::sort(grid.begin(), grid.end());
    const auto f_space = PointedMetricSpace::prefix_space(m);
    const auto e_space = PointedMetricSpace::conjugacy_space(m);
    for (const auto& w : reduced_words(grid, 5)) {
      const Rational expected = m * norm(w, interval);
      const bool ok = norm(apply_phi(m, w), f_space) == expected &&
                      norm(apply_phi(m, w, true), e_space) == expected;
      phi.check(ok, [&] { return "m = " + std::to_string(m) + ", w = " + interval.format(w); });
    }
  }

  Recorder cross("rescaling", "Graev metrics of the f- and e-bases coincide");
  for (int m : {2, 3}) {
    const auto f_space = PointedMetricSpace::prefix_space(m);
    std::vector<std::pair<Word, Word>> samples;
    for (std::size_t n = 0; n < o.cross_samples; ++n) {
      samples.emplace_back(random_reduced_word(f_space, rng, 0, 4),
                           random_reduced_word(f_space, rng, 0, 4));
    }
    const auto result = check_cross_extension(f_space, PointedMetricSpace::conjugacy_space(m),
                                              BasisTranslation::prefix_products(m), samples);
    for (std::size_t n = 0; n < samples.size(); ++n) {
      cross.check(result.ok(), [&] { return "m = " + std::to_string(m) + ": " + result.detail; });
    }
  }
  return {phi.done(), cross.done()};
}

Outcomes run_obstruction(Rng& rng, const SuiteOptions& o) {
  Recorder pigeon("obstruction", "some exponent sum vanishes on m - 1 conjugated letters, m <= 5");
  for (std::size_t n = 0; n < o.pigeonhole_products; ++n) {
    const int m = static_cast<int>(rng.between(2, 5));
    const auto s = PointedMetricSpace::conjugacy_space(m);
    Word w;
    for (int i = 0; i < m - 1; ++i) {
      Letter a = rng.below(6) == 0 ? pos(Point::base()) : random_letter(s, rng);
      w = concat(w, conjugate(random_word(s, rng, 0, 4), Word{a}));
    }
    bool some_zero = false;
    for (int i = 1; i <= m; ++i) {
      some_zero |= exponent_sum(w, Point::generator("e" + std::to_string(i))) == 0;
    }
    pigeon.check(some_zero, [&] { return s.format(w); });
  }

  Recorder fires("obstruction", "obstruction fires on (e1 e2)^k, 0 < k < n, n in {3, 5}");
  const Word e1e2 = parse_word("e1 e2");
  for (int n : {3, 5}) {
    for (int k = 1; k < n; ++k) {
      fires.check(exponent_obstruction(power(e1e2, k), 2, n).has_value(),
                  [&] { return "k = " + std::to_string(k) + ", n = " + std::to_string(n); });
    }
  }

  Recorder sound("obstruction", "obstruction never fires on conjugate products times n-th powers");
  for (std::size_t t = 0; t < o.random_instances; ++t) {
    const int m = static_cast<int>(rng.between(2, 5));
    const int n = rng.coin() ? 3 : 5;
    const auto s = PointedMetricSpace::conjugacy_space(m);
    ConjugateDecomposition d{m, {}, {}};
    const long count = rng.between(0, m - 1);
    for (long i = 0; i < count; ++i) d.factors.push_back({random_word(s, rng, 0, 3), random_letter(s, rng)});
    d.target = product(d);
    Word w = d.target;
    const long powers = rng.between(0, 3);
    for (long i = 0; i < powers; ++i) {
      Word x = random_word(s, rng, 1, 3);
      Word g = random_word(s, rng, 0, 2);
      w = concat(w, conjugate(g, power(x, rng.coin() ? n : -n)));
    }
    sound.check(verify_conjugate_decomposition(d) && !exponent_obstruction(w, m, n),
                [&] { return s.format(w); });
  }
  return {pigeon.done(), fires.done(), sound.done()};
}

Outcomes run_search(Rng& rng, const SuiteOptions& o) {
  Recorder verified("search", "every certificate found by search verifies");
  const auto spaces = test_spaces();
  const std::size_t count = std::max<std::size_t>(1, o.random_instances / 5);
  for (std::size_t t = 0; t < count; ++t) {
    const auto& s = spaces[t % spaces.size()];
    const int n = 3;
    Word target;
    if (rng.coin()) {
      target = power(random_reduced_word(s, rng, 1, 2, kCoarseDen), n);
    } else {
      target = random_reduced_word(s, rng, 0, 3, kCoarseDen);
    }
    const Rational c = Rational(rng.between(1, 8), 2);
    const auto r = search_power_certificate(target, c, n, {2, 2, 20000}, s);
    verified.check(!r.certificate || verify_power_certificate(*r.certificate, s),
                   [&] { return s.format(target); });
  }
  return {verified.done()};
}

}  // namespace

const std::vector<std::string>& suite_groups() {
  static const std::vector<std::string> groups{"sigma",   "words",   "spaces",  "oracle",
                                               "norm", "contraction", "extension", "conjugates",
                                               "rescaling", "obstruction", "search"};
  return groups;
}

std::vector<PropertyOutcome> run_suite(std::string_view selection, const SuiteOptions& options) {
  const auto& groups = suite_groups();
  std::vector<std::string> chosen;
  if (selection == "all") {
    chosen = groups;
  } else if (std::find(groups.begin(), groups.end(), selection) != groups.end()) {
    chosen.emplace_back(selection);
  } else {
    throw std::invalid_argument("unknown suite selection '" + std::string(selection) + "'");
  }

  std::vector<PropertyOutcome> out;
  for (const auto& group : chosen) {
    Rng rng(group_seed(options.seed, group));
    Outcomes part;
    if (group == "sigma") part = run_sigma();
    if (group == "words") part = run_words(rng, options);
    if (group == "spaces") part = run_spaces(rng, options);
    if (group == "oracle") part = run_oracle(rng, options);
    if (group == "norm") part = run_norm(rng, options);
    if (group == "contraction") part = run_contraction(rng, options);
    if (group == "extension") part = run_extension(rng, options);
    if (group == "conjugates") part = run_conjugates(rng, options);
    if (group == "rescaling") part = run_rescaling(rng, options);
    if (group == "obstruction") part = run_obstruction(rng, options);
    if (group == "search") part = run_search(rng, options);
    for (auto& p : part) out.push_back(std::move(p));
  }
  return out;
}

std::string format_suite(const std::vector<PropertyOutcome>& outcomes) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& p : outcomes) {
    out << (p.ok() ? "PASS" : "FAIL") << "  " << p.group << "  " << p.name << "  ["
        << p.checked - p.failed << "/" << p.checked << "]\n";
    if (!p.ok()) {
      ++failed;
      out << "      counterexample: " << p.counterexample << "\n";
    }
  }
  out << outcomes.size() - failed << "/" << outcomes.size() << " properties hold\n";
  return out.str();
}

}  // namespace graev
