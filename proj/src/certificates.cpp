#include "graev/certificates.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "graev/norm.hpp"

namespace graev {

bool in_ball(const Word& w, const Rational& c, const PointedMetricSpace& s) {
  return norm(w, s) < c;
}

Word product(const ConjugateDecomposition& d) {
  Word out;
  for (const auto& f : d.factors) out = concat(out, conjugate(f.g, Word{f.a}));
  return out;
}

std::optional<ConjugateDecomposition> decompose_conjugates(const Word& w, int m) {
  if (m < 1) throw std::invalid_argument("decompose_conjugates: m must be positive");
  const auto space = PointedMetricSpace::conjugacy_space(m);
  const Word y = reduce(space.resolve(w));
  const auto [value, alpha] = norm_dp(y, space);
  if (value >= m) return std::nullopt;

  // Keep the zero-cost pairs, release every other position as a fixed point.
  const int k = static_cast<int>(y.size());
  std::vector<bool> kept(k, false);
  for (auto [i, j] : alpha.pairs()) {
    if (tilde_dist(y[i - 1], y[j - 1].inverse(), space) == 0) {
      kept[i - 1] = kept[j - 1] = true;
    }
  }

  ConjugateDecomposition d{m, y, {}};
  Word prefix;  // product of the kept letters seen so far
  for (int i = 0; i < k; ++i) {
    if (kept[i]) {
      prefix = concat(prefix, Word{y[i]});
    } else {
      d.factors.push_back({prefix, y[i]});
    }
  }
  if (Rational(static_cast<long>(d.factors.size())) != value) {
    throw std::logic_error("decompose_conjugates: factor count differs from the norm");
  }
  return d;
}

std::optional<std::string> conjugate_decomposition_error(const ConjugateDecomposition& d) {
  if (d.m < 1) return "m must be positive";
  if (static_cast<long>(d.factors.size()) > d.m - 1) {
    return std::to_string(d.factors.size()) + " factors exceed m - 1 = " + std::to_string(d.m - 1);
  }
  const auto space = PointedMetricSpace::conjugacy_space(d.m);
  try {
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      space.resolve(d.factors[i].g);
      space.canonical(d.factors[i].a.point);
    }
    space.resolve(d.target);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  auto canon = [&space](const Word& w) { return reduce(space.resolve(w)); };
  ConjugateDecomposition resolved = d;
  for (auto& f : resolved.factors) {
    f.g = space.resolve(f.g);
    f.a.point = space.canonical(f.a.point);
  }
  const Word got = product(resolved);
  if (got != canon(d.target)) {
    return "product " + space.format(got) + " differs from target " + space.format(canon(d.target));
  }
  return std::nullopt;
}

std::optional<std::string> power_certificate_error(const PowerCertificate& p,
                                                   const PointedMetricSpace& s) {
  if (p.n < 3 || p.n % 2 == 0) return "exponent n = " + std::to_string(p.n) + " is not odd >= 3";
  if (p.c <= 0) return "bound c = " + to_string(p.c) + " is not positive";
  Word product;
  try {
    for (std::size_t i = 0; i < p.bases.size(); ++i) {
      const Word x = s.resolve(p.bases[i]);
      const Rational value = norm(x, s);
      if (value >= p.c) {
        return "N(base " + std::to_string(i + 1) + ") = " + to_string(value) + " ≥ c";
      }
      product = concat(product, power(x, p.n));
    }
    const Word target = reduce(s.resolve(p.target));
    if (product != target) {
      return "product of powers " + s.format(product) + " differs from target " + s.format(target);
    }
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return std::nullopt;
}

PowerCertificate transport_certificate(const PowerCertificate& p, const PointMap& h) {
  if (auto err = power_certificate_error(p, h.domain())) {
    throw std::invalid_argument("transport_certificate: invalid certificate: " + *err);
  }
  if (!check_contraction(h)) throw std::invalid_argument("transport_certificate: not a contraction");
  PowerCertificate out{{}, p.n, p.c, extend_endomorphism(h, h.domain().resolve(p.target))};
  for (const auto& x : p.bases) {
    Word image = extend_endomorphism(h, h.domain().resolve(x));
    // The identity contributes nothing to the product.
    if (!image.empty()) out.bases.push_back(std::move(image));
  }
  return out;
}

namespace {

std::vector<Letter> search_alphabet(const Word& w, const PointedMetricSpace& s) {
  std::set<Point> points;
  if (s.is_finite()) {
    for (const auto& p : s.points()) points.insert(p);
  } else {
    for (const auto& a : w) points.insert(a.point);
  }
  std::vector<Letter> out;
  for (const auto& p : points) {
    if (p.is_base()) continue;
    out.push_back(pos(p));
    out.push_back(neg(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SearchResult search_power_certificate(const Word& w, const Rational& c, int n,
                                      const SearchBudget& budget, const PointedMetricSpace& s) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("exponent n must be odd and >= 3");
  if (c <= 0) throw std::invalid_argument("bound c must be positive");

  SearchResult result;
  const Word target = reduce(s.resolve(w));
  if (target.empty()) {
    result.certificate = PowerCertificate{{}, n, c, target};
    return result;
  }

  std::vector<Word> bases;
  std::vector<Word> powers;
  for (auto& x : reduced_words(search_alphabet(target, s), budget.max_base_length)) {
    if (x.empty() || !in_ball(x, c, s)) continue;
    powers.push_back(power(x, n));
    bases.push_back(std::move(x));
  }
  result.candidate_bases = bases.size();

  // parent[v] = (u, index of the base appended to reach v from u)
  std::map<Word, std::pair<Word, std::size_t>> parent;
  std::set<Word> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  for (int depth = 1; depth <= budget.max_factors && !frontier.empty(); ++depth) {
    std::set<Word> next;
    for (const auto& u : frontier) {
      for (std::size_t b = 0; b < bases.size(); ++b) {
        Word v = concat(u, powers[b]);
        if (seen.count(v)) continue;
        ++result.explored;
        seen.insert(v);
        parent.emplace(v, std::make_pair(u, b));
        if (v == target) {
          PowerCertificate cert{{}, n, c, target};
          for (Word at = v; !at.empty();) {
            const auto& [prev, index] = parent.at(at);
            cert.bases.push_back(bases[index]);
            at = prev;
          }
          std::reverse(cert.bases.begin(), cert.bases.end());
          result.certificate = std::move(cert);
          return result;
        }
        if (result.explored >= budget.max_nodes) return result;
        next.insert(std::move(v));
      }
    }
    frontier.assign(next.begin(), next.end());
  }
  return result;
}

long exponent_sum(const Word& w, const Point& generator) {
  long total = 0;
  for (const auto& a : w) {
    if (a.point == generator) total += a.sign;
  }
  return total;
}

std::string ObstructionReport::describe() const {
  std::string out = "exponent sums (";
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(sums[i]);
  }
  out += ") are all nonzero mod " + std::to_string(n) + "; not a product of " +
         std::to_string(m - 1) + " conjugated letters and " + std::to_string(n) + "-th powers";
  return out;
}

std::optional<ObstructionReport> exponent_obstruction(const Word& w, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("exponent_obstruction: m and n must be positive");
  const auto space = PointedMetricSpace::conjugacy_space(m);
  const Word resolved = space.resolve(w);

  ObstructionReport report{m, n, {}};
  bool fires = true;
  for (int i = 1; i <= m; ++i) {
    long sum = exponent_sum(resolved, Point::generator("e" + std::to_string(i)));
    report.sums.push_back(sum);
    if (sum % n == 0) fires = false;
  }
  if (!fires) return std::nullopt;
  return report;
}

}  // namespace graev
