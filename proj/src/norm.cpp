#include "graev/norm.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace graev {

SigmaMatching::SigmaMatching(std::vector<int> map) : map_(std::move(map)) {
  const int k = this->k();
  for (int i = 1; i <= k; ++i) {
    int a = map_[i - 1];
    if (a < 1 || a > k || map_[a - 1] != i) {
      throw std::invalid_argument("not an involution of {1.." + std::to_string(k) + "}");
    }
  }
}

SigmaMatching SigmaMatching::identity(int k) {
  std::vector<int> map(k);
  for (int i = 0; i < k; ++i) map[i] = i + 1;
  return SigmaMatching(std::move(map));
}

std::vector<std::pair<int, int>> SigmaMatching::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k(); ++i) {
    if ((*this)(i) > i) out.emplace_back(i, (*this)(i));
  }
  return out;
}

std::vector<int> SigmaMatching::fixed() const {
  std::vector<int> out;
  for (int i = 1; i <= k(); ++i) {
    if ((*this)(i) == i) out.push_back(i);
  }
  return out;
}

bool is_sigma(std::span<const int> alpha) {
  const int k = static_cast<int>(alpha.size());
  std::vector<bool> seen(k + 1, false);
  for (int v : alpha) {
    if (v < 1 || v > k || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  auto a = [&](int i) { return alpha[i - 1]; };

  for (int i = 1; i <= k; ++i) {
    if (a(a(i)) != i) return false;
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      const bool c1 = a(j) < i && a(j) < a(i) && a(i) < j;
      const bool c2 = a(i) > j && i < a(j) && a(j) < a(i);
      const bool c3 = i < a(j) && a(i) < a(j) && a(i) < j;
      const bool c4 = a(j) == i;
      if (!(c1 || c2 || c3 || c4)) return false;
    }
  }
  return true;
}

namespace {

// Every involution of {1..k}: position `next` is either fixed or swapped with
// a later free position.
void involutions(std::vector<int>& map, int next, std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(map.size());
  while (next <= k && map[next - 1] != 0) ++next;
  if (next > k) {
    out.push_back(map);
    return;
  }
  map[next - 1] = next;
  involutions(map, next + 1, out);
  for (int j = next + 1; j <= k; ++j) {
    if (map[j - 1] != 0) continue;
    map[next - 1] = j;
    map[j - 1] = next;
    involutions(map, next + 1, out);
    map[j - 1] = 0;
  }
  map[next - 1] = 0;
}

}  // namespace

std::vector<SigmaMatching> enumerate_sigma(int k) {
  if (k < 1 || k > kMaxBruteForceLength) {
    throw std::out_of_range("enumerate_sigma: k must be in 1.." +
                            std::to_string(kMaxBruteForceLength));
  }
  std::vector<int> map(k, 0);
  std::vector<std::vector<int>> all;
  involutions(map, 1, all);

  std::vector<SigmaMatching> out;
  for (auto& alpha : all) {
    if (is_sigma(alpha)) out.emplace_back(std::move(alpha));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational matching_cost(std::span<const Letter> letters, const SigmaMatching& alpha,
                       const PointedMetricSpace& s) {
  if (alpha.k() != static_cast<int>(letters.size())) {
    throw std::invalid_argument("matching size does not match word length");
  }
  Rational total = 0;
  for (int i = 1; i <= alpha.k(); ++i) {
    total += tilde_dist(letters[i - 1], letters[alpha(i) - 1].inverse(), s);
  }
  return total;
}

Rational norm_bruteforce(const Word& w, const PointedMetricSpace& s) {
  const int k = static_cast<int>(w.size());
  if (k > kMaxBruteForceLength) {
    throw std::out_of_range("norm_bruteforce: word longer than " +
                            std::to_string(kMaxBruteForceLength));
  }
  if (k == 0) return 0;

  // cost[i][j] = d~(x_i, x_j^-1)
  std::vector<Rational> cost(k * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) cost[i * k + j] = tilde_dist(w[i], w[j].inverse(), s);
  }

  std::optional<Rational> best;
  for (const auto& alpha : enumerate_sigma(k)) {
    Rational total = 0;
    for (int i = 1; i <= k; ++i) total += cost[(i - 1) * k + alpha(i) - 1];
    if (!best || total < *best) best = total;
  }
  return *best / 2;
}

NormResult min_cost_matching(std::span<const Letter> letters, const PointedMetricSpace& s) {
  const std::size_t k = letters.size();
  if (k == 0) return {0, SigmaMatching{}};

  const Letter identity = pos(Point::base());
  std::vector<Rational> single(k);
  for (std::size_t j = 0; j < k; ++j) single[j] = tilde_dist(letters[j], identity, s);

  // Half-open intervals [i, j). best[i][j] is the optimal cost, split[i][j]
  // the partner of j - 1 (or -1 when j - 1 stays fixed).
  const std::size_t n = k + 1;
  std::vector<Rational> best(n * n);
  std::vector<long> split(n * n, -1);
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };

  for (std::size_t len = 1; len <= k; ++len) {
    for (std::size_t i = 0; i + len <= k; ++i) {
      const std::size_t j = i + len;
      const std::size_t last = j - 1;
      Rational value = best[at(i, last)] + single[last];
      long choice = -1;
      for (std::size_t t = i; t < last; ++t) {
        Rational candidate = best[at(i, t)] +
                             tilde_dist(letters[t], letters[last].inverse(), s) +
                             best[at(t + 1, last)];
        if (candidate < value) {
          value = std::move(candidate);
          choice = static_cast<long>(t);
        }
      }
      best[at(i, j)] = std::move(value);
      split[at(i, j)] = choice;
    }
  }

  std::vector<int> map(k);
  for (std::size_t i = 0; i < k; ++i) map[i] = static_cast<int>(i) + 1;
  std::vector<std::pair<std::size_t, std::size_t>> todo{{0, k}};
  while (!todo.empty()) {
    auto [i, j] = todo.back();
    todo.pop_back();
    if (j <= i) continue;
    const std::size_t last = j - 1;
    const long t = split[at(i, j)];
    if (t < 0) {
      todo.emplace_back(i, last);
    } else {
      map[t] = static_cast<int>(last) + 1;
      map[last] = static_cast<int>(t) + 1;
      todo.emplace_back(i, static_cast<std::size_t>(t));
      todo.emplace_back(static_cast<std::size_t>(t) + 1, last);
    }
  }
  return {best[at(0, k)], SigmaMatching(std::move(map))};
}

NormResult norm_dp(const Word& w, const PointedMetricSpace& s) {
  Word r = reduce(w);
  return min_cost_matching(r.letters(), s);
}

Rational graev_metric(const Word& u, const Word& v, const PointedMetricSpace& s) {
  return norm(concat(u, invert(v)), s);
}

}  // namespace graev
