#include "graev/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace graev {

namespace {

// Splits "e12" into ("e", 12); names without a numeric suffix get -1.
std::pair<std::string_view, long> split_name(std::string_view name) {
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  if (cut == name.size() || name.size() - cut > 9) return {name, -1};
  return {name.substr(0, cut), std::stol(std::string(name.substr(cut)))};
}

}  // namespace

bool operator<(const Generator& a, const Generator& b) {
  auto [pa, ia] = split_name(a.name);
  auto [pb, ib] = split_name(b.name);
  if (pa != pb) return pa < pb;
  if (ia != ib) return ia < ib;
  return a.name < b.name;
}

Point Point::rational(Rational q) {
  q.canonicalize();
  if (q == 0) return base();
  return Point(Storage(std::move(q)));
}

std::string to_string(const Point& p) {
  if (p.is_base()) return "e";
  if (p.is_generator()) return p.name();
  return to_string(p.coordinate());
}

std::string to_string(const Letter& a) {
  return a.sign > 0 ? to_string(a.point) : to_string(a.point) + "^-1";
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i].is_identity()) return false;
    if (i + 1 < letters_.size() && letters_[i + 1] == letters_[i].inverse()) return false;
  }
  return true;
}

bool operator<(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string_view body = token;
    int sign = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      auto exponent = body.substr(caret + 1);
      if (exponent == "-1") {
        sign = -1;
      } else if (exponent != "1") {
        throw std::invalid_argument("bad exponent in token '" + token + "'");
      }
      body = body.substr(0, caret);
    }
    if (body.empty()) throw std::invalid_argument("empty point in token '" + token + "'");

    char first = body.front();
    if (std::isdigit(static_cast<unsigned char>(first)) || first == '.' || first == '-' ||
        first == '+') {
      Rational q;
      try {
        q = parse_rational(body);
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed point in token '" + token + "'");
      }
      letters.push_back({Point::rational(q), sign});
    } else {
      for (char c : body) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
          throw std::invalid_argument("malformed generator in token '" + token + "'");
        }
      }
      letters.push_back({Point::generator(std::string(body)), sign});
    }
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& w) {
  std::string out;
  for (const auto& a : w) {
    if (!out.empty()) out += ' ';
    out += to_string(a);
  }
  return out;
}

Word reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& a : w) {
    if (a.is_identity()) continue;
    if (!stack.empty() && stack.back() == a.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(a);
    }
  }
  return Word(std::move(stack));
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return reduce(Word(std::move(out)));
}

Word conjugate(const Word& g, const Word& w) { return concat(concat(g, w), invert(g)); }

Word power(const Word& w, int n) {
  Word base = n < 0 ? invert(w) : w;
  std::vector<Letter> out;
  for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return reduce(Word(std::move(out)));
}

Word cyclic_shift(const Word& w, std::ptrdiff_t k) {
  if (w.empty()) return w;
  auto n = static_cast<std::ptrdiff_t>(w.size());
  auto shift = ((k % n) + n) % n;
  std::vector<Letter> out(w.begin(), w.end());
  std::rotate(out.begin(), out.begin() + shift, out.end());
  return Word(std::move(out));
}

std::vector<Word> reduced_words(std::span<const Letter> alphabet, int max_length) {
  std::vector<Word> out{Word{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& a : alphabet) {
        const Word& w = out[i];
        if (!w.empty() && w[w.size() - 1] == a.inverse()) continue;
        std::vector<Letter> letters(w.begin(), w.end());
        letters.push_back(a);
        out.emplace_back(std::move(letters));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

int generator_index(const Point& p, char prefix) {
  if (!p.is_generator()) return 0;
  const auto& name = p.name();
  if (name.size() < 2 || name.front() != prefix) return 0;
  auto [head, index] = split_name(name);
  if (head.size() != 1 || index <= 0) return 0;
  return static_cast<int>(index);
}

Word substitute_basis(const Word& w, BasisDirection direction) {
  const char from = direction == BasisDirection::kFToE ? 'f' : 'e';
  std::vector<Letter> out;
  for (const auto& a : w) {
    if (a.is_identity()) continue;
    int i = generator_index(a.point, from);
    if (i == 0) {
      throw std::invalid_argument("letter '" + to_string(a) + "' is not in the " +
                                  std::string(1, from) + "-alphabet");
    }
    std::vector<Letter> image;
    if (direction == BasisDirection::kFToE) {
      for (int j = 1; j <= i; ++j) image.push_back(pos(Point::generator("e" + std::to_string(j))));
    } else {
      if (i > 1) image.push_back(neg(Point::generator("f" + std::to_string(i - 1))));
      image.push_back(pos(Point::generator("f" + std::to_string(i))));
    }
    Word piece(std::move(image));
    if (a.sign < 0) piece = invert(piece);
    out.insert(out.end(), piece.begin(), piece.end());
  }
  return reduce(Word(std::move(out)));
}

}  // namespace graev
