#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graev/rational.hpp"

namespace graev {

// The distinguished point e. Any letter over it is the group identity.
struct BasePoint {
  friend bool operator==(const BasePoint&, const BasePoint&) = default;
  friend bool operator<(const BasePoint&, const BasePoint&) { return false; }
};

// A named point of a finite space, e.g. "e1" or "f3".
struct Generator {
  std::string name;
  friend bool operator==(const Generator&, const Generator&) = default;
  friend bool operator<(const Generator& a, const Generator& b);
};

// A point of X: the base point, a named generator, or a rational of [0,1].
class Point {
 public:
  Point() = default;

  static Point base() { return Point(BasePoint{}); }
  static Point generator(std::string name) { return Point(Generator{std::move(name)}); }
  // The rational 0 is the base point of the interval space.
  static Point rational(Rational q);

  bool is_base() const { return std::holds_alternative<BasePoint>(value_); }
  bool is_generator() const { return std::holds_alternative<Generator>(value_); }
  bool is_rational() const { return std::holds_alternative<Rational>(value_); }

  const std::string& name() const { return std::get<Generator>(value_).name; }
  const Rational& coordinate() const { return std::get<Rational>(value_); }

  friend bool operator==(const Point& a, const Point& b) { return a.value_ == b.value_; }
  friend bool operator<(const Point& a, const Point& b) { return a.value_ < b.value_; }

 private:
  using Storage = std::variant<BasePoint, Generator, Rational>;
  explicit Point(Storage v) : value_(std::move(v)) {}
  Storage value_;
};

std::string to_string(const Point& p);

// A signed point x or x^-1.
struct Letter {
  Point point;
  int sign = 1;

  Letter inverse() const { return {point, -sign}; }
  bool is_identity() const { return point.is_base(); }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.point == b.point) return a.sign > b.sign;
    return a.point < b.point;
  }
};

inline Letter pos(Point p) { return {std::move(p), 1}; }
inline Letter neg(Point p) { return {std::move(p), -1}; }

std::string to_string(const Letter& a);

// An immutable finite sequence of letters. Not necessarily reduced.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  // No adjacent x x^-1 and no base-point letters.
  bool is_reduced() const;

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex: shorter words first, then letterwise.
  friend bool operator<(const Word& a, const Word& b);

 private:
  std::vector<Letter> letters_;
};

// Whitespace-separated letters, each `<point>` or `<point>^-1`. A token that
// starts with a digit, '.', '+' or '-' is a rational; anything else is a
// generator name. Throws std::invalid_argument naming the offending token.
Word parse_word(std::string_view text);

std::string to_string(const Word& w);

Word reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& u, const Word& v);
Word conjugate(const Word& g, const Word& w);
Word power(const Word& w, int n);

// Rotates the letters left by k (mod |w|). Expects a reduced word.
Word cyclic_shift(const Word& w, std::ptrdiff_t k);

enum class BasisDirection {
  kFToE,  // f_i -> e_1 ... e_i
  kEToF,  // e_i -> f_{i-1}^-1 f_i, e_1 -> f_1
};

// Rewrites a word between the bases {f_i} and {e_i} related by f_i = e_1...e_i.
// Throws std::invalid_argument when a letter is not in the source alphabet.
Word substitute_basis(const Word& w, BasisDirection direction);

// Every reduced word of length 0..max_length over `alphabet`, in shortlex
// order of the alphabet as given.
std::vector<Word> reduced_words(std::span<const Letter> alphabet, int max_length);

// Index i of a generator named "<prefix><i>", or 0 if the name does not match.
int generator_index(const Point& p, char prefix);

}  // namespace graev
