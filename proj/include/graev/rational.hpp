#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace graev {

// Exact rationals, always kept in canonical (lowest-terms) form.
using Rational = mpq_class;

// Parses "p/q", "-p/q", "p", or a finite decimal such as "0.4" (read as 2/5).
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational abs_diff(const Rational& a, const Rational& b) {
  Rational d = a - b;
  return d < 0 ? Rational(-d) : d;
}

}  // namespace graev
