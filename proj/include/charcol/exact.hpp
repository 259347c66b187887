#pragma once

#include <gmpxx.h>

#include <string>

namespace charcol {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" for non-integers, "p" otherwise.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace charcol
