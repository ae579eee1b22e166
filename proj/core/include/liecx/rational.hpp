#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace liecx {

/// Exact rational scalar. GMP keeps fractions canonical (lowest terms,
/// positive denominator) through all arithmetic.
using Rat = mpq_class;

/// Parses a decimal integer or fraction literal: "3", "-1/2", "+7/4".
/// Rejects anything else (floats, hex, zero denominators).
std::optional<Rat> parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& value);

inline int sign(const Rat& value) { return sgn(value); }

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace liecx
