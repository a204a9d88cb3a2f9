#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patho/rational.hpp"

namespace patho {

using Digits = std::vector<std::uint8_t>;

/// Eventually repeating positional expansion in base 2 or 3.
///
/// Canonical form, as produced by `to_expansion`:
///   - no leading zero in `integer_digits` (empty when |x| < 1);
///   - `cycle` is empty (terminating) or neither all zeros nor all (base-1);
///   - `cycle` is the shortest repeating block and `prefix` the shortest
///     preperiod; a terminating `prefix` has no trailing zero;
///   - zero is `+` with no digits at all.
struct DigitExpansion {
  int base = 2;
  int sign = 1;
  Digits integer_digits;
  Digits prefix;
  Digits cycle;

  bool terminating() const { return cycle.empty(); }
  /// e.g. `-10.1(01)`; digits only, the base is not encoded.
  std::string str() const;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

/// Canonical expansion; the cycle is found by remainder repetition during
/// long division, so it is minimal and never all (base-1).
DigitExpansion to_expansion(const Rational& x, int base);

/// Exact value of a canonical expansion. Throws DomainError on any violation
/// of the canonical-form invariants.
Rational from_expansion(const DigitExpansion& e);

/// Empty string when canonical, otherwise the first violated invariant.
std::string canonical_violation(const DigitExpansion& e);

/// Value of `int.prefix(cycle)` read in `base` with no canonicality demands;
/// the digits may exceed the usual range of the base.
Rational positional_value(unsigned base, std::span<const std::uint8_t> integer_digits,
                          std::span<const std::uint8_t> prefix,
                          std::span<const std::uint8_t> cycle);

/// Most-significant-first digits of n >= 0 (empty for zero).
Digits integer_digits(const Integer& n, unsigned base);

/// The closed cylinder [value, value + base^-depth] of all reals whose
/// expansion starts with a fixed integer part and `depth` fractional digits.
struct CylinderPrefix {
  int base = 3;
  unsigned depth = 0;
  Rational value;

  Rational width() const;
  Integer integer_part() const { return value.floor(); }
  /// The `depth` fractional digits fixed by the cylinder.
  Digits digits() const;
};

/// Shallowest cylinder, then leftmost among those, whose closure lies in the
/// open interval (l, r). Throws DomainError unless l < r.
CylinderPrefix cylinder_for_interval(const Rational& l, const Rational& r, int base);

}  // namespace patho
