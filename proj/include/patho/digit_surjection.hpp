#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "patho/expansion.hpp"
#include "patho/rational.hpp"

namespace patho {

/// The ternary-digit everywhere surjection h.
///
/// Write the fractional part of x in canonical ternary. If there are at most
/// one or infinitely many digits 2, h(x) = 0. Otherwise
///
///     x = q. ... 2 b1 b2 ... bm 2 y1 y2 ...      (b, y in {0, 1})
///
/// and h(x) is the binary number b1 b2 ... bm . y1 y2 ...
///
/// The signed variant consumes b1 as a sign flag (0 negative, 1 positive)
/// and reads the magnitude from b2 ... bm . y1 y2 ...; an empty b-block is
/// read as positive.

/// Everything eval_h looked at, for auditing.
struct HDecomposition {
  DigitExpansion expansion;  ///< ternary expansion of frac(x)
  /// Positions in `expansion.prefix` of the last two digits 2, when they exist
  /// and the cycle holds no 2.
  std::optional<std::pair<std::size_t, std::size_t>> last_twos;
  Digits b_block;
  Digits y_prefix;
  Digits y_cycle;
  bool signed_mode = false;
  Rational value;
};

HDecomposition decompose_h(const Rational& x, bool signed_mode);

Rational eval_h(const Rational& x);
Rational eval_h_signed(const Rational& x);

/// (h(x), h(x + k)); the two agree because h ignores the integer part.
std::pair<Rational, Rational> eval_h_periodic_check(const Rational& x, const Integer& k);

/// An x with l < x < r and h(x) = y (or h_signed(x) = y). Requires l < r and,
/// for the unsigned map, y >= 0; throws DomainError otherwise.
Rational preimage_h(const Rational& y, const Rational& l, const Rational& r, bool signed_mode);

}  // namespace patho
