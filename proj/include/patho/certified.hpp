#pragma once

#include "patho/rational.hpp"

namespace patho {

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  /// True when lo > 0 or hi < 0.
  bool excludes_zero() const { return lo.sign() > 0 || hi.sign() < 0; }

  friend Interval operator+(const Interval& x, const Interval& y) { return {x.lo + y.lo, x.hi + y.hi}; }
  friend Interval operator*(const Rational& k, const Interval& x) {
    return k.sign() >= 0 ? Interval{k * x.lo, k * x.hi} : Interval{k * x.hi, k * x.lo};
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Enclosures of width at most 2^-bits around the named constant.
Interval sqrt_enclosure(const Integer& d, unsigned bits);
Interval pi_enclosure(unsigned bits);
Interval e_enclosure(unsigned bits);

}  // namespace patho
