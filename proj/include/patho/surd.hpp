#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "patho/rational.hpp"

namespace patho {

/// a + b*sqrt(2) with rational a, b. The representation is unique because
/// sqrt(2) is irrational, so equality is componentwise.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(Rational a, Rational b = Rational()) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT

  /// `a+b*s2`, `a-b*s2`, `b*s2` or a plain rational literal.
  static QuadraticSurd parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& root2_coeff() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  /// Sign of the real number, decided with integer arithmetic only.
  int sign() const;

  /// `a+b*s2` / `a-b*s2`; always prints both components.
  std::string str() const;

  QuadraticSurd operator-() const { return {-a_, -b_}; }
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x);

/// Exact order on Q[sqrt 2].
std::strong_ordering surd_compare(const QuadraticSurd& u, const QuadraticSurd& v);

inline std::strong_ordering operator<=>(const QuadraticSurd& u, const QuadraticSurd& v) {
  return surd_compare(u, v);
}

enum class SurdOp { Add, Sub, Mul };

QuadraticSurd surd_arith(const QuadraticSurd& u, const QuadraticSurd& v, SurdOp op);

/// Sign of a + b*sqrt(d) for a positive non-square d.
int sign_of_surd(const Rational& a, const Rational& b, const Integer& d);

}  // namespace patho
