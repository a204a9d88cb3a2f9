#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace patho {

using Integer = mpz_class;

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Parses `n` or `n/d` with an optional leading `-`.
  static Rational parse(std::string_view text);
  /// Accepts everything `parse` does plus decimal notation such as `-0.01`.
  static Rational parse_decimal(std::string_view text);
  /// 2^k for any signed k.
  static Rational pow2(long k);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Integer floor() const;
  /// x - floor(x), in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }
  Rational abs() const;

  double to_double() const { return v_.get_d(); }
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on a zero divisor.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    const int c = cmp(x.v_, y.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  static Rational from_raw(mpq_class v) {
    Rational r;
    r.v_ = std::move(v);
    return r;
  }
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

enum class ArithOp { Add, Sub, Mul, Div };

/// Exact binary operation; Div by zero throws DomainError.
Rational rational_arith(const Rational& x, const Rational& y, ArithOp op);

/// base^k for small bases.
Integer ipow(unsigned long base, unsigned long k);

/// floor(x + 1/2).
Integer round_half_up(const Rational& x);

}  // namespace patho
