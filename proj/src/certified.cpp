#include "patho/certified.hpp"

#include <algorithm>

#include "patho/error.hpp"

namespace patho {

Interval sqrt_enclosure(const Integer& d, unsigned bits) {
  if (d < 0) throw DomainError("square root of a negative number");
  // isqrt(d * 4^bits) / 2^bits <= sqrt(d) <= (isqrt + 1) / 2^bits
  Integer scaled = d;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2UL * bits);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  const Rational unit = Rational::pow2(-static_cast<long>(bits));
  Rational lo = Rational(root) * unit;
  if (root * root == scaled) return {lo, lo};
  return {lo, Rational(Integer(root + 1)) * unit};
}

namespace {

// atan(1/x) for integer x > 1 from the alternating series; consecutive
// partial sums bracket the limit.
Interval atan_inverse(long x, unsigned bits) {
  const Rational tolerance = Rational::pow2(-static_cast<long>(bits));
  const Rational x2 = Rational(x) * Rational(x);
  Rational power = Rational(1) / Rational(x);  // x^-(2k+1)
  Rational sum;
  for (long k = 0;; ++k) {
    const Rational term = power / Rational(2 * k + 1);
    const Rational next = k % 2 == 0 ? sum + term : sum - term;
    if (term < tolerance) return {std::min(sum, next), std::max(sum, next)};
    sum = next;
    power /= x2;
  }
}

}  // namespace

Interval pi_enclosure(unsigned bits) {
  // pi = 16 atan(1/5) - 4 atan(1/239); total width <= 20 * 2^-(bits+5)
  const Interval a = atan_inverse(5, bits + 5);
  const Interval b = atan_inverse(239, bits + 5);
  return Rational(16) * a + Rational(-4) * b;
}

Interval e_enclosure(unsigned bits) {
  // sum_{k<=n} 1/k! <= e <= that + 2/(n+1)!
  const Rational tolerance = Rational::pow2(-static_cast<long>(bits));
  Rational sum = 1;
  Rational term = 1;
  for (long k = 1;; ++k) {
    term /= Rational(k);
    sum += term;
    const Rational tail = Rational(2) * term / Rational(k + 1);
    if (tail <= tolerance) return {sum, sum + tail};
  }
}

}  // namespace patho
