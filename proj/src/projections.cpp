#include "patho/projections.hpp"

#include <functional>

#include "patho/certified.hpp"
#include "patho/error.hpp"

namespace patho {

QuadraticSurd proj_p(const QuadraticSurd& x) { return {x.rational_part()}; }

QuadraticSurd proj_q(const QuadraticSurd& x) { return {Rational(), x.root2_coeff()}; }

QuadraticSurd apply(Projection f, const QuadraticSurd& x) {
  return f == Projection::P ? proj_p(x) : proj_q(x);
}

PeriodClass<QuadraticSurd> classify_shift(Projection f, const QuadraticSurd& t) {
  if (t.is_zero()) throw DomainError("zero shift is neither a period nor a quasiperiod");
  // f is additive, so f(x + t) - f(x) = f(t) for every x
  PeriodClass<QuadraticSurd> out;
  out.increment = apply(f, t);
  if (out.increment.is_zero()) return out;
  out.kind = ShiftKind::Quasiperiod;
  out.direction = t.sign() == out.increment.sign() ? Direction::Increasing : Direction::Decreasing;
  return out;
}

namespace {

// First dyadic round(target_k * 2^k) / 2^k accepted by `inside`, where
// target_k is `target` evaluated with a 2^-(k+8) enclosure of sqrt 2. The
// approximations converge to an interior point, so the loop terminates.
Rational dyadic_search(const std::function<Rational(const Rational& root2)>& target,
                       const std::function<bool(const Rational&)>& inside) {
  for (long k = 0;; ++k) {
    const Interval root2 = sqrt_enclosure(Integer(2), static_cast<unsigned>(k + 8));
    const Rational scale = Rational::pow2(k);
    const Rational candidate = Rational(round_half_up(target(root2.lo) * scale)) / scale;
    if (inside(candidate)) return candidate;
  }
}

Rational dyadic_inside(const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / Rational(2);
  return dyadic_search([&](const Rational&) { return mid; },
                       [&](const Rational& c) { return lo < c && c < hi; });
}

bool strictly_between(const QuadraticSurd& lo, const QuadraticSurd& x, const QuadraticSurd& hi) {
  return lo < x && x < hi;
}

}  // namespace

QuadraticSurd density_witness(Projection f, const Rational& x_lo, const Rational& x_hi,
                              const Rational& y_lo, const Rational& y_hi) {
  if (!(x_lo < x_hi) || !(y_lo < y_hi)) throw DomainError("empty density window");
  const QuadraticSurd xl(x_lo), xh(x_hi), yl(y_lo), yh(y_hi);
  const Rational two(2);
  const Rational x_mid = (x_lo + x_hi) / two;

  if (f == Projection::P) {
    // p(x) = a: fix a inside the y-window, then b with a + b sqrt2 in the x-window
    const Rational a = dyadic_inside(y_lo, y_hi);
    const Rational b = dyadic_search(
        [&](const Rational& root2) { return (x_mid - a) * root2 / two; },
        [&](const Rational& c) { return strictly_between(xl, QuadraticSurd(a, c), xh); });
    return {a, b};
  }
  // q(x) = b sqrt2: fix b with b sqrt2 in the y-window, then the rational part
  const Rational y_mid = (y_lo + y_hi) / two;
  const Rational b = dyadic_search(
      [&](const Rational& root2) { return y_mid * root2 / two; },
      [&](const Rational& c) { return strictly_between(yl, QuadraticSurd(Rational(), c), yh); });
  const Rational a = dyadic_search(
      [&](const Rational& root2) { return x_mid - b * root2; },
      [&](const Rational& c) { return strictly_between(xl, QuadraticSurd(c, b), xh); });
  return {a, b};
}

}  // namespace patho
