#include <doctest.h>

#include "generators.hpp"
#include "patho/error.hpp"
#include "patho/projections.hpp"

using namespace patho;

namespace {

QuadraticSurd s(Rational a, Rational b) { return {std::move(a), std::move(b)}; }

bool in_window(const QuadraticSurd& x, Projection f, const Rational& x_lo, const Rational& x_hi,
               const Rational& y_lo, const Rational& y_hi) {
  const QuadraticSurd y = apply(f, x);
  return QuadraticSurd(x_lo) < x && x < QuadraticSurd(x_hi) && QuadraticSurd(y_lo) < y &&
         y < QuadraticSurd(y_hi);
}

}  // namespace

TEST_CASE("projection examples") {
  const QuadraticSurd x = s(3, 2);
  CHECK(proj_p(x) == s(3, 0));
  CHECK(proj_q(x) == s(0, 2));
  CHECK(proj_p(x + s(0, 1)) == proj_p(x));      // sqrt2 leaves p unchanged
  CHECK(proj_p(x + s(1, 0)) == s(4, 0));        // adding 1 raises p by 1
  CHECK(proj_q(x + s(Rational(5, 7), 0)) == proj_q(x));
  const QuadraticSurd z = s(5, -7);
  CHECK(proj_p(z) + proj_q(z) == z);
}

TEST_CASE("classify_shift examples") {
  const auto period = classify_shift(Projection::P, s(0, 1));
  CHECK(period.is_period());
  CHECK(period.increment.is_zero());
  CHECK_FALSE(period.direction.has_value());

  const auto down = classify_shift(Projection::P, s(-1, 1));
  CHECK(down.kind == ShiftKind::Quasiperiod);
  CHECK(down.increment == s(-1, 0));
  CHECK(down.direction == Direction::Decreasing);

  const auto up = classify_shift(Projection::P, s(1, 0));
  CHECK(up.direction == Direction::Increasing);

  CHECK(classify_shift(Projection::Q, s(1, 0)).is_period());
  const auto q = classify_shift(Projection::Q, s(2, -1));  // t > 0, increment -sqrt2
  CHECK(q.increment == s(0, -1));
  CHECK(q.direction == Direction::Decreasing);

  CHECK_THROWS_AS(classify_shift(Projection::P, s(0, 0)), DomainError);
}

TEST_CASE("shift classification is sound by direct evaluation") {
  testing::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    QuadraticSurd t = testing::random_surd(rng, 9, 4);
    if (t.is_zero()) continue;
    for (Projection f : {Projection::P, Projection::Q}) {
      const auto cls = classify_shift(f, t);
      CHECK(cls.is_period() == cls.increment.is_zero());
      for (int j = 0; j < 5; ++j) {
        const QuadraticSurd x = testing::random_surd(rng);
        const QuadraticSurd step = apply(f, x + t) - apply(f, x);
        CHECK(step == cls.increment);
      }
      if (!cls.is_period()) {
        const bool same_sign = (t.sign() > 0) == (cls.increment.sign() > 0);
        CHECK((cls.direction == Direction::Increasing) == same_sign);
      }
    }
  }
}

TEST_CASE("identity decomposition") {
  testing::Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    const auto x = testing::random_surd(rng, 1000, 1000);
    CHECK(proj_p(x) + proj_q(x) == x);
  }
}

TEST_CASE("density_witness examples") {
  const auto w = density_witness(Projection::P, 0, 1, 5, 6);
  CHECK(w == s(Rational(11, 2), Rational(-7, 2)));
  CHECK(in_window(w, Projection::P, 0, 1, 5, 6));

  CHECK(density_witness(Projection::P, -1, 1, -1, 1) == s(0, 0));

  const auto q = density_witness(Projection::Q, 0, 1, 1, 2);
  CHECK(q.root2_coeff() == Rational(1));
  CHECK(in_window(q, Projection::Q, 0, 1, 1, 2));

  CHECK_THROWS_AS(density_witness(Projection::P, 1, 1, 0, 1), DomainError);
  CHECK_THROWS_AS(density_witness(Projection::Q, 0, 1, 2, 1), DomainError);
}

TEST_CASE("density witnesses land in random tiny windows") {
  testing::Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const Rational x0 = testing::random_rational(rng, 10'000, 97);
    const Rational y0 = testing::random_rational(rng, 10'000, 97);
    const Rational wx = Rational(1, testing::uniform(rng, 1, 100'000));
    const Rational wy = Rational(1, testing::uniform(rng, 1, 100'000));
    for (Projection f : {Projection::P, Projection::Q}) {
      const auto x = density_witness(f, x0, x0 + wx, y0, y0 + wy);
      CHECK(in_window(x, f, x0, x0 + wx, y0, y0 + wy));
    }
  }
}
