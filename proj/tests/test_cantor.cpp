#include <doctest.h>

#include <thread>

#include "generators.hpp"
#include "patho/cantor.hpp"
#include "patho/error.hpp"

using namespace patho;

namespace {

AffineCantor standard() { return {0, Rational(0), Rational(1), {Rational(-1), Rational(2)}, 0}; }

bool disjoint(const Interval& x, const Interval& y) { return x.hi < y.lo || y.hi < x.lo; }

}  // namespace

TEST_CASE("rational enumeration") {
  const std::vector<Rational> expected{0, 1, -1, Rational(1, 2), Rational(-1, 2), 2, -2,
                                       Rational(1, 3), Rational(-1, 3), 3, -3, Rational(1, 4)};
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(enumerated_rational(k) == expected[k]);
}

TEST_CASE("basis interval golden values") {
  // frozen from tests/oracles/golden.py
  const std::vector<std::pair<Rational, Rational>> expected{
      {0, 1},  {-1, 0}, {-1, 1}, {0, Rational(1, 2)}, {Rational(-1, 2), 0}, {Rational(1, 2), 1},
      {Rational(-1, 2), 1}, {-1, Rational(1, 2)}, {0, 2}, {-2, 0}, {-1, Rational(-1, 2)}, {1, 2}};
  for (std::size_t n = 0; n < expected.size(); ++n) {
    const Interval iv = basis_interval(n);
    CHECK(iv.lo == expected[n].first);
    CHECK(iv.hi == expected[n].second);
  }
}

TEST_CASE("basis intervals are proper and distinct") {
  std::vector<Interval> seen;
  for (std::size_t n = 0; n < 400; ++n) {
    const Interval iv = basis_interval(n);
    CHECK(iv.lo < iv.hi);
    for (const auto& other : seen) CHECK_FALSE(other == iv);
    seen.push_back(iv);
  }
}

TEST_CASE("placement golden values") {
  // frozen from tests/oracles/golden.py: (c, d, cover depth)
  const std::vector<std::tuple<Rational, Rational, unsigned>> expected{
      {Rational(1, 4), Rational(3, 4), 0},        {Rational(-3, 4), Rational(-1, 4), 0},
      {Rational(-1, 8), Rational(1, 8), 1},       {Rational(5, 32), Rational(7, 32), 2},
      {Rational(-7, 32), Rational(-5, 32), 2},    {Rational(13, 16), Rational(15, 16), 1},
      {Rational(11, 24), Rational(13, 24), 2},    {Rational(-15, 16), Rational(-13, 16), 2},
      {Rational(77, 64), Rational(111, 64), 0},   {Rational(-111, 64), Rational(-77, 64), 0},
      {Rational(-9, 16), Rational(-25, 48), 2},   {Rational(461, 256), Rational(495, 256), 1}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const AffineCantor set = place_cantor(i);
    CHECK(set.index == i);
    CHECK(set.c == std::get<0>(expected[i]));
    CHECK(set.d == std::get<1>(expected[i]));
    CHECK(set.cover_depth == std::get<2>(expected[i]));
  }
}

TEST_CASE("placements are contained and disjoint from earlier covers") {
  constexpr std::size_t kCount = 40;
  for (std::size_t i = 0; i < kCount; ++i) {
    const AffineCantor set = place_cantor(i);
    CHECK(set.basis == basis_interval(i));
    CHECK(set.basis.lo < set.c);
    CHECK(set.c < set.d);
    CHECK(set.d < set.basis.hi);
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& piece : cantor_cover(place_cantor(j), set.cover_depth)) {
        CHECK(disjoint(piece, {set.c, set.d}));
      }
    }
  }
}

TEST_CASE("concurrent readers see the same placements") {
  CantorFamily family;
  std::vector<AffineCantor> results(8);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < results.size(); ++k) {
    threads.emplace_back([&, k] { results[k] = family.place(20 + k); });
  }
  for (auto& t : threads) t.join();
  for (std::size_t k = 0; k < results.size(); ++k) CHECK(results[k] == place_cantor(20 + k));
  CHECK(family.built() == 28);
}

TEST_CASE("cantor_member examples") {
  CHECK(cantor_member(Rational(1, 4), standard()));
  CHECK_FALSE(cantor_member(Rational(1, 2), standard()));
  CHECK(cantor_member(Rational(1, 3), standard()));
  CHECK(cantor_member(Rational(0), standard()));
  CHECK(cantor_member(Rational(1), standard()));
  CHECK(cantor_member(Rational(2, 3), standard()));
  CHECK(cantor_member(Rational(3, 4), standard()));  // 0.(20)
  CHECK_FALSE(cantor_member(Rational(4, 9), standard()));  // 0.11
  CHECK_FALSE(cantor_member(Rational(-1, 4), standard()));
  CHECK_FALSE(cantor_member(Rational(5, 4), standard()));
  const AffineCantor shifted{0, Rational(2), Rational(5), {Rational(1), Rational(6)}, 0};
  CHECK(cantor_member(Rational(3), shifted));              // t = 1/3
  CHECK_FALSE(cantor_member(Rational(7, 2), shifted));     // t = 1/2
}

TEST_CASE("decode_bits examples") {
  CHECK(decode_bits({{}, {0, 1}}) == Rational(-4, 3));
  CHECK(decode_bits({{1, 0}, {}}) == Rational(0));
  CHECK(decode_bits({{}, {1}}) == Rational(0));
  CHECK(decode_bits({{1, 1, 1}, {1}}) == Rational(0));
  CHECK(decode_bits({{}, {}}) == Rational(0));  // sign -, m = 0, nothing else
  CHECK(decode_bits({{1, 1, 1, 0, 1, 1, 0, 1}, {}}) == Rational(13, 4));
}

TEST_CASE("encode_value examples") {
  CHECK(encode_value(Rational(5, 2)) == BitStream{{1, 1, 1, 0, 1, 0, 1}, {}});
  CHECK(encode_value(Rational(0)) == BitStream{{1}, {}});
  CHECK(encode_value(Rational(-4, 3)) == BitStream{{0, 1, 0, 1}, {0, 1}}.normalized());
  CHECK(encode_value(Rational(-4, 3)) == BitStream{{}, {0, 1}});
}

TEST_CASE("codec round trip") {
  testing::Rng rng(53);
  for (int i = 0; i < 500; ++i) {
    const Rational y = testing::random_rational(rng, 1'000'000, 5000);
    CHECK(decode_bits(encode_value(y)) == y);
    const BitStream s = encode_value(y);
    CHECK(cantor_bits(cantor_point(s)) == s);
  }
}

TEST_CASE("normalization keeps the stream") {
  testing::Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    BitStream s;
    for (long k = testing::uniform(rng, 0, 6); k > 0; --k) s.prefix.push_back(testing::uniform(rng, 0, 1));
    for (long k = testing::uniform(rng, 0, 6); k > 0; --k) s.cycle.push_back(testing::uniform(rng, 0, 1));
    const BitStream n = s.normalized();
    for (std::size_t k = 0; k < 40; ++k) CHECK(n.bit(k) == s.bit(k));
    CHECK(n.normalized() == n);
    CHECK(decode_bits(n) == decode_bits(s));
  }
}

TEST_CASE("eval_f examples") {
  const AffineCantor c0 = place_cantor(0);
  const CantorValue left = eval_f(c0.c, 5);
  CHECK(left.found);
  CHECK(left.value == Rational(0));
  CHECK(left.verified_up_to == 0);

  const CantorValue outside = eval_f(Rational(1, 2), 5);  // middle of C_0's gap
  CHECK_FALSE(outside.found);
  CHECK(outside.value == Rational(0));
  CHECK(outside.verified_up_to == 5);

  // right endpoint t = 1 is the all-ones stream
  CHECK(eval_f(c0.d, 1).value == Rational(0));
}

TEST_CASE("preimage_f examples") {
  const auto p = preimage_f(Rational(-4, 3), Rational(0), Rational(1));
  CHECK(p.index == first_basis_inside(Rational(0), Rational(1)));
  CHECK(Rational(0) < p.x);
  CHECK(p.x < Rational(1));
  const CantorValue v = eval_f(p.x, p.index + 1);
  CHECK(v.found);
  CHECK(v.value == Rational(-4, 3));
  CHECK(v.verified_up_to == p.index);

  const auto z = preimage_f(Rational(0), Rational(-3), Rational(-2));
  CHECK(eval_f(z.x, z.index + 1).value == Rational(0));
  CHECK(eval_f(z.x, z.index + 1).verified_up_to == z.index);

  CHECK_THROWS_AS(preimage_f(Rational(1), Rational(1, 3), Rational(1, 3)), DomainError);
}

TEST_CASE("preimage_f round trip") {
  testing::Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    const Rational l = Rational(testing::uniform(rng, -8, 7), 2);
    const Rational r = l + Rational(testing::uniform(rng, 2, 6), 2);
    const Rational y = testing::random_rational(rng, 100'000, 999);
    const auto p = preimage_f(y, l, r);
    CHECK(l < p.x);
    CHECK(p.x < r);
    const CantorValue v = eval_f(p.x, p.index + 1);
    CHECK(v.found);
    CHECK(v.value == y);
    CHECK(v.verified_up_to == p.index);
  }
}
