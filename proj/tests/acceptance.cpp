// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "generators.hpp"
#include "patho/cantor.hpp"
#include "patho/cli/commands.hpp"
#include "patho/digit_surjection.hpp"
#include "patho/expansion.hpp"
#include "patho/projections.hpp"
#include "patho/qspan.hpp"

using namespace patho;
using testing::Rng;
using testing::uniform;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& what, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = seconds_since(t0);
  if (!o.pass) ++failures;
  std::printf("criterion %d: %s  %s  [%s] (%.2fs)\n", id, o.pass ? "PASS" : "FAIL", what.c_str(), o.detail.c_str(), dt);
  std::fflush(stdout);
}

std::string count(const char* label, long n) { return std::string(label) + "=" + std::to_string(n); }

BasisPtr surd_basis() {
  static const BasisPtr b = SpanBasis::parse({"1", "sqrt:2", "sqrt:3"});
  return b;
}

AdditiveMap random_map(Rng& rng) {
  std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(3));
  for (auto& row : rows) {
    for (auto& v : row) v = uniform(rng, 0, 2) == 0 ? Rational(0) : testing::random_rational(rng, 5, 4);
  }
  // about half of the matrices get a forced dependency
  switch (uniform(rng, 0, 3)) {
    case 1: {
      const Rational s = testing::random_rational(rng, 3, 2);
      const Rational t = testing::random_rational(rng, 3, 2);
      for (auto& row : rows) row[2] = s * row[0] + t * row[1];
      break;
    }
    case 2:
      rows[2] = rows[0];
      for (auto& v : rows[2]) v *= Rational(-3, 2);
      break;
    default: break;
  }
  return {surd_basis(), rows};
}

SpanElement random_element(Rng& rng) {
  return {surd_basis(), {testing::random_rational(rng, 50, 9), testing::random_rational(rng, 50, 9),
                         testing::random_rational(rng, 50, 9)}};
}

Rational det3(const AdditiveMap& f) {
  const auto& m = f.rows();
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Outcome expansion_roundtrip() {
  Rng rng(1001);
  long bad = 0;
  long cross_bad = 0;
  double core = 0;
  for (int i = 0; i < 10000; ++i) {
    const Rational x(Integer(uniform(rng, -1000000, 1000000)), Integer(uniform(rng, 1, 1000000)));
    for (int base : {2, 3}) {
      const auto t0 = Clock::now();
      const DigitExpansion e = to_expansion(x, base);
      const bool ok = from_expansion(e) == x;
      core += seconds_since(t0);
      if (!ok) ++bad;
      // every 50th: the plain positional sum, outside the timed path
      if (i % 50 == 0) {
        const Rational v = Rational(e.sign) *
                           positional_value(static_cast<unsigned>(base), e.integer_digits, e.prefix, e.cycle);
        if (v != x || !canonical_violation(e).empty()) ++cross_bad;
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "round-trip time %.2fs, limit 10s", core);
  return {bad == 0 && cross_bad == 0 && core < 10.0,
          count("failures", bad) + " " + count("cross-check failures", cross_bad) + " " + buf};
}

Outcome h_period() {
  Rng rng(1002);
  long bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational x = testing::random_unit_fraction(rng, 1000000);
    const Rational base = eval_h(x);
    for (long k : {1L, 2L, -3L}) {
      if (eval_h(x + Rational(k)) != base) ++bad;
    }
  }
  return {bad == 0, count("failures", bad) + " of 3000 shifted evaluations"};
}

Outcome h_surjectivity() {
  Rng rng(1003);
  std::vector<std::pair<Rational, Rational>> intervals;
  std::vector<Rational> targets;
  for (int i = 0; i < 50; ++i) intervals.push_back(testing::random_interval(rng, 1000, 100));
  for (int i = 0; i < 50; ++i) targets.push_back(Rational(Integer(uniform(rng, -100000, 100000)), Integer(uniform(rng, 1, 1000))));
  long bad = 0;
  const auto t0 = Clock::now();
  for (const auto& [l, r] : intervals) {
    for (const auto& y : targets) {
      const Rational x = preimage_h(y, l, r, true);
      if (!(l < x && x < r) || eval_h_signed(x) != y) ++bad;
    }
  }
  const double dt = seconds_since(t0);
  return {bad == 0 && dt < 30.0, count("failures", bad) + " of 2500, limit 30s"};
}

Outcome projections() {
  Rng rng(1004);
  long bad_identity = 0;
  long bad_shift = 0;
  long bad_density = 0;
  for (int i = 0; i < 1000; ++i) {
    const QuadraticSurd x = testing::random_surd(rng);
    if (proj_p(x) + proj_q(x) != x) ++bad_identity;

    QuadraticSurd t;
    while (t.is_zero()) t = testing::random_surd(rng);
    for (Projection f : {Projection::P, Projection::Q}) {
      const auto cls = classify_shift(f, t);
      const QuadraticSurd want = cls.is_period() ? QuadraticSurd() : cls.increment;
      for (int k = 0; k < 10; ++k) {
        const QuadraticSurd u = testing::random_surd(rng);
        if (apply(f, u + t) - apply(f, u) != want) ++bad_shift;
      }
    }

    const Projection f = i % 2 ? Projection::P : Projection::Q;
    const auto [x1, x2] = testing::random_interval(rng, 100, 30);
    const auto [y1, y2] = testing::random_interval(rng, 100, 30);
    const QuadraticSurd w = density_witness(f, x1, x2, y1, y2);
    const QuadraticSurd fw = apply(f, w);
    if (!(QuadraticSurd(x1) < w && w < QuadraticSurd(x2) && QuadraticSurd(y1) < fw && fw < QuadraticSurd(y2)))
      ++bad_density;
  }
  return {bad_identity == 0 && bad_shift == 0 && bad_density == 0,
          count("identity failures", bad_identity) + " " + count("shift failures", bad_shift) + " " +
              count("rectangle failures", bad_density)};
}

Outcome additive_theorems() {
  Rng rng(1005);
  long bad = 0;
  long noninjective = 0;
  long strictly_surjective_noninjective = 0;
  long witness_bad = 0;
  for (int i = 0; i < 500; ++i) {
    const AdditiveMap f = random_map(rng);
    const auto kernel = kernel_basis(f);
    const bool singular = det3(f).is_zero();
    if (kernel.empty() == singular || kernel.empty() != is_injective(f)) ++bad;
    for (const auto& k : kernel) {
      if (!apply_map(f, k).is_zero()) ++bad;
    }
    if (kernel.empty()) continue;
    ++noninjective;
    if (is_surjective(f)) ++strictly_surjective_noninjective;
    // onto its image: every attainable value is attained in every interval
    const SpanElement y = apply_map(f, random_element(rng));
    const auto [l, r] = testing::random_interval(rng, 100, 7);
    const SpanElement x = surjection_witness(f, y, l, r);
    if (apply_map(f, x) != y || compare_with_rational(x, l) != Comparison::Greater ||
        compare_with_rational(x, r) != Comparison::Less)
      ++witness_bad;
  }
  return {bad == 0 && witness_bad == 0,
          count("oracle mismatches", bad) + " " + count("non-injective", noninjective) + " " +
              count("witness failures", witness_bad) + " " +
              count("full-rank non-injective", strictly_surjective_noninjective)};
}

Outcome homogeneity_symmetry() {
  Rng rng(1006);
  long bad_h = 0;
  long bad_s = 0;
  for (int i = 0; i < 1000; ++i) {
    const AdditiveMap f = random_map(rng);
    const SpanElement x = random_element(rng);
    const SpanElement s = random_element(rng);
    if (apply_map(f, x + s) != apply_map(f, x) + apply_map(f, s)) ++bad_h;
    const AdditiveMap g = random_map(rng);
    const SpanElement x0 = random_element(rng);
    const SpanElement z = random_element(rng);
    if (apply_map(g, Rational(2) * x0 - z) != Rational(2) * apply_map(g, x0) - apply_map(g, z)) ++bad_s;
  }
  return {bad_h == 0 && bad_s == 0, count("homogeneity failures", bad_h) + " " + count("symmetry failures", bad_s)};
}

Outcome cantor_family() {
  const auto t0 = Clock::now();
  long bad_place = 0;
  for (std::size_t i = 0; i < 20; ++i) {
    const AffineCantor s = place_cantor(i);
    if (!(s.basis.lo < s.c && s.c < s.d && s.d < s.basis.hi)) ++bad_place;
    const auto mine = cantor_cover(s, s.cover_depth);
    for (std::size_t j = 0; j < i; ++j) {
      for (const auto& p : cantor_cover(place_cantor(j), s.cover_depth)) {
        for (const auto& q : mine) {
          if (!(p.hi < q.lo || q.hi < p.lo)) ++bad_place;
        }
      }
    }
  }

  Rng rng(1007);
  long bad_codec = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational y = testing::random_rational(rng, 1000000, 100000);
    if (decode_bits(encode_value(y)) != y) ++bad_codec;
  }

  long bad_pre = 0;
  std::size_t max_index = 0;
  for (int i = 0; i < 100; ++i) {
    const Rational y = testing::random_rational(rng, 1000, 64);
    // half-unit endpoints inside (-3, 3), widths 1 to 3
    const long w = uniform(rng, 2, 6);
    const long a = uniform(rng, -6, 6 - w);
    const Rational l(Integer(a), Integer(2));
    const Rational r(Integer(a + w), Integer(2));
    const CantorPreimage pre = preimage_f(y, l, r);
    max_index = std::max(max_index, pre.index);
    const CantorValue v = eval_f(pre.x, pre.index + 1);
    if (!(l < pre.x && pre.x < r) || !v.found || v.value != y || v.verified_up_to != pre.index) ++bad_pre;
  }
  const double dt = seconds_since(t0);
  return {bad_place == 0 && bad_codec == 0 && bad_pre == 0 && dt < 60.0,
          count("placement failures", bad_place) + " " + count("codec failures", bad_codec) + " " +
              count("preimage failures", bad_pre) + " " + count("largest index", static_cast<long>(max_index)) +
              ", limit 60s"};
}

Outcome quasiperiodic_samples() {
  const cli::FunctionDescriptor g = cli::parse_descriptor("quasi:sin+x/2");
  const auto rows = cli::sample(g, Rational(-10), Rational(10), Rational(1, 100));
  long bad = 0;
  double worst = 0;
  int checked = 0;
  for (std::size_t k = 0; k < rows.size() && checked < 100; k += 20, ++checked) {
    const double x = std::stod(rows[k].x);
    const double gx = std::stod(rows[k].fx);
    const double err = std::abs(cli::eval_float(g, x + 2 * std::numbers::pi) - gx - std::numbers::pi);
    worst = std::max(worst, err);
    if (!(err < 1e-9)) ++bad;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max error %.3g, tolerance 1e-9", worst);
  return {bad == 0 && checked == 100, count("points", checked) + " " + count("failures", bad) + " " + buf};
}

}  // namespace

int main() {
  report(1, "expansion round-trip, 10000 rationals x bases 2,3", expansion_roundtrip);
  report(2, "h period 1, 1000 rationals x shifts 1,2,-3", h_period);
  report(3, "h everywhere-surjectivity, 50 intervals x 50 signed targets", h_surjectivity);
  report(4, "projections identity, shift classification, density witnesses", projections);
  report(5, "periodic iff not injective, surjection witnesses, 500 matrices", additive_theorems);
  report(6, "graph homogeneity and point symmetry, 1000 triples each", homogeneity_symmetry);
  report(7, "Cantor placements, codec, preimage round trips", cantor_family);
  report(8, "quasiperiodic sample data, g(x+2pi)-g(x)=pi", quasiperiodic_samples);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
