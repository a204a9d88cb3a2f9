#include "patho/cli/properties.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <thread>

#include <json.hpp>

#include "patho/cantor.hpp"
#include "patho/digit_surjection.hpp"
#include "patho/error.hpp"
#include "patho/expansion.hpp"
#include "patho/projections.hpp"
#include "patho/qspan.hpp"

namespace patho::cli {

namespace {

using Rng = std::mt19937_64;
using Trial = std::function<std::optional<Failure>(Rng&)>;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational rational(Rng& rng, long max_num, long max_den) {
  return Rational(Integer(uniform(rng, -max_num, max_num)), Integer(uniform(rng, 1, max_den)));
}

std::pair<Rational, Rational> interval(Rng& rng, long max_num, long max_den) {
  Rational l = rational(rng, max_num, max_den);
  Rational r = rational(rng, max_num, max_den);
  while (l == r) r = rational(rng, max_num, max_den);
  if (r < l) std::swap(l, r);
  return {l, r};
}

QuadraticSurd surd(Rng& rng) { return {rational(rng, 50, 20), rational(rng, 50, 20)}; }

std::string interval_str(const Rational& l, const Rational& r) { return "(" + l.str() + ", " + r.str() + ")"; }

std::optional<Failure> fail(std::string input, std::string expected, std::string got) {
  return Failure{0, std::move(input), std::move(expected), std::move(got)};
}

std::string cmp_str(std::strong_ordering o) {
  return o == std::strong_ordering::less ? "less" : o == std::strong_ordering::greater ? "greater" : "equal";
}

BasisPtr surd_basis() {
  static const BasisPtr b = SpanBasis::parse({"1", "sqrt:2", "sqrt:3"});
  return b;
}

BasisPtr opaque_basis() {
  static const BasisPtr b = SpanBasis::parse({"1", "opaque:pi", "opaque:e"});
  return b;
}

AdditiveMap random_map(Rng& rng, const BasisPtr& b) {
  const std::size_t n = b->size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (auto& row : rows) {
    for (auto& v : row) v = uniform(rng, 0, 2) == 0 ? Rational(0) : rational(rng, 5, 4);
  }
  const long shape = uniform(rng, 0, 3);
  if (shape == 1) {
    const Rational s = rational(rng, 3, 2);
    const Rational t = rational(rng, 3, 2);
    for (auto& row : rows) row.back() = s * row[0] + t * row[1];
  } else if (shape == 2) {
    const Rational s = rational(rng, 3, 2);
    for (auto& v : rows.back()) v = Rational(0);
    for (std::size_t c = 0; c < n; ++c) rows[1][c] = s * rows[0][c];
  }
  return {b, rows};
}

SpanElement element(Rng& rng, const BasisPtr& b) {
  std::vector<Rational> c(b->size());
  for (auto& v : c) v = rational(rng, 50, 9);
  return {b, c};
}

std::string matrix_str(const AdditiveMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < f.dim(); ++j) s += (j ? " " : "") + f.at(i, j).str();
  }
  return s + "]";
}

Rational det3(const AdditiveMap& f) {
  const auto& m = f.rows();
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// ---- exact-core

std::optional<Failure> expansion_roundtrip(Rng& rng) {
  const Rational x = rational(rng, 1000000, 1000000);
  const int base = static_cast<int>(uniform(rng, 2, 3));
  const DigitExpansion e = to_expansion(x, base);
  if (const std::string why = canonical_violation(e); !why.empty())
    return fail(x.str() + " base " + std::to_string(base), "canonical", why);
  const Rational back = from_expansion(e);
  if (back != x) return fail(x.str() + " base " + std::to_string(base), x.str(), back.str());
  return std::nullopt;
}

std::optional<Failure> cylinder_soundness(Rng& rng) {
  const auto [l, r] = interval(rng, 200, 60);
  const int base = static_cast<int>(uniform(rng, 2, 3));
  const CylinderPrefix c = cylinder_for_interval(l, r, base);
  if (!(l < c.value && c.value + c.width() < r))
    return fail(interval_str(l, r), "cylinder strictly inside", c.value.str() + " + " + c.width().str());
  return std::nullopt;
}

std::optional<Failure> surd_order(Rng& rng) {
  const QuadraticSurd u = surd(rng);
  const QuadraticSurd v = uniform(rng, 0, 4) == 0 ? u : surd(rng);
  const auto uv = surd_compare(u, v);
  const auto vu = surd_compare(v, u);
  const std::string input = u.str() + " vs " + v.str();
  if (uv != (0 <=> vu)) return fail(input, "antisymmetric", cmp_str(uv) + "/" + cmp_str(vu));
  if ((uv == 0) != (u == v)) return fail(input, u == v ? "equal" : "not equal", cmp_str(uv));
  const QuadraticSurd ru(u.rational_part());
  const QuadraticSurd rv(v.rational_part());
  if (surd_compare(ru, rv) != (u.rational_part() <=> v.rational_part()))
    return fail(ru.str() + " vs " + rv.str(), cmp_str(u.rational_part() <=> v.rational_part()),
                cmp_str(surd_compare(ru, rv)));
  return std::nullopt;
}

// ---- surd-projections

std::optional<Failure> projections_identity(Rng& rng) {
  const QuadraticSurd x = surd(rng);
  const QuadraticSurd sum = proj_p(x) + proj_q(x);
  if (sum != x) return fail(x.str(), x.str(), sum.str());
  return std::nullopt;
}

std::optional<Failure> classify_soundness(Rng& rng) {
  const Projection f = uniform(rng, 0, 1) ? Projection::P : Projection::Q;
  QuadraticSurd t;
  while (t.is_zero()) t = surd(rng);
  const auto cls = classify_shift(f, t);
  const std::string name = f == Projection::P ? "p" : "q";
  for (int k = 0; k < 10; ++k) {
    const QuadraticSurd x = surd(rng);
    const QuadraticSurd diff = apply(f, x + t) - apply(f, x);
    const QuadraticSurd want = cls.is_period() ? QuadraticSurd() : cls.increment;
    if (diff != want) return fail(name + " t=" + t.str() + " x=" + x.str(), want.str(), diff.str());
  }
  if (!cls.is_period() && cls.increment.is_zero()) return fail(name + " t=" + t.str(), "nonzero increment", "0");
  return std::nullopt;
}

std::optional<Failure> density(Rng& rng) {
  const Projection f = uniform(rng, 0, 1) ? Projection::P : Projection::Q;
  const auto [x1, x2] = interval(rng, 100, 30);
  const auto [y1, y2] = interval(rng, 100, 30);
  const QuadraticSurd w = density_witness(f, x1, x2, y1, y2);
  const QuadraticSurd fx = apply(f, w);
  const bool ok = QuadraticSurd(x1) < w && w < QuadraticSurd(x2) && QuadraticSurd(y1) < fx && fx < QuadraticSurd(y2);
  if (!ok) {
    return fail(std::string(f == Projection::P ? "p" : "q") + " rect " + interval_str(x1, x2) + "x" +
                    interval_str(y1, y2),
                "inside", w.str());
  }
  return std::nullopt;
}

// ---- digit-surjection

std::optional<Failure> h_roundtrip(Rng& rng) {
  const bool signed_mode = uniform(rng, 0, 1) == 1;
  Rational y = rational(rng, 2000, 64);
  if (!signed_mode) y = y.abs();
  const auto [l, r] = interval(rng, 20, 30);
  const Rational x = preimage_h(y, l, r, signed_mode);
  const Rational got = signed_mode ? eval_h_signed(x) : eval_h(x);
  const std::string input = std::string(signed_mode ? "hs" : "h") + " y=" + y.str() + " in " + interval_str(l, r);
  if (!(l < x && x < r)) return fail(input, "x inside", x.str());
  if (got != y) return fail(input, y.str(), got.str());
  return std::nullopt;
}

std::optional<Failure> h_period(Rng& rng) {
  const long den = uniform(rng, 2, 3000);
  const Rational x(Integer(uniform(rng, 1, den - 1)), Integer(den));
  long k = 0;
  while (k == 0) k = uniform(rng, -5, 5);
  const auto [a, b] = eval_h_periodic_check(x, Integer(k));
  if (a != b) return fail(x.str() + " k=" + std::to_string(k), a.str(), b.str());
  const auto sa = eval_h_signed(x);
  const auto sb = eval_h_signed(x + Rational(k));
  if (sa != sb) return fail("signed " + x.str() + " k=" + std::to_string(k), sa.str(), sb.str());
  return std::nullopt;
}

std::optional<Failure> h_zero_cases(Rng& rng) {
  // a ternary tail whose cycle holds a 2, or a word with at most one 2
  DigitExpansion e;
  e.base = 3;
  const long n = uniform(rng, 0, 6);
  for (long i = 0; i < n; ++i) e.prefix.push_back(static_cast<std::uint8_t>(uniform(rng, 0, 2)));
  Rational x;
  std::string kind;
  if (uniform(rng, 0, 1)) {
    e.cycle = {2};
    while (e.cycle.size() < 3) e.cycle.push_back(static_cast<std::uint8_t>(uniform(rng, 0, 1)));
    std::shuffle(e.cycle.begin(), e.cycle.end(), rng);
    x = positional_value(3, {}, e.prefix, e.cycle);
    kind = "cycle with a 2";
  } else {
    for (auto& d : e.prefix) d = d == 2 ? 1 : d;
    if (!e.prefix.empty() && uniform(rng, 0, 1)) e.prefix[static_cast<std::size_t>(uniform(rng, 0, n - 1))] = 2;
    e.cycle = {static_cast<std::uint8_t>(uniform(rng, 0, 1))};
    x = positional_value(3, {}, e.prefix, e.cycle);
    kind = "at most one 2";
  }
  x += Rational(uniform(rng, -3, 3));
  if (!eval_h(x).is_zero()) return fail(kind + " " + x.str(), "0", eval_h(x).str());
  if (!eval_h_signed(x).is_zero()) return fail("signed " + kind + " " + x.str(), "0", eval_h_signed(x).str());
  return std::nullopt;
}

// ---- cantor-surjection

std::pair<Rational, Rational> cantor_interval(Rng& rng) {
  // half-unit endpoints inside (-3, 3), widths 1 to 3: the first basis
  // interval inside has index at most 2147
  const long w = uniform(rng, 2, 6);
  const long a = uniform(rng, -6, 6 - w);
  return {Rational(Integer(a), Integer(2)), Rational(Integer(a + w), Integer(2))};
}

std::optional<Failure> cantor_codec(Rng& rng) {
  const Rational y = rational(rng, 100000, 5000);
  const BitStream s = encode_value(y);
  const Rational back = decode_bits(s);
  if (back != y) return fail(y.str(), y.str(), back.str() + " via " + s.str());
  return std::nullopt;
}

std::optional<Failure> cantor_roundtrip(Rng& rng) {
  const Rational y = rational(rng, 500, 40);
  const auto [l, r] = cantor_interval(rng);
  const CantorPreimage pre = preimage_f(y, l, r);
  const std::string input = "y=" + y.str() + " in " + interval_str(l, r);
  if (!(l < pre.x && pre.x < r)) return fail(input, "x inside", pre.x.str());
  const CantorValue v = eval_f(pre.x, pre.index + 1);
  if (!v.found || v.value != y || v.verified_up_to != pre.index)
    return fail(input, y.str() + " at " + std::to_string(pre.index),
                v.value.str() + " at " + std::to_string(v.verified_up_to));
  return std::nullopt;
}

std::optional<Failure> cantor_placement(std::size_t i) {
  const AffineCantor set = place_cantor(i);
  const std::string input = "C_" + std::to_string(i);
  if (!(set.basis.lo < set.c && set.c < set.d && set.d < set.basis.hi))
    return fail(input, "inside " + interval_str(set.basis.lo, set.basis.hi), "[" + set.c.str() + ", " + set.d.str() + "]");
  const auto mine = cantor_cover(set, set.cover_depth);
  for (std::size_t j = 0; j < i; ++j) {
    const auto theirs = cantor_cover(place_cantor(j), set.cover_depth);
    for (const auto& a : mine) {
      for (const auto& b : theirs) {
        if (!(a.hi < b.lo || b.hi < a.lo))
          return fail(input + " vs C_" + std::to_string(j), "disjoint covers",
                      interval_str(a.lo, a.hi) + " meets " + interval_str(b.lo, b.hi));
      }
    }
  }
  return std::nullopt;
}

// ---- qspan-additive

std::optional<Failure> periodic_iff_noninjective(Rng& rng) {
  const AdditiveMap f = random_map(rng, surd_basis());
  const auto kernel = kernel_basis(f);
  const bool singular = det3(f).is_zero();
  if (kernel.empty() == singular)
    return fail(matrix_str(f), singular ? "nonempty kernel" : "trivial kernel", std::to_string(kernel.size()));
  if (kernel.empty() != is_injective(f))
    return fail(matrix_str(f), "injective iff trivial kernel", is_injective(f) ? "injective" : "not injective");
  for (const auto& k : kernel) {
    if (!apply_map(f, k).is_zero()) return fail(matrix_str(f), "f(k) = 0", apply_map(f, k).str());
    // a kernel vector is a period
    const SpanElement x = element(rng, surd_basis());
    if (apply_map(f, x + k) != apply_map(f, x)) return fail(matrix_str(f) + " period " + k.str(), "f(x+t) = f(x)", "differs");
  }
  return std::nullopt;
}

std::optional<Failure> homogeneity(Rng& rng) {
  const AdditiveMap f = random_map(rng, surd_basis());
  const SpanElement x = element(rng, surd_basis());
  const SpanElement s = element(rng, surd_basis());
  const SpanElement lhs = apply_map(f, x + s);
  const SpanElement rhs = apply_map(f, x) + apply_map(f, s);
  if (lhs != rhs) return fail(matrix_str(f) + " x=" + x.str() + " s=" + s.str(), rhs.str(), lhs.str());
  return std::nullopt;
}

std::optional<Failure> symmetry(Rng& rng) {
  const AdditiveMap f = random_map(rng, surd_basis());
  const SpanElement x0 = element(rng, surd_basis());
  const SpanElement x = element(rng, surd_basis());
  const SpanElement lhs = apply_map(f, Rational(2) * x0 - x);
  const SpanElement rhs = Rational(2) * apply_map(f, x0) - apply_map(f, x);
  if (lhs != rhs) return fail(matrix_str(f) + " x0=" + x0.str() + " x=" + x.str(), rhs.str(), lhs.str());
  return std::nullopt;
}

std::optional<Failure> surjection(Rng& rng) {
  AdditiveMap f = random_map(rng, surd_basis());
  while (kernel_basis(f).empty()) f = random_map(rng, surd_basis());
  const SpanElement y = apply_map(f, element(rng, surd_basis()));
  const auto [l, r] = interval(rng, 100, 7);
  const SpanElement x = surjection_witness(f, y, l, r);
  const std::string input = matrix_str(f) + " y=" + y.str() + " in " + interval_str(l, r);
  if (apply_map(f, x) != y) return fail(input, y.str(), apply_map(f, x).str());
  if (compare_with_rational(x, l) != Comparison::Greater || compare_with_rational(x, r) != Comparison::Less)
    return fail(input, "inside", x.str());
  return std::nullopt;
}

std::optional<Failure> compare_antisymmetry(Rng& rng) {
  const BasisPtr b = uniform(rng, 0, 1) ? surd_basis() : opaque_basis();
  const SpanElement u = element(rng, b);
  const SpanElement v = uniform(rng, 0, 4) == 0 ? u : element(rng, b);
  const Comparison uv = real_compare(u, v, 64);
  const Comparison vu = real_compare(v, u, 64);
  const std::string input = u.str() + " vs " + v.str();
  const bool ok = (uv == Comparison::Less) == (vu == Comparison::Greater) &&
                  (uv == Comparison::Greater) == (vu == Comparison::Less) &&
                  (uv == Comparison::Equal) == (vu == Comparison::Equal) &&
                  (b->exact() ? uv != Comparison::Undecided : true);
  if (!ok) return fail(input, "antisymmetric", std::string(to_string(uv)) + "/" + std::string(to_string(vu)));
  return std::nullopt;
}

struct Suite {
  Trial trial;
  std::function<void(std::size_t trials)> prepare;
};

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> all = [] {
    std::map<std::string, Suite> m;
    m["expansion-roundtrip"] = {expansion_roundtrip, {}};
    m["cylinder-soundness"] = {cylinder_soundness, {}};
    m["surd-order"] = {surd_order, {}};
    m["projections-identity"] = {projections_identity, {}};
    m["classify-soundness"] = {classify_soundness, {}};
    m["density-witness"] = {density, {}};
    m["h-roundtrip"] = {h_roundtrip, {}};
    m["h-period"] = {h_period, {}};
    m["h-zero-cases"] = {h_zero_cases, {}};
    m["cantor-codec"] = {cantor_codec, {}};
    m["cantor-roundtrip"] = {cantor_roundtrip, [](std::size_t) { CantorFamily::shared().prebuild(2148); }};
    m["additive-periodic-iff-noninjective"] = {periodic_iff_noninjective, {}};
    m["additive-homogeneity"] = {homogeneity, {}};
    m["additive-symmetry"] = {symmetry, {}};
    m["additive-surjection-witness"] = {surjection, {}};
    m["real-compare-antisymmetry"] = {compare_antisymmetry, {}};
    return m;
  }();
  return all;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, suite] : suites()) out.push_back(name);
  out.push_back("cantor-placement");
  std::sort(out.begin(), out.end());
  return out;
}

PropertyReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  PropertyReport report;
  report.suite = name;
  report.trials = trials;
  report.seed = seed;

  std::function<std::optional<Failure>(std::size_t)> run_one;
  if (name == "cantor-placement") {
    // trial k checks placement k against all earlier ones
    CantorFamily::shared().prebuild(trials);
    run_one = [](std::size_t k) { return cantor_placement(k); };
  } else {
    const auto it = suites().find(name);
    if (it == suites().end()) throw ParseError("unknown suite '" + name + "'");
    if (it->second.prepare) it->second.prepare(trials);
    const Trial trial = it->second.trial;
    run_one = [trial, seed](std::size_t k) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
      Rng rng(seq);
      return trial(rng);
    };
  }

  std::vector<std::optional<Failure>> results(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < trials; k = next++) {
      try {
        results[k] = run_one(k);
      } catch (const std::exception& e) {
        results[k] = Failure{0, "trial " + std::to_string(k), "no exception", e.what()};
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(trials, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t k = 0; k < trials; ++k) {
    if (results[k]) {
      results[k]->trial = k;
      report.failures.push_back(std::move(*results[k]));
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string PropertyReport::json(bool with_timing) const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["trials"] = trials;
  doc["seed"] = seed;
  doc["passed"] = passed();
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    doc["failures"].push_back({{"trial", f.trial}, {"input", f.input}, {"expected", f.expected}, {"got", f.got}});
  }
  if (with_timing) doc["wall_seconds"] = wall_seconds;
  return doc.dump(2);
}

}  // namespace patho::cli
