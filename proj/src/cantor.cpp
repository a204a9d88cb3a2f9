#include "patho/cantor.hpp"

#include <algorithm>
#include <numeric>

#include "patho/error.hpp"
#include "patho/expansion.hpp"

namespace patho {

namespace {

// Memoized enumeration of rationals and of basis intervals.
class BasisEnumeration {
 public:
  static BasisEnumeration& shared() {
    static BasisEnumeration instance;
    return instance;
  }

  Rational rational(std::size_t k) {
    std::lock_guard lock(mutex_);
    return rational_locked(k);
  }

  Interval interval(std::size_t n) {
    std::lock_guard lock(mutex_);
    while (intervals_.size() <= n) {
      const std::size_t i = diagonal_ - offset_;
      const std::size_t j = offset_;
      if (offset_ == diagonal_) {
        ++diagonal_;
        offset_ = 0;
      } else {
        ++offset_;
      }
      const Rational ri = rational_locked(i);
      const Rational rj = rational_locked(j);
      if (ri < rj) intervals_.push_back({ri, rj});
    }
    return intervals_[n];
  }

 private:
  const Rational& rational_locked(std::size_t k) {
    while (rationals_.size() <= k) {
      ++height_;
      for (unsigned long num = 0; num < height_; ++num) {
        const unsigned long den = height_ - num;
        if (std::gcd(num, den) != 1) continue;
        rationals_.emplace_back(Integer(num), Integer(den));
        if (num != 0) rationals_.emplace_back(-Integer(num), Integer(den));
      }
    }
    return rationals_[k];
  }

  std::mutex mutex_;
  std::vector<Rational> rationals_;
  std::vector<Interval> intervals_;
  unsigned long height_ = 0;
  // next pairing code is (i, j) = (diagonal_ - offset_, offset_)
  std::size_t diagonal_ = 0;
  std::size_t offset_ = 0;
};

std::vector<Interval> children(const std::vector<Interval>& pieces) {
  std::vector<Interval> out;
  out.reserve(2 * pieces.size());
  for (const auto& p : pieces) {
    const Rational third = p.width() / Rational(3);
    out.push_back({p.lo, p.lo + third});
    out.push_back({p.hi - third, p.hi});
  }
  return out;
}

bool meets_open(const Interval& closed, const Rational& a, const Rational& b) {
  return closed.lo < b && closed.hi > a;
}

bool all_equal(const Bits& bits, std::uint8_t v) {
  return std::all_of(bits.begin(), bits.end(), [v](std::uint8_t b) { return b == v; });
}

}  // namespace

Rational enumerated_rational(std::size_t k) { return BasisEnumeration::shared().rational(k); }

Interval basis_interval(std::size_t n) { return BasisEnumeration::shared().interval(n); }

std::size_t first_basis_inside(const Rational& l, const Rational& r) {
  if (!(l < r)) throw DomainError("empty interval (" + l.str() + ", " + r.str() + ")");
  for (std::size_t n = 0;; ++n) {
    const Interval basis = basis_interval(n);
    if (l < basis.lo && basis.hi < r) return n;
  }
}

std::vector<Interval> cantor_cover(const AffineCantor& set, unsigned depth) {
  std::vector<Interval> pieces{{set.c, set.d}};
  for (unsigned t = 0; t < depth; ++t) pieces = children(pieces);
  return pieces;
}

bool cantor_member(const Rational& x, const AffineCantor& set) {
  if (x < set.c || x > set.d) return false;
  return cantor_bits((x - set.c) / set.length()).has_value();
}

CantorFamily& CantorFamily::shared() {
  static CantorFamily instance;
  return instance;
}

AffineCantor CantorFamily::place(std::size_t i) {
  {
    std::shared_lock lock(mutex_);
    if (i < sets_.size()) return sets_[i];
  }
  std::unique_lock lock(mutex_);
  while (sets_.size() <= i) sets_.push_back(place_next());
  return sets_[i];
}

void CantorFamily::prebuild(std::size_t n) {
  if (n > 0) place(n - 1);
}

std::size_t CantorFamily::built() const {
  std::shared_lock lock(mutex_);
  return sets_.size();
}

namespace {

using Level = std::map<Rational, std::size_t>;

// Walks the hull tree restricted to the open interval (a, b).
struct HullWalk {
  const std::deque<AffineCantor>& sets;
  const std::deque<Level>& nested;
  const Rational& a;
  const Rational& b;

  template <class F>
  void each(const Level& level, F&& f) const {
    auto it = level.lower_bound(a);
    if (it != level.begin() && sets[std::prev(it)->second].d > a) --it;
    for (; it != level.end() && it->first < b; ++it) f(it->second);
  }

  // sets crossing a or b; everything nested inside [a, b] only adds length
  void collect(const Level& level, const std::deque<Rational>& subtree_length, Rational& inner,
               std::vector<std::size_t>& crossing) const {
    each(level, [&](std::size_t k) {
      if (a <= sets[k].c && sets[k].d <= b) {
        inner += subtree_length[k];
      } else {
        crossing.push_back(k);
        collect(nested[k], subtree_length, inner, crossing);
      }
    });
  }

  // depth-t cover pieces meeting (a, b), in increasing order of left end
  template <class F>
  void pieces(const Level& level, unsigned depth, F& f) const {
    each(level, [&](std::size_t k) { node_pieces(k, depth, f); });
  }

  // Pieces of the depth-t cover of set k and of the sets nested in it, in
  // order of left end. A segment no wider than `floor` with nothing nested
  // in it holds no gap wider than that, so it is passed on whole.
  template <class F>
  void node_pieces(std::size_t k, unsigned depth, F& f) const {
    if (sets[k].length() <= f.floor()) {
      f(Interval{sets[k].c, sets[k].d});
      return;
    }
    std::vector<std::size_t> kids;
    each(nested[k], [&](std::size_t j) { kids.push_back(j); });
    std::vector<Rational> width{sets[k].length()};
    for (unsigned m = 0; m < depth; ++m) width.push_back(width.back() / Rational(3));
    std::size_t q = 0;
    const auto segment = [&](const auto& self, const Rational& lo, const Rational& hi, unsigned m) -> void {
      while (q < kids.size() && sets[kids[q]].c < lo) node_pieces(kids[q++], depth, f);
      if (!(lo < b && hi > a)) return;
      const bool empty = q == kids.size() || sets[kids[q]].c > hi;
      if (m == depth || (empty && width[m] <= f.floor())) {
        f(Interval{lo, hi});
        return;
      }
      self(self, lo, lo + width[m + 1], m + 1);
      self(self, hi - width[m + 1], hi, m + 1);
    };
    segment(segment, sets[k].c, sets[k].d, 0);
    while (q < kids.size()) node_pieces(kids[q++], depth, f);
  }
};

}  // namespace

AffineCantor CantorFamily::place_next() {
  AffineCantor out;
  out.index = sets_.size();
  out.basis = basis_interval(out.index);
  const Rational& a = out.basis.lo;
  const Rational& b = out.basis.hi;
  const HullWalk walk{sets_, nested_, a, b};

  // only the parts of earlier sets that reach into (a, b) matter; the depth-t
  // cover of a set inside [a, b] has length (2/3)^t times its own
  Rational inner_length;
  std::vector<std::size_t> crossing_sets;
  walk.collect(roots_, subtree_length_, inner_length, crossing_sets);
  std::vector<std::vector<Interval>> crossing;
  for (std::size_t k : crossing_sets) crossing.push_back({{sets_[k].c, sets_[k].d}});
  const Rational half = (b - a) / Rational(2);
  Rational scale(1);
  for (;;) {
    Rational occupied = inner_length * scale;
    for (const auto& pieces : crossing) {
      for (const auto& p : pieces) occupied += std::min(p.hi, b) - std::max(p.lo, a);
    }
    if (occupied < half) break;
    for (auto& pieces : crossing) {
      pieces = children(pieces);
      std::erase_if(pieces, [&](const Interval& p) { return !meets_open(p, a, b); });
    }
    scale *= Rational(2, 3);
    ++out.cover_depth;
  }

  struct GapScan {
    Interval best;
    Rational width;
    Rational cursor;
    Rational lower_bound;
    const Rational& floor() const { return std::max(width, lower_bound); }
    void operator()(const Interval& p) {
      if (p.lo > cursor) {
        Rational w = p.lo - cursor;
        if (w > width) {
          best = {cursor, p.lo};
          width = std::move(w);
        }
      }
      if (p.hi > cursor) cursor = p.hi;
    }
  } scan{{a, a}, Rational(0), a, Rational(0)};
  // Gaps between the outermost hulls are true gaps, so the widest of them
  // bounds the answer from below.
  {
    Rational cursor = a;
    walk.each(roots_, [&](std::size_t k) {
      if (sets_[k].c > cursor) scan.lower_bound = std::max(scan.lower_bound, sets_[k].c - cursor);
      if (sets_[k].d > cursor) cursor = sets_[k].d;
    });
    if (b > cursor) scan.lower_bound = std::max(scan.lower_bound, b - cursor);
  }
  walk.pieces(roots_, out.cover_depth, scan);
  scan(Interval{b, b});
  const Interval best = scan.best;

  const Rational quarter = best.width() / Rational(4);
  out.c = best.lo + quarter;
  out.d = best.hi - quarter;

  // hook the new hull under the innermost hull containing it
  Level* level = &roots_;
  for (;;) {
    auto it = level->upper_bound(out.c);
    if (it == level->begin()) break;
    --it;
    if (sets_[it->second].d < out.d) break;
    level = &nested_[it->second];
  }
  level->emplace(out.c, out.index);
  nested_.emplace_back();
  subtree_length_.push_back(out.length());
  for (const Level* up = &roots_; up != level;) {
    auto it = std::prev(up->upper_bound(out.c));
    subtree_length_[it->second] += out.length();
    up = &nested_[it->second];
  }
  return out;
}

AffineCantor place_cantor(std::size_t i) { return CantorFamily::shared().place(i); }

std::uint8_t BitStream::bit(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  if (cycle.empty()) return 0;
  return cycle[(k - prefix.size()) % cycle.size()];
}

BitStream BitStream::normalized() const {
  BitStream out = *this;
  if (!out.cycle.empty()) {
    const std::size_t n = out.cycle.size();
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p != 0) continue;
      bool periodic = true;
      for (std::size_t i = p; i < n && periodic; ++i) periodic = out.cycle[i] == out.cycle[i - p];
      if (periodic) {
        out.cycle.resize(p);
        break;
      }
    }
    while (!out.prefix.empty() && out.prefix.back() == out.cycle.back()) {
      out.prefix.pop_back();
      std::rotate(out.cycle.rbegin(), out.cycle.rbegin() + 1, out.cycle.rend());
    }
    if (all_equal(out.cycle, 0)) out.cycle.clear();
  }
  if (out.cycle.empty()) {
    while (!out.prefix.empty() && out.prefix.back() == 0) out.prefix.pop_back();
  }
  return out;
}

std::string BitStream::str() const {
  std::string s;
  for (auto b : prefix) s += static_cast<char>('0' + b);
  s += '(';
  for (auto b : cycle) s += static_cast<char>('0' + b);
  if (cycle.empty()) s += '0';
  s += ')';
  return s;
}

Rational decode_bits(const BitStream& s) {
  const bool negative = s.bit(0) == 0;
  const bool ones_forever = !s.cycle.empty() && all_equal(s.cycle, 1);
  std::size_t pos = 1;
  std::size_t width = 0;
  while (s.bit(pos) == 1) {
    if (pos >= s.prefix.size() && ones_forever) return Rational();
    ++width;
    ++pos;
  }
  ++pos;  // unary terminator

  Integer whole = 0;
  for (std::size_t k = 0; k < width; ++k) whole = whole * 2 + s.bit(pos++);

  Bits rest_prefix;
  Bits rest_cycle = s.cycle;
  if (pos < s.prefix.size()) {
    rest_prefix.assign(s.prefix.begin() + static_cast<std::ptrdiff_t>(pos), s.prefix.end());
  } else if (!rest_cycle.empty()) {
    const std::size_t shift = (pos - s.prefix.size()) % rest_cycle.size();
    std::rotate(rest_cycle.begin(), rest_cycle.begin() + static_cast<std::ptrdiff_t>(shift), rest_cycle.end());
  }
  const Rational value = Rational(whole) + positional_value(2, {}, rest_prefix, rest_cycle);
  return negative ? -value : value;
}

BitStream encode_value(const Rational& y) {
  BitStream s;
  const Rational magnitude = y.abs();
  const Bits whole = integer_digits(magnitude.floor(), 2);
  const DigitExpansion fraction = to_expansion(magnitude.frac(), 2);
  s.prefix.push_back(y.sign() < 0 ? 0 : 1);
  s.prefix.insert(s.prefix.end(), whole.size(), 1);
  s.prefix.push_back(0);
  s.prefix.insert(s.prefix.end(), whole.begin(), whole.end());
  s.prefix.insert(s.prefix.end(), fraction.prefix.begin(), fraction.prefix.end());
  s.cycle = fraction.cycle;
  return s.normalized();
}

std::optional<BitStream> cantor_bits(const Rational& t) {
  if (t.sign() < 0 || t > Rational(1)) return std::nullopt;
  if (t == Rational(1)) return BitStream{{}, {1}};  // 0.(2)
  DigitExpansion e = to_expansion(t, 3);
  const auto has_one = [](const Digits& d) { return std::find(d.begin(), d.end(), 1) != d.end(); };
  if (has_one(e.cycle)) return std::nullopt;
  if (has_one(e.prefix)) {
    // only ...1 terminating has the {0,2} twin ...0(2)
    const bool last_only = e.cycle.empty() && e.prefix.back() == 1 &&
                           !has_one(Digits(e.prefix.begin(), e.prefix.end() - 1));
    if (!last_only) return std::nullopt;
    e.prefix.back() = 0;
    e.cycle = {2};
  }
  BitStream s;
  for (auto d : e.prefix) s.prefix.push_back(d / 2);
  for (auto d : e.cycle) s.cycle.push_back(d / 2);
  return s;
}

Rational cantor_point(const BitStream& s) {
  Digits prefix;
  Digits cycle;
  for (auto b : s.prefix) prefix.push_back(static_cast<std::uint8_t>(2 * b));
  for (auto b : s.cycle) cycle.push_back(static_cast<std::uint8_t>(2 * b));
  return positional_value(3, {}, prefix, cycle);
}

CantorValue eval_f(const Rational& x, std::size_t max_index) {
  CantorFamily& family = CantorFamily::shared();
  family.prebuild(max_index);
  for (std::size_t i = 0; i < max_index; ++i) {
    const AffineCantor set = family.place(i);
    if (x < set.c || x > set.d) continue;
    if (auto bits = cantor_bits((x - set.c) / set.length())) {
      return {decode_bits(*bits), i, true};
    }
  }
  return {Rational(), max_index, false};
}

CantorPreimage preimage_f(const Rational& y, const Rational& l, const Rational& r) {
  const std::size_t n = first_basis_inside(l, r);
  const AffineCantor set = place_cantor(n);
  const Rational t = cantor_point(encode_value(y));
  return {set.c + t * set.length(), n};
}

}  // namespace patho
