#include "patho/expansion.hpp"

#include <algorithm>
#include <cstring>
#include <optional>

#include "patho/error.hpp"

namespace patho {

namespace {

void check_base(int base) {
  if (base != 2 && base != 3) throw DomainError("expansion base must be 2 or 3");
}

bool uniform(const Digits& d, std::uint8_t v) {
  return std::all_of(d.begin(), d.end(), [v](std::uint8_t x) { return x == v; });
}

std::vector<std::size_t> prime_factors(std::uint64_t n) {
  std::vector<std::size_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// The block is minimal iff it is not periodic with period size/p for any
// prime p dividing its size.
bool minimal_cycle(const Digits& cycle) {
  const std::size_t n = cycle.size();
  for (std::size_t p : prime_factors(n)) {
    const std::size_t shift = n / p;
    if (std::memcmp(cycle.data(), cycle.data() + shift, n - shift) == 0) return false;
  }
  return true;
}

constexpr unsigned kTritsPerWord = 19;  // 3^19 < 2^31

Integer digits_to_integer(std::span<const std::uint8_t> ds, unsigned base) {
  if (ds.size() <= 16) {
    unsigned long acc = 0;
    for (auto d : ds) acc = acc * base + d;
    return Integer(acc);
  }
  if (base == 2) {
    // pack bits into 64-bit words, most significant word first
    const std::size_t n = ds.size();
    std::vector<std::uint64_t> words((n + 63) / 64, 0);
    const std::size_t pad = words.size() * 64 - n;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bit = pad + i;
      words[bit / 64] |= static_cast<std::uint64_t>(ds[i] & 1U) << (63 - bit % 64);
    }
    Integer out;
    mpz_import(out.get_mpz_t(), words.size(), 1, sizeof(std::uint64_t), 0, 0, words.data());
    return out;
  }
  if (base == 3) {
    std::string text(ds.size(), '0');
    for (std::size_t i = 0; i < ds.size(); ++i) text[i] = static_cast<char>('0' + ds[i]);
    return Integer(text, 3);
  }
  Integer acc = 0;
  for (auto d : ds) acc = acc * base + d;
  return acc;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

// Order of `base` in the unit group mod m (gcd(base, m) = 1, m > 1).
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t m) {
  std::uint64_t phi = m;
  for (auto p : prime_factors(m)) phi = phi / p * (p - 1);
  std::uint64_t order = phi;
  for (auto p : prime_factors(phi)) {
    while (order % p == 0 && powmod(base, order / p, m) == 1) order /= p;
  }
  return order;
}

}  // namespace

std::string DigitExpansion::str() const {
  std::string s;
  if (sign < 0) s += '-';
  if (integer_digits.empty()) {
    s += '0';
  } else {
    for (auto d : integer_digits) s += static_cast<char>('0' + d);
  }
  if (!prefix.empty() || !cycle.empty()) {
    s += '.';
    for (auto d : prefix) s += static_cast<char>('0' + d);
    if (!cycle.empty()) {
      s += '(';
      for (auto d : cycle) s += static_cast<char>('0' + d);
      s += ')';
    }
  }
  return s;
}

Digits integer_digits(const Integer& n, unsigned base) {
  Digits out;
  Integer m = n;
  while (m > 0) {
    Integer rem = m % base;
    out.push_back(static_cast<std::uint8_t>(rem.get_ui()));
    m /= base;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

unsigned valuation(Integer& n, unsigned prime) {
  unsigned v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), prime) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), prime);
    ++v;
  }
  return v;
}

std::uint8_t digit_of(const Integer& q) { return static_cast<std::uint8_t>(q.get_ui()); }

// Long division of rem/den (0 <= rem < den). For a reduced fraction whose
// denominator is base^pre * m with gcd(m, base) = 1 the preperiod is exactly
// `pre`; afterwards the remainder sequence is purely periodic, so the cycle
// closes the first time the remainder at position `pre` comes back.
template <class Int>
void long_divide(Int rem, const Int& den, unsigned base, unsigned pre, DigitExpansion& e) {
  for (unsigned i = 0; i < pre && rem != 0; ++i) {
    rem *= base;
    const Int q = rem / den;
    rem -= q * den;
    e.prefix.push_back(digit_of(q));
  }
  if (rem == 0) return;
  const Int start = rem;
  do {
    rem *= base;
    const Int q = rem / den;
    rem -= q * den;
    e.cycle.push_back(digit_of(q));
  } while (rem != start);
}

// Same digits as long_divide for den < 2^31, but the cycle length is taken
// from the multiplicative order of the base so that digits can be produced
// a machine word at a time.
void long_divide_small(std::uint64_t rem, std::uint64_t den, std::uint64_t coprime, unsigned base,
                       unsigned pre, DigitExpansion& e) {
  for (unsigned i = 0; i < pre && rem != 0; ++i) {
    rem *= base;
    e.prefix.push_back(static_cast<std::uint8_t>(rem / den));
    rem %= den;
  }
  if (rem == 0) return;
  const std::uint64_t length = multiplicative_order(base, coprime);
  e.cycle.resize(length);
  std::uint8_t* out = e.cycle.data();
  std::uint64_t pos = 0;
  if (base == 2) {
    while (pos < length) {
      const unsigned k = static_cast<unsigned>(std::min<std::uint64_t>(31, length - pos));
      rem <<= k;
      const std::uint64_t q = rem / den;
      rem -= q * den;
      for (unsigned j = 0; j < k; ++j) out[pos + j] = static_cast<std::uint8_t>((q >> (k - 1 - j)) & 1U);
      pos += k;
    }
  } else {
    while (pos < length) {
      const unsigned k = static_cast<unsigned>(std::min<std::uint64_t>(kTritsPerWord, length - pos));
      std::uint64_t scale = 1;
      for (unsigned j = 0; j < k; ++j) scale *= 3;
      rem *= scale;
      std::uint64_t q = rem / den;
      rem -= q * den;
      for (unsigned j = k; j-- > 0;) {
        out[pos + j] = static_cast<std::uint8_t>(q % 3);
        q /= 3;
      }
      pos += k;
    }
  }
}

}  // namespace

DigitExpansion to_expansion(const Rational& x, int base) {
  check_base(base);
  DigitExpansion e;
  e.base = base;
  if (x.is_zero()) return e;
  e.sign = x.sign();
  const Rational mag = x.abs();
  const Integer whole = mag.floor();
  e.integer_digits = integer_digits(whole, static_cast<unsigned>(base));

  const Integer den = mag.den();
  const Integer rem = mag.num() - whole * den;
  Integer coprime = den;
  const unsigned pre = valuation(coprime, static_cast<unsigned>(base));
  if (mpz_sizeinbase(den.get_mpz_t(), 2) <= 31) {
    long_divide_small(rem.get_ui(), den.get_ui(), coprime.get_ui(), static_cast<unsigned>(base), pre, e);
  } else {
    long_divide<Integer>(rem, den, static_cast<unsigned>(base), pre, e);
  }
  return e;
}

std::string canonical_violation(const DigitExpansion& e) {
  if (e.base != 2 && e.base != 3) return "base must be 2 or 3";
  if (e.sign != 1 && e.sign != -1) return "sign must be +1 or -1";
  const auto bad_digit = [&](const Digits& d) {
    return std::any_of(d.begin(), d.end(), [&](std::uint8_t x) { return x >= e.base; });
  };
  if (bad_digit(e.integer_digits) || bad_digit(e.prefix) || bad_digit(e.cycle)) {
    return "digit out of range for base";
  }
  if (!e.integer_digits.empty() && e.integer_digits.front() == 0) return "leading zero in integer digits";
  if (!e.cycle.empty()) {
    if (uniform(e.cycle, 0)) return "cycle of zeros";
    if (uniform(e.cycle, static_cast<std::uint8_t>(e.base - 1))) return "cycle of (base-1) digits";
      if (!minimal_cycle(e.cycle)) return "cycle is not minimal";
    if (!e.prefix.empty() && e.prefix.back() == e.cycle.back()) return "prefix is not minimal";
  } else if (!e.prefix.empty() && e.prefix.back() == 0) {
    return "trailing zero in terminating expansion";
  }
  if (e.sign < 0 && e.integer_digits.empty() && e.prefix.empty() && e.cycle.empty()) {
    return "zero must carry sign +";
  }
  return {};
}

Rational positional_value(unsigned base, std::span<const std::uint8_t> integer_digits,
                          std::span<const std::uint8_t> prefix,
                          std::span<const std::uint8_t> cycle) {
  const Integer scale = ipow(base, prefix.size());
  Integer num = digits_to_integer(integer_digits, base) * scale + digits_to_integer(prefix, base);
  if (cycle.empty()) return Rational(num, scale);
  const Integer repunit = ipow(base, cycle.size()) - 1;
  num = num * repunit + digits_to_integer(cycle, base);
  return Rational(num, scale * repunit);
}

namespace {

// Rational with the smallest denominator in the closed interval [lo, hi],
// 0 <= lo < hi.
Rational simplest_between(const Rational& lo, const Rational& hi) {
  const Integer fl = lo.floor();
  const Rational ceil_lo = Rational(lo.is_integer() ? fl : Integer(fl + 1));
  if (ceil_lo <= hi) return ceil_lo;
  const Rational base(fl);
  return base + Rational(1) / simplest_between(Rational(1) / (hi - base), Rational(1) / (lo - base));
}

// Long cycles make the big-integer route expensive. Any value with
// denominator below 2^31 is pinned down by its first 64 bits, so take the
// simplest rational consistent with that window and keep it only if it
// regenerates exactly the same canonical expansion; canonical expansions
// are unique, so a match proves equality.
std::optional<Rational> reconstruct_short_denominator(const DigitExpansion& e) {
  constexpr std::size_t kLongCycle = 64;
  if (e.cycle.size() < kLongCycle) return std::nullopt;
  const std::size_t window = e.base == 2 ? 64 : 41;  // base^-window < 2^-62
  Digits head;
  head.reserve(window);
  for (std::size_t i = 0; i < window; ++i) {
    head.push_back(i < e.prefix.size() ? e.prefix[i] : e.cycle[(i - e.prefix.size()) % e.cycle.size()]);
  }
  const auto base = static_cast<unsigned>(e.base);
  const Integer scale = ipow(base, window);
  const Integer n = digits_to_integer(head, base);
  const Rational frac = simplest_between(Rational(n, scale), Rational(Integer(n + 1), scale));
  if (mpz_sizeinbase(frac.den().get_mpz_t(), 2) > 31) return std::nullopt;
  Rational value = Rational(digits_to_integer(e.integer_digits, base)) + frac;
  if (e.sign < 0) value = -value;
  if (to_expansion(value, e.base) != e) return std::nullopt;
  return value;
}

}  // namespace

Rational from_expansion(const DigitExpansion& e) {
  if (auto why = canonical_violation(e); !why.empty()) {
    throw DomainError("non-canonical expansion " + e.str() + ": " + why);
  }
  if (auto fast = reconstruct_short_denominator(e)) return *std::move(fast);
  const Rational mag =
      positional_value(static_cast<unsigned>(e.base), e.integer_digits, e.prefix, e.cycle);
  return e.sign < 0 ? -mag : mag;
}

Rational CylinderPrefix::width() const {
  return Rational(1, ipow(static_cast<unsigned long>(base), depth));
}

Digits CylinderPrefix::digits() const {
  const Integer scale = ipow(static_cast<unsigned long>(base), depth);
  const Rational scaled = value.frac() * Rational(scale);
  Digits d = integer_digits(scaled.floor(), static_cast<unsigned>(base));
  // left-pad to exactly `depth` digits
  d.insert(d.begin(), depth - d.size(), 0);
  return d;
}

CylinderPrefix cylinder_for_interval(const Rational& l, const Rational& r, int base) {
  check_base(base);
  if (!(l < r)) throw DomainError("empty interval (" + l.str() + ", " + r.str() + ")");
  for (unsigned depth = 0;; ++depth) {
    const Rational scale(ipow(static_cast<unsigned long>(base), depth));
    // leftmost m with m / scale > l
    const Integer m = (l * scale).floor() + 1;
    if (Rational(m + 1) / scale < r) return CylinderPrefix{base, depth, Rational(m) / scale};
  }
}

}  // namespace patho
