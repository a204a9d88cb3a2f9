#include "patho/digit_surjection.hpp"

#include <algorithm>

#include "patho/error.hpp"

namespace patho {

namespace {

constexpr std::uint8_t kMarker = 2;

Rational binary_value(std::span<const std::uint8_t> integer_bits, std::span<const std::uint8_t> prefix,
                      std::span<const std::uint8_t> cycle) {
  return positional_value(2, integer_bits, prefix, cycle);
}

}  // namespace

HDecomposition decompose_h(const Rational& x, bool signed_mode) {
  HDecomposition out;
  out.signed_mode = signed_mode;
  out.expansion = to_expansion(x.frac(), 3);
  const DigitExpansion& e = out.expansion;

  // infinitely many 2s
  if (std::find(e.cycle.begin(), e.cycle.end(), kMarker) != e.cycle.end()) return out;
  std::vector<std::size_t> twos;
  for (std::size_t i = 0; i < e.prefix.size(); ++i) {
    if (e.prefix[i] == kMarker) twos.push_back(i);
  }
  if (twos.size() < 2) return out;

  const std::size_t first = twos[twos.size() - 2];
  const std::size_t last = twos.back();
  out.last_twos = std::make_pair(first, last);
  const auto begin = e.prefix.begin();
  out.b_block.assign(begin + static_cast<std::ptrdiff_t>(first + 1), begin + static_cast<std::ptrdiff_t>(last));
  out.y_prefix.assign(begin + static_cast<std::ptrdiff_t>(last + 1), e.prefix.end());
  out.y_cycle = e.cycle;

  std::span<const std::uint8_t> integer_bits(out.b_block);
  bool negative = false;
  if (signed_mode && !integer_bits.empty()) {
    negative = integer_bits.front() == 0;
    integer_bits = integer_bits.subspan(1);
  }
  out.value = binary_value(integer_bits, out.y_prefix, out.y_cycle);
  if (negative) out.value = -out.value;
  return out;
}

Rational eval_h(const Rational& x) { return decompose_h(x, false).value; }

Rational eval_h_signed(const Rational& x) { return decompose_h(x, true).value; }

std::pair<Rational, Rational> eval_h_periodic_check(const Rational& x, const Integer& k) {
  return {eval_h(x), eval_h(x + Rational(k))};
}

Rational preimage_h(const Rational& y, const Rational& l, const Rational& r, bool signed_mode) {
  if (!(l < r)) throw DomainError("empty interval (" + l.str() + ", " + r.str() + ")");
  if (!signed_mode && y.sign() < 0) throw DomainError("h takes only non-negative values; use the signed map");

  // Any tail appended after the cylinder digits keeps x inside (l, r); the
  // tail starts with a 2 and never ends in repeating 2s, so x stays strictly
  // inside the closed cylinder as well.
  const CylinderPrefix cyl = cylinder_for_interval(l, r, 3);
  Digits digits = cyl.digits();

  const Rational magnitude = y.abs();
  const Integer whole = magnitude.floor();
  const DigitExpansion fraction = to_expansion(magnitude.frac(), 2);

  digits.push_back(kMarker);
  if (signed_mode) digits.push_back(y.sign() < 0 ? 0 : 1);
  const Digits whole_bits = integer_digits(whole, 2);
  digits.insert(digits.end(), whole_bits.begin(), whole_bits.end());
  digits.push_back(kMarker);
  digits.insert(digits.end(), fraction.prefix.begin(), fraction.prefix.end());

  return Rational(cyl.integer_part()) + positional_value(3, {}, digits, fraction.cycle);
}

}  // namespace patho
