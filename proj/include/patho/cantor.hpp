#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "patho/certified.hpp"
#include "patho/rational.hpp"

namespace patho {

// ---------------------------------------------------------------------------
// Countable open basis
// ---------------------------------------------------------------------------

/// k-th rational of the fixed enumeration: reduced fractions ordered by
/// (|num| + den, |num|, sign) with + before -. Starts 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, ...
Rational enumerated_rational(std::size_t k);

/// n-th basis interval: pairs (r_i, r_j) scanned in increasing Cantor pairing
/// code (i + j)(i + j + 1)/2 + j, keeping those with r_i < r_j.
Interval basis_interval(std::size_t n);

// ---------------------------------------------------------------------------
// Affine Cantor sets
// ---------------------------------------------------------------------------

/// Image of the ternary Cantor set under t -> c + t (d - c).
struct AffineCantor {
  std::size_t index = 0;
  Rational c;
  Rational d;
  Interval basis;           ///< (a_i, b_i) it was placed in
  unsigned cover_depth = 0;  ///< depth of the predecessor covers used at placement

  Rational length() const { return d - c; }
  friend bool operator==(const AffineCantor&, const AffineCantor&) = default;
};

/// The 2^depth closed intervals of length (d - c) / 3^depth covering C.
std::vector<Interval> cantor_cover(const AffineCantor& set, unsigned depth);

/// Membership in the closed set: some ternary expansion of (x - c)/(d - c)
/// uses only the digits 0 and 2.
bool cantor_member(const Rational& x, const AffineCantor& set);

/// Inductive placement C_0, C_1, ... with C_i inside basis_interval(i) and
/// disjoint from every earlier C_j. Placements are memoized; concurrent
/// readers share the table and at most one caller extends it at a time.
class CantorFamily {
 public:
  /// Process-wide table shared by the free functions below.
  static CantorFamily& shared();

  AffineCantor place(std::size_t i);
  /// Builds C_0 ... C_{n-1} so later queries below n only read.
  void prebuild(std::size_t n);
  std::size_t built() const;

 private:
  AffineCantor place_next();

  mutable std::shared_mutex mutex_;
  std::deque<AffineCantor> sets_;
  // hulls [c, d] are nested or disjoint; each level maps c -> index
  std::map<Rational, std::size_t> roots_;
  std::deque<std::map<Rational, std::size_t>> nested_;
  std::deque<Rational> subtree_length_;  // own length plus all nested ones
};

/// C_i: let (a, b) = basis_interval(i). Refine every earlier C_j to its
/// depth-t cover, t the least depth at which the covers occupy less than half
/// of (a, b). Take the widest gap between covers (leftmost on ties) and let
/// [c, d] be its middle half.
AffineCantor place_cantor(std::size_t i);

// ---------------------------------------------------------------------------
// Bit-stream codec from Cantor points onto the representable reals
// ---------------------------------------------------------------------------

using Bits = std::vector<std::uint8_t>;

/// Eventually periodic bit stream prefix (cycle)^inf; an empty cycle means
/// zeros forever.
struct BitStream {
  Bits prefix;
  Bits cycle;

  std::uint8_t bit(std::size_t k) const;
  /// Same stream with minimal cycle and preperiod; an all-zero cycle is dropped
  /// together with trailing zeros of the prefix.
  BitStream normalized() const;
  std::string str() const;

  friend bool operator==(const BitStream&, const BitStream&) = default;
};

/// Sign bit (1 +, 0 -), unary length m (m ones then a 0), m integer bits MSB
/// first, then the binary fraction. A stream without the unary terminator
/// decodes to 0.
Rational decode_bits(const BitStream& s);

/// Right inverse of decode_bits.
BitStream encode_value(const Rational& y);

/// Halved {0,2}-digits of t in [0, 1]; nullopt when t is not in the Cantor set.
std::optional<BitStream> cantor_bits(const Rational& t);

/// Cantor point sum 2 s_k 3^-(k+1) of a bit stream.
Rational cantor_point(const BitStream& s);

// ---------------------------------------------------------------------------
// The everywhere surjection f
// ---------------------------------------------------------------------------

struct CantorValue {
  Rational value;
  /// Index of the set containing x, or the search bound N when x lies in
  /// none of C_0 ... C_{N-1}; then f(x) = 0 unless x is in some later C_i.
  std::size_t verified_up_to = 0;
  bool found = false;
};

CantorValue eval_f(const Rational& x, std::size_t max_index);

struct CantorPreimage {
  Rational x;
  std::size_t index = 0;
};

/// x in (l, r) with f(x) = y, using the first basis interval inside (l, r).
CantorPreimage preimage_f(const Rational& y, const Rational& l, const Rational& r);

/// First n with [a_n, b_n] contained in (l, r).
std::size_t first_basis_inside(const Rational& l, const Rational& r);

}  // namespace patho
