#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "patho/certified.hpp"
#include "patho/period.hpp"
#include "patho/rational.hpp"

namespace patho {

// Finite-dimensional models of additive (Q-linear) functions: a declared
// Q-basis of real numbers, coordinate vectors over it, and rational matrices
// acting on the coordinates.

struct RationalUnit {
  friend bool operator==(const RationalUnit&, const RationalUnit&) = default;
};

/// sqrt(radicand), radicand squarefree and > 1.
struct SurdUnit {
  Integer radicand;
  friend bool operator==(const SurdUnit&, const SurdUnit&) = default;
};

/// A named real known only through certified enclosures of width <= 2^-bits.
struct OpaqueSymbol {
  std::string name;
  std::function<Interval(unsigned bits)> enclose;
  friend bool operator==(const OpaqueSymbol& x, const OpaqueSymbol& y) { return x.name == y.name; }
};

using BasisSymbol = std::variant<RationalUnit, SurdUnit, OpaqueSymbol>;

/// Ordered list of reals declared linearly independent over Q. Independence
/// is only checked for square roots (distinct squarefree radicands).
class SpanBasis {
 public:
  explicit SpanBasis(std::vector<BasisSymbol> symbols);
  /// Tokens `1`, `sqrt:<d>`, `opaque:pi`, `opaque:e`.
  static std::shared_ptr<const SpanBasis> parse(const std::vector<std::string>& tokens);

  std::size_t size() const { return symbols_.size(); }
  const BasisSymbol& symbol(std::size_t k) const { return symbols_[k]; }
  std::string token(std::size_t k) const;
  /// True when every symbol is 1 or a square root, so order is decidable.
  bool exact() const { return exact_; }
  Interval enclose(std::size_t k, unsigned bits) const;

  friend bool operator==(const SpanBasis& x, const SpanBasis& y) { return x.symbols_ == y.symbols_; }

 private:
  std::vector<BasisSymbol> symbols_;
  bool exact_ = true;
};

using BasisPtr = std::shared_ptr<const SpanBasis>;

/// Coordinates of a real number over a SpanBasis.
class SpanElement {
 public:
  SpanElement(BasisPtr basis, std::vector<Rational> coords);
  static SpanElement zero(BasisPtr basis);
  static SpanElement unit(BasisPtr basis, std::size_t k);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }
  std::size_t size() const { return coords_.size(); }
  bool is_zero() const;

  /// Comma-separated coordinates.
  std::string str() const;
  /// Certified enclosure of the real value.
  Interval enclose(unsigned bits) const;

  SpanElement operator-() const;
  SpanElement& operator+=(const SpanElement& o);
  SpanElement& operator-=(const SpanElement& o);
  friend SpanElement operator+(SpanElement x, const SpanElement& y) { return x += y; }
  friend SpanElement operator-(SpanElement x, const SpanElement& y) { return x -= y; }
  friend SpanElement operator*(const Rational& k, SpanElement x);

  friend bool operator==(const SpanElement& x, const SpanElement& y);

 private:
  BasisPtr basis_;
  std::vector<Rational> coords_;
};

/// Square rational matrix; column k holds the image of basis symbol k.
class AdditiveMap {
 public:
  AdditiveMap(BasisPtr basis, std::vector<std::vector<Rational>> rows);
  static AdditiveMap identity(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  std::size_t dim() const { return rows_.size(); }
  const Rational& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  BasisPtr basis_;
  std::vector<std::vector<Rational>> rows_;
};

SpanElement apply_map(const AdditiveMap& f, const SpanElement& x);

/// Basis of the null space, i.e. of the periods of f.
std::vector<SpanElement> kernel_basis(const AdditiveMap& f);
std::size_t rank(const AdditiveMap& f);
bool is_injective(const AdditiveMap& f);
/// Onto the whole coordinate space (full row rank).
bool is_surjective(const AdditiveMap& f);

/// Some x with f(x) = y; throws DomainError when y is not in the image.
SpanElement solve_preimage(const AdditiveMap& f, const SpanElement& y);

enum class Comparison { Less, Equal, Greater, Undecided };

std::string_view to_string(Comparison c);

constexpr unsigned kDefaultPrecisionBudget = 256;

/// Order of the real values. Exact (never Undecided) on bases of 1 and square
/// roots; with opaque symbols, enclosures are refined up to `precision_budget`
/// bits and Undecided is returned if they still overlap.
Comparison real_compare(const SpanElement& u, const SpanElement& v,
                        unsigned precision_budget = kDefaultPrecisionBudget);

/// Order of value(u) against a rational.
Comparison compare_with_rational(const SpanElement& u, const Rational& q,
                                 unsigned precision_budget = kDefaultPrecisionBudget);

/// Period iff f(t) = 0, otherwise quasiperiod with increment f(t). Throws
/// DomainError for t = 0 and UndecidedError if the direction cannot be
/// certified within the budget.
PeriodClass<SpanElement> classify_shift_additive(const AdditiveMap& f, const SpanElement& t,
                                                 unsigned precision_budget = kDefaultPrecisionBudget);

/// x with f(x) = y and l < value(x) < r: a particular solution shifted along
/// a kernel direction of nonzero value. Throws DomainError when y is outside
/// the image, the kernel is trivial or the interval is empty.
SpanElement surjection_witness(const AdditiveMap& f, const SpanElement& y, const Rational& l,
                               const Rational& r, unsigned precision_budget = kDefaultPrecisionBudget);

}  // namespace patho
