#include "patho/qspan.hpp"

#include <algorithm>
#include <sstream>

#include "patho/error.hpp"
#include "patho/surd.hpp"

namespace patho {

namespace {

bool squarefree(const Integer& d) {
  for (Integer p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

void require_same_basis(const BasisPtr& x, const BasisPtr& y) {
  if (x != y && !(*x == *y)) throw DomainError("span elements over different bases");
}

using Matrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form over the first `cols` columns; returns
// the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col].is_zero()) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Comparison from_sign(int s) {
  return s < 0 ? Comparison::Less : (s > 0 ? Comparison::Greater : Comparison::Equal);
}

}  // namespace

SpanBasis::SpanBasis(std::vector<BasisSymbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw DomainError("a span basis needs at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (const auto* s = std::get_if<SurdUnit>(&symbols_[i])) {
      if (s->radicand <= 1 || !squarefree(s->radicand)) {
        throw DomainError("sqrt:" + s->radicand.get_str() + " needs a squarefree radicand > 1");
      }
    }
    if (const auto* o = std::get_if<OpaqueSymbol>(&symbols_[i])) {
      if (!o->enclose) throw DomainError("opaque symbol '" + o->name + "' has no evaluator");
      exact_ = false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (symbols_[i] == symbols_[j]) throw DomainError("repeated basis symbol " + token(i));
    }
  }
}

std::shared_ptr<const SpanBasis> SpanBasis::parse(const std::vector<std::string>& tokens) {
  std::vector<BasisSymbol> symbols;
  for (const auto& tok : tokens) {
    if (tok == "1") {
      symbols.emplace_back(RationalUnit{});
    } else if (tok.rfind("sqrt:", 0) == 0) {
      const std::string digits = tok.substr(5);
      if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        throw ParseError("malformed basis symbol '" + tok + "'");
      }
      symbols.emplace_back(SurdUnit{Integer(digits)});
    } else if (tok == "opaque:pi") {
      symbols.emplace_back(OpaqueSymbol{"pi", pi_enclosure});
    } else if (tok == "opaque:e") {
      symbols.emplace_back(OpaqueSymbol{"e", e_enclosure});
    } else {
      throw ParseError("unknown basis symbol '" + tok + "'");
    }
  }
  return std::make_shared<const SpanBasis>(std::move(symbols));
}

std::string SpanBasis::token(std::size_t k) const {
  const auto& s = symbols_[k];
  if (std::holds_alternative<RationalUnit>(s)) return "1";
  if (const auto* u = std::get_if<SurdUnit>(&s)) return "sqrt:" + u->radicand.get_str();
  return "opaque:" + std::get<OpaqueSymbol>(s).name;
}

Interval SpanBasis::enclose(std::size_t k, unsigned bits) const {
  const auto& s = symbols_[k];
  if (std::holds_alternative<RationalUnit>(s)) return {Rational(1), Rational(1)};
  if (const auto* u = std::get_if<SurdUnit>(&s)) return sqrt_enclosure(u->radicand, bits);
  return std::get<OpaqueSymbol>(s).enclose(bits);
}

SpanElement::SpanElement(BasisPtr basis, std::vector<Rational> coords)
    : basis_(std::move(basis)), coords_(std::move(coords)) {
  if (!basis_) throw DomainError("span element without a basis");
  if (coords_.size() != basis_->size()) {
    throw DomainError("expected " + std::to_string(basis_->size()) + " coordinates, got " +
                      std::to_string(coords_.size()));
  }
}

SpanElement SpanElement::zero(BasisPtr basis) {
  const std::size_t n = basis->size();
  return {std::move(basis), std::vector<Rational>(n)};
}

SpanElement SpanElement::unit(BasisPtr basis, std::size_t k) {
  SpanElement e = zero(std::move(basis));
  e.coords_.at(k) = 1;
  return e;
}

bool SpanElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c.is_zero(); });
}

std::string SpanElement::str() const {
  std::string s;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k > 0) s += ',';
    s += coords_[k].str();
  }
  return s;
}

Interval SpanElement::enclose(unsigned bits) const {
  Interval sum{Rational(), Rational()};
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k].is_zero()) continue;
    sum = sum + coords_[k] * basis_->enclose(k, bits);
  }
  return sum;
}

SpanElement SpanElement::operator-() const {
  SpanElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

SpanElement& SpanElement::operator+=(const SpanElement& o) {
  require_same_basis(basis_, o.basis_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

SpanElement& SpanElement::operator-=(const SpanElement& o) {
  require_same_basis(basis_, o.basis_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

SpanElement operator*(const Rational& k, SpanElement x) {
  for (auto& c : x.coords_) c *= k;
  return x;
}

bool operator==(const SpanElement& x, const SpanElement& y) {
  return (x.basis_ == y.basis_ || *x.basis_ == *y.basis_) && x.coords_ == y.coords_;
}

AdditiveMap::AdditiveMap(BasisPtr basis, std::vector<std::vector<Rational>> rows)
    : basis_(std::move(basis)), rows_(std::move(rows)) {
  if (!basis_) throw DomainError("additive map without a basis");
  const std::size_t n = basis_->size();
  if (rows_.size() != n) throw DomainError("matrix must be square of the basis dimension");
  for (const auto& row : rows_) {
    if (row.size() != n) throw DomainError("matrix must be square of the basis dimension");
  }
}

AdditiveMap AdditiveMap::identity(BasisPtr basis) {
  const std::size_t n = basis->size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return {std::move(basis), std::move(rows)};
}

SpanElement apply_map(const AdditiveMap& f, const SpanElement& x) {
  require_same_basis(f.basis(), x.basis());
  std::vector<Rational> out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t k = 0; k < f.dim(); ++k) {
      if (!x[k].is_zero()) out[i] += f.at(i, k) * x[k];
    }
  }
  return {f.basis(), std::move(out)};
}

std::vector<SpanElement> kernel_basis(const AdditiveMap& f) {
  Matrix m = f.rows();
  const std::size_t n = f.dim();
  const auto pivots = row_reduce(m, n);
  std::vector<SpanElement> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    out.emplace_back(f.basis(), std::move(v));
  }
  return out;
}

std::size_t rank(const AdditiveMap& f) {
  Matrix m = f.rows();
  return row_reduce(m, f.dim()).size();
}

bool is_injective(const AdditiveMap& f) { return rank(f) == f.dim(); }

bool is_surjective(const AdditiveMap& f) { return rank(f) == f.dim(); }

SpanElement solve_preimage(const AdditiveMap& f, const SpanElement& y) {
  require_same_basis(f.basis(), y.basis());
  const std::size_t n = f.dim();
  Matrix m = f.rows();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(y[i]);
  const auto pivots = row_reduce(m, n);
  for (std::size_t r = pivots.size(); r < n; ++r) {
    if (!m[r][n].is_zero()) throw DomainError("target " + y.str() + " is not in the image of the map");
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
  return {f.basis(), std::move(x)};
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
    case Comparison::Undecided: return "Undecided";
  }
  return "Undecided";
}

Comparison compare_with_rational(const SpanElement& u, const Rational& q, unsigned precision_budget) {
  const SpanBasis& basis = *u.basis();
  Rational rational_part = -q;
  std::vector<std::size_t> irrational;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero()) continue;
    if (std::holds_alternative<RationalUnit>(basis.symbol(k))) {
      rational_part += u[k];
    } else {
      irrational.push_back(k);
    }
  }
  if (irrational.empty()) return from_sign(rational_part.sign());
  if (basis.exact() && irrational.size() == 1) {
    const auto& surd = std::get<SurdUnit>(basis.symbol(irrational.front()));
    return from_sign(sign_of_surd(rational_part, u[irrational.front()], surd.radicand));
  }

  const auto enclosure = [&](unsigned bits) {
    Interval sum{rational_part, rational_part};
    for (auto k : irrational) sum = sum + u[k] * basis.enclose(k, bits);
    return sum;
  };
  if (basis.exact()) {
    // 1 and square roots of distinct squarefree integers are independent
    // over Q, so the value is nonzero and refinement must separate it from 0
    for (unsigned bits = 32;; bits *= 2) {
      const Interval iv = enclosure(bits);
      if (iv.excludes_zero()) return from_sign(iv.lo.sign());
    }
  }
  for (unsigned bits = 16;; bits *= 2) {
    const unsigned used = std::min(bits, precision_budget);
    const Interval iv = enclosure(used);
    if (iv.excludes_zero()) return from_sign(iv.lo.sign());
    if (used >= precision_budget) return Comparison::Undecided;
  }
}

Comparison real_compare(const SpanElement& u, const SpanElement& v, unsigned precision_budget) {
  require_same_basis(u.basis(), v.basis());
  return compare_with_rational(u - v, Rational(), precision_budget);
}

PeriodClass<SpanElement> classify_shift_additive(const AdditiveMap& f, const SpanElement& t,
                                                 unsigned precision_budget) {
  if (t.is_zero()) throw DomainError("zero shift is neither a period nor a quasiperiod");
  PeriodClass<SpanElement> out{ShiftKind::Period, apply_map(f, t), std::nullopt};
  if (out.increment.is_zero()) return out;
  out.kind = ShiftKind::Quasiperiod;
  const Comparison shift_sign = compare_with_rational(t, Rational(), precision_budget);
  const Comparison step_sign = compare_with_rational(out.increment, Rational(), precision_budget);
  if (shift_sign == Comparison::Undecided || step_sign == Comparison::Undecided) {
    throw UndecidedError("direction of the quasiperiod is undecided at " +
                         std::to_string(precision_budget) + " bits");
  }
  out.direction = shift_sign == step_sign ? Direction::Increasing : Direction::Decreasing;
  return out;
}

SpanElement surjection_witness(const AdditiveMap& f, const SpanElement& y, const Rational& l,
                               const Rational& r, unsigned precision_budget) {
  if (!(l < r)) throw DomainError("empty interval (" + l.str() + ", " + r.str() + ")");
  const SpanElement base = solve_preimage(f, y);
  const auto kernel = kernel_basis(f);
  if (kernel.empty()) throw DomainError("the map is injective: no kernel direction to slide along");

  const SpanElement* direction = nullptr;
  bool undecided = false;
  for (const auto& k : kernel) {
    const Comparison c = compare_with_rational(k, Rational(), precision_budget);
    if (c == Comparison::Undecided) undecided = true;
    if (c == Comparison::Less || c == Comparison::Greater) {
      direction = &k;
      break;
    }
  }
  if (direction == nullptr) {
    if (undecided) throw UndecidedError("no kernel element with a certified nonzero value");
    throw DomainError("every kernel element has real value 0");
  }

  // x = base + rho * direction with rho a dyadic near the value that puts x
  // at the midpoint of (l, r); refine until membership is certified
  const Rational mid = (l + r) / Rational(2);
  for (long k = 0;; ++k) {
    const unsigned bits = static_cast<unsigned>(k) + 16;
    if (!f.basis()->exact() && bits > precision_budget) {
      throw UndecidedError("interval membership undecided at " + std::to_string(precision_budget) + " bits");
    }
    const Interval v0 = base.enclose(bits);
    const Interval kappa = direction->enclose(bits);
    const Rational v0_mid = (v0.lo + v0.hi) / Rational(2);
    const Rational kappa_mid = (kappa.lo + kappa.hi) / Rational(2);
    if (kappa_mid.is_zero()) continue;
    const Rational scale = Rational::pow2(k);
    const Rational rho = Rational(round_half_up((mid - v0_mid) / kappa_mid * scale)) / scale;
    SpanElement x = base + rho * *direction;
    if (compare_with_rational(x, l, precision_budget) == Comparison::Greater &&
        compare_with_rational(x, r, precision_budget) == Comparison::Less) {
      return x;
    }
  }
}

}  // namespace patho
