#include "patho/surd.hpp"

#include <ostream>

#include "patho/error.hpp"

namespace patho {

int sign_of_surd(const Rational& a, const Rational& b, const Integer& d) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // mixed signs: the component of larger magnitude wins; a^2 == d*b^2 is
  // impossible for non-square d and b != 0
  return a * a > Rational(d) * b * b ? sa : sb;
}

int QuadraticSurd::sign() const { return sign_of_surd(a_, b_, Integer(2)); }

QuadraticSurd QuadraticSurd::parse(std::string_view text) {
  constexpr std::string_view kRoot = "*s2";
  if (text.size() < kRoot.size() || text.substr(text.size() - kRoot.size()) != kRoot) {
    try {
      return {Rational::parse(text)};
    } catch (const ParseError&) {
      throw ParseError("malformed surd literal '" + std::string(text) + "'");
    }
  }
  const std::string_view body = text.substr(0, text.size() - kRoot.size());
  // the rational part can only carry a sign at position 0, so the first
  // +/- after that separates the two components
  const auto split = body.find_first_of("+-", 1);
  try {
    if (split == std::string_view::npos) return {Rational(), Rational::parse(body)};
    const Rational a = Rational::parse(body.substr(0, split));
    std::string_view rest = body.substr(split + 1);
    if (body[split] == '+') return {a, Rational::parse(rest)};
    if (!rest.empty() && (rest.front() == '-' || rest.front() == '+')) throw ParseError("sign");
    return {a, -Rational::parse(rest)};
  } catch (const ParseError&) {
    throw ParseError("malformed surd literal '" + std::string(text) + "'");
  }
}

std::string QuadraticSurd::str() const {
  std::string s = a_.str();
  if (b_.sign() < 0) {
    s += '-';
    s += (-b_).str();
  } else {
    s += '+';
    s += b_.str();
  }
  return s + "*s2";
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r, r^2 = 2
  Rational a = a_ * o.a_ + Rational(2) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) { return os << x.str(); }

std::strong_ordering surd_compare(const QuadraticSurd& u, const QuadraticSurd& v) {
  const int s = (u - v).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

QuadraticSurd surd_arith(const QuadraticSurd& u, const QuadraticSurd& v, SurdOp op) {
  switch (op) {
    case SurdOp::Add: return u + v;
    case SurdOp::Sub: return u - v;
    case SurdOp::Mul: return u * v;
  }
  throw DomainError("unknown surd operation");
}

}  // namespace patho
