#include "patho/rational.hpp"

#include <cctype>
#include <ostream>

#include "patho/error.hpp"

namespace patho {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_natural(std::string_view s, std::string_view whole) {
  if (!all_digits(s)) throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  return Integer(std::string(s), 10);
}

}  // namespace

namespace {

// Euclid's quotient sequence on (g*p, g*d) equals the one on (p, d), so when
// the reduced fraction is small a few linear-time remainder steps find the
// (possibly huge) common factor g much faster than a general gcd.
bool short_euclid_gcd(const Integer& num, const Integer& den, Integer& g) {
  constexpr int kMaxSteps = 96;
  Integer a = abs(num);
  Integer b = den;
  for (int step = 0; step < kMaxSteps; ++step) {
    if (b == 0) {
      g = std::move(a);
      return true;
    }
    mpz_tdiv_r(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    std::swap(a, b);
  }
  return false;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  constexpr std::size_t kLargeLimbs = 8;
  if (den > 0 && mpz_size(den.get_mpz_t()) > kLargeLimbs && mpz_size(num.get_mpz_t()) > kLargeLimbs) {
    Integer g;
    if (short_euclid_gcd(num, den, g)) {
      Integer n;
      Integer d;
      mpz_divexact(n.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(d.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
      v_ = mpq_class(n, d);
      return;
    }
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  Integer num;
  Integer den = 1;
  if (slash == std::string_view::npos) {
    num = parse_natural(body, text);
  } else {
    num = parse_natural(body.substr(0, slash), text);
    den = parse_natural(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto d = body.find('.');
  std::string_view whole = body.substr(0, d);
  std::string_view fraction = body.substr(d + 1);
  if (whole.empty() && fraction.empty()) throw ParseError("malformed decimal '" + std::string(text) + "'");
  Integer w = whole.empty() ? Integer(0) : parse_natural(whole, text);
  Integer f = fraction.empty() ? Integer(0) : parse_natural(fraction, text);
  Rational value = Rational(w) + Rational(f, ipow(10, fraction.size()));
  return negative ? -value : value;
}

Rational Rational::pow2(long k) {
  mpq_class v(1);
  if (k >= 0) {
    mpq_mul_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpq_div_2exp(v.get_mpq_t(), v.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return from_raw(std::move(v));
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return from_raw(mpq_class(::abs(v_))); }

std::string Rational::str() const { return v_.get_str(10); }

Rational Rational::operator-() const { return from_raw(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational rational_arith(const Rational& x, const Rational& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw DomainError("unknown arithmetic operation");
}

Integer ipow(unsigned long base, unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, k);
  return r;
}

Integer round_half_up(const Rational& x) { return (x + Rational(1, 2)).floor(); }

}  // namespace patho
