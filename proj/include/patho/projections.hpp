#pragma once

#include "patho/period.hpp"
#include "patho/rational.hpp"
#include "patho/surd.hpp"

namespace patho {

/// The two component projections of Q[sqrt 2]:
///   p(a + b*sqrt2) = a,   q(a + b*sqrt2) = b*sqrt2.
/// Both are Q-linear, both are periodic, and p + q is the identity.
enum class Projection { P, Q };

QuadraticSurd proj_p(const QuadraticSurd& x);
QuadraticSurd proj_q(const QuadraticSurd& x);
QuadraticSurd apply(Projection f, const QuadraticSurd& x);

/// Every nonzero t in Q[sqrt 2] is a period or a quasiperiod of p and of q.
/// Throws DomainError for t = 0.
PeriodClass<QuadraticSurd> classify_shift(Projection f, const QuadraticSurd& t);

/// A point x of Q[sqrt 2] with x_lo < x < x_hi and y_lo < f(x) < y_hi,
/// witnessing that the graph of f is dense in the plane. Throws DomainError
/// for an empty window.
QuadraticSurd density_witness(Projection f, const Rational& x_lo, const Rational& x_hi,
                              const Rational& y_lo, const Rational& y_hi);

}  // namespace patho
