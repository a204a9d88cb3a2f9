"""Exact evaluation of pathological real functions.

Rationals go in as int, Fraction or "n/d" strings and come back as Fraction.
Elements of Q[sqrt 2] are (a, b) pairs meaning a + b*sqrt(2).
"""

import json
from fractions import Fraction

from . import _patho
from ._patho import DomainError, ParseError, UndecidedError, suite_names

__all__ = [
    "DomainError", "ParseError", "UndecidedError",
    "to_expansion", "from_expansion", "cylinder_for_interval",
    "surd_compare", "proj_p", "proj_q", "classify_shift", "density_witness",
    "eval_h", "preimage_h",
    "basis_interval", "place_cantor", "encode_value", "decode_bits", "eval_f", "preimage_f",
    "apply_map", "kernel_basis", "rank", "surjection_witness", "real_compare",
    "verify", "suite_names", "run_cli",
]


def _lit(x):
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _frac(s):
    return Fraction(s)


def _surd_lit(x):
    if isinstance(x, str):
        return x
    a, b = x
    return f"{_lit(a)}+{_lit(b)}*s2"


def _surd(s):
    # "a+b*s2" or "a-b*s2" with a itself possibly negative
    body = s[:-3]
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    while cut > 0 and body[cut - 1] in "+-":
        cut -= 1
    a, b = body[:cut], body[cut:]
    return Fraction(a), Fraction(b.lstrip("+"))


def to_expansion(x, base):
    return _patho.to_expansion(_lit(x), base)


def from_expansion(base, sign, integer_digits, prefix, cycle):
    return _frac(_patho.from_expansion(base, sign, list(integer_digits), list(prefix), list(cycle)))


def cylinder_for_interval(l, r, base):
    value, depth = _patho.cylinder_for_interval(_lit(l), _lit(r), base)
    return _frac(value), depth


def surd_compare(u, v):
    return _patho.surd_compare(_surd_lit(u), _surd_lit(v))


def proj_p(x):
    return _surd(_patho.project("p", _surd_lit(x)))


def proj_q(x):
    return _surd(_patho.project("q", _surd_lit(x)))


def classify_shift(f, t):
    kind, increment, direction = _patho.classify_shift(f, _surd_lit(t))
    return kind, _surd(increment), direction


def density_witness(f, x_lo, x_hi, y_lo, y_hi):
    return _surd(_patho.density_witness(f, *map(_lit, (x_lo, x_hi, y_lo, y_hi))))


def eval_h(x, signed_mode=False):
    return _frac(_patho.eval_h(_lit(x), signed_mode))


def preimage_h(y, l, r, signed_mode=False):
    return _frac(_patho.preimage_h(_lit(y), _lit(l), _lit(r), signed_mode))


def basis_interval(n):
    lo, hi = _patho.basis_interval(n)
    return _frac(lo), _frac(hi)


def place_cantor(i):
    d = _patho.place_cantor(i)
    return {k: (v if k in ("index", "t") else _frac(v)) for k, v in d.items()}


def encode_value(y):
    return _patho.encode_value(_lit(y))


def decode_bits(prefix, cycle):
    return _frac(_patho.decode_bits(list(prefix), list(cycle)))


def eval_f(x, max_index):
    value, verified_up_to, found = _patho.eval_f(_lit(x), max_index)
    return _frac(value), verified_up_to, found


def preimage_f(y, l, r):
    x, index = _patho.preimage_f(_lit(y), _lit(l), _lit(r))
    return _frac(x), index


def _matrix(matrix):
    return [[_lit(v) for v in row] for row in matrix]


def apply_map(basis, matrix, x):
    return [_frac(c) for c in _patho.apply_map(list(basis), _matrix(matrix), [_lit(c) for c in x])]


def kernel_basis(basis, matrix):
    return [[_frac(c) for c in k] for k in _patho.kernel_basis(list(basis), _matrix(matrix))]


def rank(basis, matrix):
    return _patho.rank(list(basis), _matrix(matrix))


def surjection_witness(basis, matrix, y, l, r):
    out = _patho.surjection_witness(list(basis), _matrix(matrix), [_lit(c) for c in y], _lit(l), _lit(r))
    return [_frac(c) for c in out]


def real_compare(basis, u, v, precision_budget=256):
    return _patho.real_compare(list(basis), [_lit(c) for c in u], [_lit(c) for c in v], precision_budget)


def verify(suite, trials, seed):
    return json.loads(_patho.verify(suite, trials, seed))


def run_cli(*args):
    """Runs the command-line front end in-process; returns (code, stdout, stderr)."""
    return _patho.run_cli([str(a) for a in args])
