"""Exact rational scalar type used throughout the polyhedral code.

All LP and certification arithmetic is exact; no floats anywhere.
gmpy2.mpq is used when available (much faster), with fractions.Fraction
as a drop-in fallback.  Both reduce automatically and keep a positive
denominator.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rational
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rational

ZERO = Rational(0)
ONE = Rational(1)


def rat(value, denom=None):
    """Coerce ints, "p/q" strings or rationals into a Rational."""
    if denom is not None:
        return Rational(value, denom)
    if isinstance(value, str):
        if "/" in value:
            p, q = value.split("/", 1)
            return Rational(int(p), int(q))
        return Rational(int(value))
    return Rational(value)


def rat_str(value) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    v = Rational(value)
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"
