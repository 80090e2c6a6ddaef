"""Exact rational scalars.

All arithmetic in this package is exact: coefficients and LP data are
rationals, exponents and lattice data are arbitrary-precision integers.
gmpy2's mpq is used when available (it is a drop-in replacement for
fractions.Fraction here and considerably faster); the stdlib Fraction is
the fallback.
"""
from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q


def qstr(x) -> str:
    """Serialize a rational as "p" or "p/q" with positive denominator."""
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def qparse(s):
    """Parse an int, float-free rational string "p" or "p/q", or number."""
    if isinstance(s, str):
        return Q(s)
    if isinstance(s, int):
        return Q(s)
    return Q(s)
