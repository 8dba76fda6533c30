"""Exact rational arithmetic backend.

All length/weight computations in this package use arbitrary-precision
rationals; no verdict ever depends on floating point.  gmpy2's mpq is used
when available (much faster), with fractions.Fraction as a drop-in fallback.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)


def rat(value) -> Q:
    """Coerce an int, string or rational to the exact rational type."""
    if isinstance(value, str):
        return parse_rational(value)
    return Q(value)


def parse_rational(text: str) -> Q:
    """Parse 'p' or 'p/q' into an exact rational.

    Decimal notation is rejected on purpose: weights are exact.
    """
    s = text.strip()
    if "." in s:
        raise ValueError(f"decimal weight {text!r} not allowed; use p/q")
    if "/" in s:
        num, _, den = s.partition("/")
        d = int(den)
        if d == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Q(int(num), d)
    return Q(int(s))


def format_rational(value) -> str:
    """Render a rational as 'p' or 'p/q' (reduced, exact)."""
    q = Q(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
