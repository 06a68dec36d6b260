"""Exact rational arithmetic helpers.

All combinatorial weights, simplicial coefficients, and event times in this
package are exact rationals.  gmpy2's mpq is used when available (it is an
order of magnitude faster for the pivoting-heavy enumeration code); the
stdlib Fraction is a drop-in fallback.  Only metric distances are floats.
"""

from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rational(num=0, den=1):
        return _mpq(num, den)

    RATIONAL_BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    def rational(num=0, den=1):
        return Fraction(num, den)

    RATIONAL_BACKEND = "fractions"

Q0 = rational(0)
Q1 = rational(1)


def parse_rational(text) -> "Rational":
    """Parse 'p/q' or integer literals (also accepts int / existing rationals)."""
    if isinstance(text, str):
        s = text.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            return rational(int(num), int(den))
        return rational(int(s))
    if isinstance(text, int):
        return rational(text)
    return rational(text.numerator, text.denominator)


def format_rational(q) -> str:
    """Render as 'p/q', or bare 'p' for integers."""
    num, den = q.numerator, q.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def as_fraction(q) -> Fraction:
    return Fraction(q.numerator, q.denominator)
