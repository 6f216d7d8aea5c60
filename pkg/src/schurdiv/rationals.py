"""Parsing and formatting of exact rational scalars.

The scalar type everywhere in this package is ``fractions.Fraction``:
arbitrary precision, always reduced, denominator positive.  The textual
form is ``p/q`` with the sign on the numerator, or bare ``p`` when q = 1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError


def parse_rational(text: str, offset: int = 0) -> Fraction:
    """Parse ``p/q`` or ``p`` into a Fraction."""
    s = text.strip()
    if not s:
        raise ParseError("empty rational token", offset)
    num_s, sep, den_s = s.partition("/")
    try:
        num = int(num_s.strip())
    except ValueError:
        raise ParseError(f"bad integer {num_s.strip()!r}", offset) from None
    if not sep:
        return Fraction(num)
    try:
        den = int(den_s.strip())
    except ValueError:
        raise ParseError(f"bad integer {den_s.strip()!r}", offset) from None
    if den == 0:
        raise ParseError("zero denominator", offset)
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    # Fraction.__str__ already emits "p/q" / "p" with the sign on top.
    return str(q)
