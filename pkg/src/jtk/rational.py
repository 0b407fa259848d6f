"""Exact rationals.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator; this module only adds the wire format used in JSON output.
"""
from fractions import Fraction

Rational = Fraction


def format_rational(q) -> str:
    """Serialize as ``"num/den"`` in lowest terms, always with a denominator."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep:
        raise ValueError(f"rational {text!r} must have the form num/den")
    q = Fraction(int(num), int(den))
    if format_rational(q) != text:
        raise ValueError(f"rational {text!r} is not in canonical lowest terms")
    return q
