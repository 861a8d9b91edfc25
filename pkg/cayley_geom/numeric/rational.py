import numbers
from fractions import Fraction
from typing import Any

import sympy

from .numeric_exception import NumericException


def parse_rational(value: Any) -> sympy.Rational:
    """
    Converts a JSON scalar into an exact rational.
    Accepts ints, Fractions, sympy numbers, "p/q" strings and decimal literals.
    """
    if isinstance(value, bool):
        raise NumericException(f"not a number: {value!r}")
    if isinstance(value, sympy.Rational):
        return value
    if isinstance(value, numbers.Integral):
        return sympy.Integer(int(value))
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, float):
        # repr keeps the shortest decimal, so 0.1 becomes 1/10 and not the binary expansion
        return sympy.Rational(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                if int(den) == 0:
                    raise NumericException(f"zero denominator in '{value}'")
                return sympy.Rational(int(num), int(den))
            return sympy.Rational(text)
        except (ValueError, TypeError, sympy.SympifyError):
            raise NumericException(f"cannot parse rational '{value}'")
    if isinstance(value, sympy.Basic) and value.is_Rational:
        return sympy.Rational(value)
    raise NumericException(f"not a rational scalar: {value!r}")


def format_scalar(value: Any) -> str | float:
    """Canonical JSON form: gcd-reduced "p/q" (or "p") for rationals, plain numbers for floats."""
    if isinstance(value, sympy.Basic):
        if value.is_Rational:
            rational = sympy.Rational(value)
            if rational.q == 1:
                return str(rational.p)
            return f"{rational.p}/{rational.q}"
        if value.is_number:
            return float(value)
        return str(value)
    if isinstance(value, Fraction):
        return format_scalar(sympy.Rational(value.numerator, value.denominator))
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return str(value)
    return float(value)


def rationalize(value: float, max_denominator: int) -> sympy.Rational:
    """Closest rational with bounded denominator."""
    fraction = Fraction(float(value)).limit_denominator(max_denominator)
    return sympy.Rational(fraction.numerator, fraction.denominator)
