"""Exact rational helpers shared by models and reports."""

from fractions import Fraction
from typing import Any

import sympy


def to_fraction(value: Any) -> Fraction:
    """Convert ints, ``"p/q"`` strings, Fractions and sympy Rationals to Fraction.

    Raises:
        ValueError: If the value is not an exact rational.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"not an exact rational: {value!r}") from None
    if isinstance(value, sympy.Basic) and value.is_Rational:
        return Fraction(int(value.p), int(value.q))
    raise ValueError(f"not an exact rational: {value!r}")


def fraction_str(value: Fraction | int) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers)."""
    return str(Fraction(value))


def to_sympy(value: Fraction | int) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)
