"""Exact rational helpers: integer/fractional part, sawtooth, Bernoulli.

Every real quantity in this package is a :class:`fractions.Fraction`.
Nothing here ever touches a float.
"""

import re
from fractions import Fraction
from numbers import Rational

ExactRational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)


class InvalidInput(ValueError):
    """Raised for arguments outside an operation's domain."""


class FormulaError(ArithmeticError):
    """A closed formula produced a value it provably cannot take.

    Seeing this means a formula was transcribed wrongly, not that the
    input was bad.
    """


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text):
    """Parse ``"a/b"`` or ``"a"``; decimals and floats are refused."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise InvalidInput(f"not an exact rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise InvalidInput(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def render(x):
    """Canonical text form: lowest terms, sign on the numerator, no ``/1``."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def int_part(x):
    x = as_rational(x)
    return x.numerator // x.denominator


def frac_part(x):
    x = as_rational(x)
    return x - int_part(x)


def is_integer_indicator(x):
    return 1 if as_rational(x).denominator == 1 else 0


def sawtooth(x):
    x = as_rational(x)
    if x.denominator == 1:
        return Fraction(0)
    return frac_part(x) - HALF


def psi2(x):
    """Periodic second Bernoulli polynomial B2({x})."""
    f = frac_part(x)
    return f * f - f + SIXTH


def sawtooth_num(n, d):
    """Sawtooth of ``n/d`` as an integer numerator over ``2*d``.

    Lets hot loops accumulate integers and build a single Fraction at
    the end.
    """
    r = n % d
    if r == 0:
        return 0
    return 2 * r - d


def require_integer(value, what):
    value = as_rational(value)
    if value.denominator != 1:
        raise FormulaError(f"{what} evaluated to non-integer {render(value)}")
    return value.numerator
