"""Exact rational scalars.

``fractions.Fraction`` already keeps values reduced with a positive
denominator, so it is used directly.  Integral values are demoted to ``int``
by :func:`normalize`; ``int`` and ``Fraction`` compare and hash equal, so
the demotion is invisible to callers and roughly an order of magnitude
cheaper in the polynomial inner loops.
"""
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = ["Rational", "is_scalar", "normalize", "parse_rational", "format_rational"]


def is_scalar(x):
    return isinstance(x, _RationalABC)


def normalize(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def parse_rational(s):
    """Parse ``"p/q"`` or ``"p"`` into an exact scalar.

    Floats are rejected: a decimal string such as ``"0.1"`` is accepted
    only because ``Fraction`` reads it exactly.
    """
    if isinstance(s, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(s, int):
        return s
    if isinstance(s, Fraction):
        return normalize(s)
    if isinstance(s, float):
        raise TypeError("floating point input is not exact; pass a string")
    return normalize(Fraction(str(s).strip()))


def format_rational(x):
    return str(Fraction(x))
