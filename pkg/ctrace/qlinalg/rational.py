"""Exact rational scalars

Fraction keeps every value in lowest terms with a positive denominator,
so Rational is simply an alias for it
"""

from fractions import Fraction
from typing import TypeAlias

from ctrace.shared import InvalidProfileError

Rational: TypeAlias = Fraction
RationalVector: TypeAlias = tuple[Fraction, ...]


def parse_rational(value: int | str | Fraction) -> Fraction:
    """Parses an int, a Fraction or a "p/q" string

    Floats are rejected, they would silently round
    """

    if isinstance(value, bool):
        raise InvalidProfileError(f"Booleans are not rationals: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        numerator, _, denominator = text.partition("/")
        try:
            if denominator:
                return Fraction(int(numerator), int(denominator))
            return Fraction(int(numerator))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidProfileError(f"Not a rational: {value!r}") from e
    raise InvalidProfileError(f"Not a rational: {value!r} ({type(value).__name__})")


def format_rational(value: Fraction) -> str:
    """"p/q", or "p" when the denominator is 1"""

    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_vector(values) -> RationalVector:
    """Coerces an iterable of ints/strings/Fractions to a rational vector"""

    return tuple(parse_rational(x) for x in values)
