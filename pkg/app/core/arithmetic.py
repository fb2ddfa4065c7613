"""
Overflow-checked exact arithmetic.

Python integers never wrap, so the ExactInt width is enforced explicitly:
every exact quantity the toolkit reports passes through ``checked``.
"""
from fractions import Fraction
from numbers import Rational
from typing import Union

from core.config import settings
from core.exceptions import ArithmeticOverflowError, NonIntegralResultError

Exact = Union[int, Fraction]


def checked(value: int, what: str = "value") -> int:
    """Return value unchanged, or raise if it exceeds the ExactInt width."""
    if abs(value) >= settings.int_limit:
        raise ArithmeticOverflowError(
            f"{what} exceeds {settings.int_bits}-bit magnitude",
            {"what": what, "bits": value.bit_length()},
        )
    return value


def checked_fraction(value: Fraction, what: str = "value") -> Fraction:
    """Check numerator and denominator of a rational."""
    checked(value.numerator, what)
    checked(value.denominator, what)
    return value


def exact_div(numerator: int, denominator: int, what: str = "quotient") -> int:
    """Integer division that must be exact."""
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise NonIntegralResultError(
            f"{what}: {numerator} is not divisible by {denominator}",
            {"numerator": numerator, "denominator": denominator},
        )
    return checked(quotient, what)


def as_fraction(value: Union[Rational, float]) -> Fraction:
    """Exact rational view of an int, Fraction or float."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)
