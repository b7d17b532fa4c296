import math
import re
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

IntOrVector = Union[int, np.ndarray]

# Only plain integers or p/q are accepted, so "0.5" or "1e-3" never sneak
# in through Fraction's more liberal string parser.
_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")

class InvalidRational(ValueError):
    def __init__(self, text):
        super().__init__(f"Expected an exact rational p or p/q, got {text!r}")
        self.text = text

def as_rational(value: Union[int, Fraction]) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("Booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")

def floor_times(m: IntOrVector, alpha: Fraction) -> IntOrVector:
    """The integer part of alpha * m, i.e. the coefficients [alpha m_i] of the
    multiplier ideal. Works on plain ints and on numpy integer vectors."""
    alpha = as_rational(alpha)
    return (m * alpha.numerator) // alpha.denominator

def ceil_times_minus_one(m: IntOrVector, alpha: Fraction) -> IntOrVector:
    """[(alpha - epsilon) m] for 0 < epsilon << 1, which is ceil(alpha m) - 1.
    The epsilon never has to be represented: for beta = alpha m we have
    [beta - epsilon] = ceil(beta) - 1."""
    alpha = as_rational(alpha)
    return -((-m * alpha.numerator) // alpha.denominator) - 1

def is_integral(value: Fraction) -> bool:
    return as_rational(value).denominator == 1

def lcm_of(values: Iterable[int]) -> int:
    result = 1
    for value in values:
        if value != 0:
            result = math.lcm(result, abs(value))
    return result

def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise InvalidRational(text)
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise InvalidRational(text)
    return Fraction(int(numerator), int(denominator) if denominator is not None else 1)

def format_rational(value: Fraction) -> str:
    # Fraction keeps itself normalised with a positive denominator
    return str(as_rational(value))
