"""Polyadic rationals (1 + b k1) / (1 + b k2) with (b+1)-ary addition."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Union

from ..errors import LengthMismatch, NotInCarrier


@dataclass(frozen=True)
class PolyadicRational:
    b: int
    k1: int
    k2: int = 0

    def __post_init__(self):
        if self.b < 2:
            raise ValueError(f"Base b must be at least 2, got {self.b}")

    @property
    def numerator(self) -> int:
        return 1 + self.b * self.k1

    @property
    def denominator(self) -> int:
        return 1 + self.b * self.k2

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def to_dict(self) -> Dict[str, Union[int, str]]:
        return {"b": self.b, "k1": self.k1, "k2": self.k2, "value": str(self.value)}

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def from_fraction(b: int, x: Union[Fraction, int]) -> PolyadicRational:
    """
    Canonical polyadic form of a rational.

    With x = p/q in lowest terms, the smallest positive t with t q = 1 (mod b)
    gives (t p) / (t q), both = 1 (mod b).

    Raises:
        NotInCarrier: If x has no such form, i.e. p != q (mod b) or gcd(q, b) > 1.
    """
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    if (p - q) % b:
        raise NotInCarrier(f"{x} is not of the form (1+{b}k1)/(1+{b}k2)", equation="rational", b=b)
    try:
        t = pow(q, -1, b)
    except ValueError:
        raise NotInCarrier(f"Denominator of {x} is not invertible mod {b}", equation="rational", b=b)
    return PolyadicRational(b, (t * p - 1) // b, (t * q - 1) // b)


def rational_add(b: int, xs: Sequence[PolyadicRational]) -> PolyadicRational:
    """(b+1)-ary addition: the exact sum, in canonical form."""
    if len(xs) != b + 1:
        raise LengthMismatch(
            f"Polyadic rational addition takes {b + 1} arguments, got {len(xs)}",
            equation="rational addition",
            b=b,
        )
    return from_fraction(b, sum((x.value for x in xs), Fraction(0)))


def rational_mul(b: int, xs: Sequence[PolyadicRational]) -> PolyadicRational:
    """Binary multiplication of the (b+1, 2)-field."""
    if len(xs) != 2:
        raise LengthMismatch(
            f"Polyadic rational multiplication takes 2 arguments, got {len(xs)}",
            equation="rational multiplication",
            b=b,
        )
    return from_fraction(b, xs[0].value * xs[1].value)


def rational_inverse(b: int, x: PolyadicRational) -> PolyadicRational:
    return from_fraction(b, 1 / x.value)


def rational_querelement(b: int, x: PolyadicRational) -> PolyadicRational:
    """The additive querelement -(b-1) x, checked against b copies of x."""
    x_bar = from_fraction(b, -(b - 1) * x.value)
    if rational_add(b, [x] * b + [x_bar]).value != x.value:
        raise ArithmeticError(f"Querelement of {x} failed its defining equation")
    return x_bar
