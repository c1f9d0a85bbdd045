"""Built-in polyadic rings."""
import math
from typing import List, Optional, Sequence

from .core import RingHandle


class Exotic32Ring(RingHandle):
    """The (3,2)-ring on all integers with

        nu_3[x, y, z] = x + y + z + 2,    mu_2[x, y] = xy + x + y.

    The shift x -> x + 1 maps it onto ordinary arithmetic: 0 is the
    multiplicative unit and -1 is mapped to the binary zero.
    """

    name = "exotic (3,2)-ring"
    kind = "exotic32"
    shift_zero = -1

    def __init__(self):
        super().__init__(3, 2)

    def add(self, xs: Sequence[int]) -> int:
        x, y, z = xs
        return x + y + z + 2

    def mul(self, xs: Sequence[int]) -> int:
        x, y = xs
        return x * y + x + y

    def querelement(self, x: int) -> int:
        return -x - 2

    def solve_addition(self, known: Sequence[int], c: int) -> int:
        return c - sum(known) - 2

    def closed_form_power(self, x: int, l: int) -> int:
        return (x + 1) ** (l + 1) - 1

    def binary_form(self, l: int, xs: Sequence[int]) -> int:
        return sum((x + 1) ** (l + 1) for x in xs)


class Finite34Ring(RingHandle):
    """The two-element (3,4)-ring generated by a and b.

    Elements are encoded as a=0, b=1. The tables are

        nu_3[x, y, z] = x + y + z + 1 (mod 2),    mu_4[x, y, z, w] = x + y + z + w (mod 2),

    which reproduce nu_3[a^3] = b, nu_3[a^2, b] = a, nu_3[a, b^2] = b, nu_3[b^3] = a,
    mu_4[a^4] = a, mu_4[a^3, b] = b, mu_4[a^2, b^2] = a, mu_4[a, b^3] = b and
    mu_4[b^4] = a.
    """

    name = "finite (3,4)-ring"
    kind = "finite34"
    labels = ("a", "b")

    def __init__(self):
        super().__init__(3, 4)

    def elements(self) -> List[int]:
        return [0, 1]

    def contains(self, x: int) -> bool:
        return x in (0, 1)

    def add(self, xs: Sequence[int]) -> int:
        return (sum(xs) + 1) % 2

    def mul(self, xs: Sequence[int]) -> int:
        return sum(xs) % 2

    def label(self, x: int) -> str:
        return self.labels[x]


class BinaryIntegerRing(RingHandle):
    """The ordinary integers as a (2,2)-ring."""

    name = "binary integers"
    kind = "binaryZ"
    shift_zero = 0

    def __init__(self):
        super().__init__(2, 2)

    def add(self, xs: Sequence[int]) -> int:
        x, y = xs
        return x + y

    def mul(self, xs: Sequence[int]) -> int:
        x, y = xs
        return x * y

    def querelement(self, x: int) -> int:
        # x + 0 = x
        return 0

    def solve_addition(self, known: Sequence[int], c: int) -> int:
        return c - sum(known)

    def closed_form_power(self, x: int, l: int) -> int:
        return x ** (l + 1)

    def binary_form(self, l: int, xs: Sequence[int]) -> int:
        return sum(x ** (l + 1) for x in xs)


class ExponentialRing(RingHandle):
    """Positive integers with mu_2[b1, b2] = b1^b2 and nu_3 the ternary product.

    Only the first distributivity relation holds, and the multiplication is
    not associative.
    """

    name = "exponential (3,2)-structure"
    kind = "exponential"
    sample_window = (1, 4)

    def __init__(self):
        super().__init__(3, 2)

    def contains(self, x: int) -> bool:
        return isinstance(x, int) and x >= 1

    def add(self, xs: Sequence[int]) -> int:
        return math.prod(xs)

    def mul(self, xs: Sequence[int]) -> int:
        b1, b2 = xs
        return b1**b2

    def solve_addition(self, known: Sequence[int], c: int) -> Optional[int]:
        q, r = divmod(c, math.prod(known))
        return q if r == 0 else None


def builtin_exotic_32() -> Exotic32Ring:
    return Exotic32Ring()


def builtin_finite_34() -> Finite34Ring:
    return Finite34Ring()


def builtin_binary_Z() -> BinaryIntegerRing:
    return BinaryIntegerRing()


def builtin_exponential_example() -> ExponentialRing:
    return ExponentialRing()
