"""The polyadic (m,n)-ring of a fixed congruence class [[a]]_b.

The representatives x_k = a + b k of one residue class are closed under the
m-ary sum and the n-ary product exactly when

    m a = a (mod b),    a^n = a (mod b),

with m and n minimal. The integers I = (m - 1) a / b and J = (a^n - a) / b
are the shape invariants of the class.
"""
import logging
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..errors import LengthMismatch, NoMultiplicativeArity, NotInCarrier

logger = logging.getLogger(__name__)

DEFAULT_B_MAX = 10


@dataclass(frozen=True)
class CongruenceClass:
    a: int
    b: int

    def __post_init__(self):
        for name, value in (("a", self.a), ("b", self.b)):
            if not isinstance(value, int) or isinstance(value, bool):
                raise TypeError(f"{name} must be an int, not {type(value)}")
        if self.b < 2:
            raise ValueError(f"Modulus b must be at least 2, got {self.b}")
        if not 0 < self.a < self.b:
            raise ValueError(f"Residue a must satisfy 0 < a < b, got a={self.a}, b={self.b}")

    def value(self, k: int) -> int:
        return self.a + self.b * k

    def contains(self, x: int) -> bool:
        return isinstance(x, int) and (x - self.a) % self.b == 0

    def index(self, x: int) -> int:
        if not self.contains(x):
            raise NotInCarrier(f"{x} is not in {self}", equation="x = a + bk", x=x, a=self.a, b=self.b)
        return (x - self.a) // self.b

    def to_dict(self) -> Dict[str, int]:
        return {"a": self.a, "b": self.b}

    def __str__(self) -> str:
        return f"[[{self.a}]]_{self.b}"


@dataclass(frozen=True)
class ShapeInvariants:
    m: int
    n: int
    I: int  # noqa: E741
    J: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class ClassElement:
    cls: CongruenceClass
    k: int

    @property
    def value(self) -> int:
        return self.cls.value(self.k)


@lru_cache(maxsize=None)
def arity_shape(cls: CongruenceClass) -> ShapeInvariants:
    """
    Minimal arities and shape invariants of a congruence class.

    Args:
        cls (CongruenceClass): The class [[a]]_b.

    Raises:
        NoMultiplicativeArity: If no 2 <= n <= b has a^n = a (mod b).

    Returns:
        ShapeInvariants: (m, n, I, J).
    """
    a, b = cls.a, cls.b
    m = b // math.gcd(a, b) + 1
    if (m - 1) * a % b:
        raise ArithmeticError(f"m={m} does not solve m a = a mod b for {cls}")
    for n in range(2, b + 1):
        if pow(a, n, b) == a:
            break
    else:
        raise NoMultiplicativeArity(
            f"No n in 2..{b} with {a}^n = {a} mod {b}", equation="an", a=a, b=b
        )
    return ShapeInvariants(m=m, n=n, I=(m - 1) * a // b, J=(a**n - a) // b)


def _expect_length(ks: Sequence[int], length: int, what: str) -> None:
    if len(ks) != length:
        raise LengthMismatch(
            f"{what} takes {length} indices, got {len(ks)}", equation=what, expected=length
        )


def add(cls: CongruenceClass, ks: Sequence[int]) -> ClassElement:
    """m-ary addition on indices: k_0 = I + sum(ks)."""
    shape = arity_shape(cls)
    _expect_length(ks, shape.m, "addition")
    return ClassElement(cls, shape.I + sum(ks))


def mul(cls: CongruenceClass, ks: Sequence[int]) -> ClassElement:
    """n-ary multiplication: the plain product of the representatives."""
    shape = arity_shape(cls)
    _expect_length(ks, shape.n, "multiplication")
    return ClassElement(cls, cls.index(math.prod(cls.value(k) for k in ks)))


def querelement(cls: CongruenceClass, k: int) -> int:
    """Index of the additive querelement of x_k, (2 - m) k - I."""
    shape = arity_shape(cls)
    k_tilde = (2 - shape.m) * k - shape.I
    if add(cls, [k] * (shape.m - 1) + [k_tilde]).k != k:
        raise ArithmeticError(f"Querelement of x_{k} in {cls} failed its defining equation")
    return k_tilde


def neutral_sequence_check(cls: CongruenceClass, ks: Sequence[int]) -> bool:
    """Whether m-1 elements form a neutral sequence of the addition."""
    shape = arity_shape(cls)
    _expect_length(ks, shape.m - 1, "neutral sequence")
    return sum(ks) == -shape.I


def is_limiting(cls: CongruenceClass) -> bool:
    return cls.a in (1, cls.b - 1)


def multiplicative_querelement(cls: CongruenceClass, k: int) -> Optional[int]:
    """Index of the x' with mu_n[x^(n-1), x'] = x, or None if x is not querable."""
    n = arity_shape(cls).n
    x = cls.value(k)
    if n == 2:
        candidate = 1
    elif x in (1, -1):
        candidate = x ** (n - 2)
    else:
        return None
    return cls.index(candidate) if cls.contains(candidate) else None


def multiplicative_neutral_check(cls: CongruenceClass, ks: Sequence[int]) -> bool:
    """Whether n-1 elements form a neutral sequence of the multiplication."""
    n = arity_shape(cls).n
    _expect_length(ks, n - 1, "multiplicative neutral sequence")
    return math.prod(cls.value(k) for k in ks) == 1


def zero_and_unit_analysis(cls: CongruenceClass) -> Dict[str, Any]:
    """Zero, unit and querable elements of the class ring.

    There is never an additive zero. [[1]]_b has the unit 1 and every element
    is querable with querelement 1; [[b-1]]_b has the unit -1 when n is odd
    and only -1 is querable; all other classes have no querable elements.
    """
    shape = arity_shape(cls)
    report = {
        "class": cls.to_dict(),
        "m": shape.m,
        "n": shape.n,
        "limiting": is_limiting(cls),
        "additive_zero": None,
        "unit": None,
        "querable": [],
    }
    if cls.a == 1:
        report["unit"] = 1
        report["querable"] = "all"
        report["querelement"] = 1
    elif cls.a == cls.b - 1:
        if shape.n % 2:
            report["unit"] = -1
        report["querable"] = [-1] if multiplicative_querelement(cls, cls.index(-1)) is not None else []
    return report


def same_shape_classes(b_max: int, m: int, n: int) -> List[CongruenceClass]:
    """All classes with b <= b_max and arity shape (m, n), ordered by b then a."""
    found = []
    for b in range(2, b_max + 1):
        for a in range(1, b):
            cls = CongruenceClass(a, b)
            try:
                shape = arity_shape(cls)
            except NoMultiplicativeArity:
                continue
            if (shape.m, shape.n) == (m, n):
                found.append(cls)
    return found


def equal_arity_invariants(c1: CongruenceClass, c2: CongruenceClass) -> Dict[str, Any]:
    """Relations between the invariants of two classes of equal arity shape.

    Checks b I / a = m - 1 and a + b J = a^n for both classes and, when the
    residues agree, I / J = I' / J'.
    """
    s1, s2 = arity_shape(c1), arity_shape(c2)
    if (s1.m, s1.n) != (s2.m, s2.n):
        raise ValueError(f"{c1} has shape {(s1.m, s1.n)} but {c2} has {(s2.m, s2.n)}")

    ratios = [Fraction(c.b * s.I, c.a) for c, s in ((c1, s1), (c2, s2))]
    powers = [c.a + c.b * s.J == c.a**s.n for c, s in ((c1, s1), (c2, s2))]
    checks = {
        "bI/a = m-1": all(r == s1.m - 1 for r in ratios),
        "a + bJ = a^n": all(powers),
    }
    common = ratios[0]
    verdict = {
        "classes": [c1.to_dict(), c2.to_dict()],
        "common_value": int(common) if common.denominator == 1 else str(common),
    }
    if c1.a == c2.a:
        # cross-multiplied, J vanishes for [[1]]_b
        checks["I/J = I'/J'"] = s1.I * s2.J == s2.I * s1.J
    verdict["checks"] = checks
    verdict["holds"] = all(checks.values())
    return verdict


def class_table(b_max: int = DEFAULT_B_MAX) -> pd.DataFrame:
    """Shapes of all classes 0 < a < b <= b_max, sorted by a then b.

    Classes without multiplicative arity keep empty m, n, I, J cells.
    """
    rows = []
    for a in range(1, b_max):
        for b in range(a + 1, b_max + 1):
            try:
                shape = arity_shape(CongruenceClass(a, b)).to_dict()
            except NoMultiplicativeArity:
                shape = dict.fromkeys(("m", "n", "I", "J"))
            rows.append({"a": a, "b": b, **shape})
    return pd.DataFrame(rows, columns=["a", "b", "m", "n", "I", "J"], dtype=object)
