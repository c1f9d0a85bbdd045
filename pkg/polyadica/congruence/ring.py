import logging
import math
from typing import Any, Dict, Sequence

from ..rings.core import RingHandle
from .congruence import CongruenceClass, arity_shape, querelement

logger = logging.getLogger(__name__)


class CongruenceRing(RingHandle):
    """The representatives a + b k of [[a]]_b as an (m,n)-ring.

    Elements are the representatives themselves; `element(k)` maps an index
    to its representative.
    """

    kind = "congruence"

    def __init__(self, cls: CongruenceClass):
        shape = arity_shape(cls)
        super().__init__(shape.m, shape.n)
        self.cls = cls
        self.shape = shape
        self.name = str(cls)

    def contains(self, x: int) -> bool:
        return self.cls.contains(x)

    def element(self, k: int) -> int:
        return self.cls.value(k)

    def add(self, xs: Sequence[int]) -> int:
        return sum(xs)

    def mul(self, xs: Sequence[int]) -> int:
        return math.prod(xs)

    def querelement(self, x: int) -> int:
        return self.cls.value(querelement(self.cls, self.cls.index(x)))

    def solve_addition(self, known: Sequence[int], c: int) -> int:
        return c - sum(known)

    def closed_form_power(self, x: int, l: int) -> int:
        return x ** (l * (self.n - 1) + 1)

    def binary_form(self, l: int, xs: Sequence[int]) -> int:
        exponent = l * (self.n - 1) + 1
        return sum(x**exponent for x in xs)

    def descriptor(self) -> Dict[str, Any]:
        return {"kind": self.kind, "a": self.cls.a, "b": self.cls.b}


def congruence_ring(cls: CongruenceClass) -> CongruenceRing:
    return CongruenceRing(cls)


def congruence_ring_from(a: int, b: int) -> CongruenceRing:
    return CongruenceRing(CongruenceClass(a, b))
