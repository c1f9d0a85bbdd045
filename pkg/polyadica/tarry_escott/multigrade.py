"""Multigrade (Tarry-Escott) solutions.

Two equally long integer lists form a solution of degree s when their power
sums agree for every exponent 1..s.
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from ..errors import LengthMismatch
from ..utils import as_int_list, encode_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultigradeSolution:
    left: Tuple[int, ...]
    right: Tuple[int, ...]
    degree: int

    @property
    def size(self) -> int:
        return len(self.left)

    @property
    def ideal(self) -> bool:
        return self.degree == self.size - 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "left": [encode_int(x) for x in self.left],
            "right": [encode_int(x) for x in self.right],
            "degree": self.degree,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MultigradeSolution":
        """Read the JSON form; the degree is recomputed, a stated one must agree."""
        solution = make_solution(as_int_list(data["left"]), as_int_list(data["right"]))
        if "degree" in data and int(data["degree"]) != solution.degree:
            raise ValueError(f"Stated degree {data['degree']} but the lists have degree {solution.degree}")
        return solution


def verify_degree(left: Sequence[int], right: Sequence[int]) -> int:
    """
    Largest s with sum(x^r for x in left) = sum(y^r for y in right) for all r <= s.

    Args:
        left (Sequence[int]): First list.
        right (Sequence[int]): Second list, same length.

    Raises:
        LengthMismatch: If the lists differ in length.

    Returns:
        int: The degree, 0 if already the plain sums differ. Identical
            multisets give their length.
    """
    if len(left) != len(right):
        raise LengthMismatch(
            f"Lists of {len(left)} and {len(right)} summands", equation="pm", lengths=[len(left), len(right)]
        )
    s = 0
    for r in range(1, len(left) + 1):
        if sum(x**r for x in left) != sum(y**r for y in right):
            break
        s = r
    return s


def make_solution(left: Sequence[int], right: Sequence[int]) -> MultigradeSolution:
    left, right = tuple(sorted(left)), tuple(sorted(right))
    return MultigradeSolution(left, right, verify_degree(left, right))


def frolov_transform(sol: MultigradeSolution, a: int, b: int) -> MultigradeSolution:
    """Map every entry x to a + b x; the degree is recomputed and must not drop."""
    if b == 0:
        raise ValueError("b must be non-zero")
    transformed = make_solution([a + b * x for x in sol.left], [a + b * x for x in sol.right])
    if transformed.degree < sol.degree:
        raise ArithmeticError(
            f"Degree dropped from {sol.degree} to {transformed.degree} under x -> {a} + {b} x"
        )
    return transformed


def thue_morse(i: int) -> int:
    return bin(i).count("1") % 2


def prouhet_thue_morse(s: int) -> MultigradeSolution:
    """Split 0..2^(s+1)-1 by Thue-Morse value into a solution of degree s."""
    if s < 1:
        raise ValueError(f"Degree must be at least 1, got {s}")
    numbers = range(2 ** (s + 1))
    solution = make_solution(
        [i for i in numbers if thue_morse(i) == 0], [i for i in numbers if thue_morse(i) == 1]
    )
    if solution.degree != s:
        raise ArithmeticError(f"Prouhet partition has degree {solution.degree}, expected {s}")
    return solution


GOLDEN_QUINTIC = make_solution([0, 19, 25, 57, 62, 86], [2, 11, 40, 42, 69, 85])
LEHMER_OCTET = make_solution([0, 3, 5, 6, 9, 10, 12, 15], [1, 2, 4, 7, 8, 11, 13, 14])

BUILTIN_SOLUTIONS = {"golden": GOLDEN_QUINTIC, "octet": LEHMER_OCTET}
