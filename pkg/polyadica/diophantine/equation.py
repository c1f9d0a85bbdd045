"""Equal sums of like powers over a polyadic ring.

An instance (l | p, q) asks for elements u_1..u_{p(m-1)+1} and
v_1..v_{q(m-1)+1} with

    nu^(p)[u_1^<l>, ..., u_P^<l>] = nu^(q)[v_1^<l>, ..., v_Q^<l>]

where x^<l> is the polyadic power and nu^(p) the long addition.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

from ..rings.core import RingHandle, infer_ell, long_add, long_length, polyadic_power
from ..rings.registry import ring_from_descriptor
from ..utils import as_int_list, decode_int, encode_int

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PowerSumInstance:
    ring: RingHandle
    l: int  # noqa: E741
    p: int
    q: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError(f"l must be at least 1, got {self.l}")
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError(f"Need p, q >= 0 and p + q >= 1, got p={self.p}, q={self.q}")
        if self.p > self.q:
            raise ValueError(f"Need p <= q, got p={self.p}, q={self.q}")

    @property
    def u_length(self) -> int:
        return long_length(self.ring.m, self.p)

    @property
    def v_length(self) -> int:
        return long_length(self.ring.m, self.q)

    @property
    def exponent(self) -> int:
        """Number of factors in a polyadic power."""
        return long_length(self.ring.n, self.l)


@dataclass(frozen=True)
class PowerSumSolution:
    u: Tuple[int, ...]
    v: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(sorted(self.u)))
        object.__setattr__(self, "v", tuple(sorted(self.v)))

    @property
    def trivial(self) -> bool:
        return self.u == self.v

    def canonical(self) -> "PowerSumSolution":
        """Equal-length sides ordered lexicographically."""
        if len(self.u) == len(self.v) and self.v < self.u:
            return PowerSumSolution(self.v, self.u)
        return self


@dataclass
class Verdict:
    holds: bool
    reason: str = ""
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    binary_form: Optional[Tuple[int, int]] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "holds": self.holds,
            "reason": self.reason,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
        }
        if self.binary_form is not None:
            out["binary_form"] = [str(x) for x in self.binary_form]
        out.update(self.details)
        return out


def evaluate_side(ring: RingHandle, l: int, xs: Sequence[int]) -> int:
    """
    Long addition of the polyadic powers of xs.

    Raises:
        LengthMismatch: If len(xs) is not ell(m-1)+1 for any ell.
    """
    ell = infer_ell(ring.m, len(xs))
    return long_add(ring, ell, [polyadic_power(ring, x, l) for x in xs])


def binary_form(ring: RingHandle, l: int, xs: Sequence[int]) -> Optional[int]:
    """Plain integer sum of powers the side maps to, for rings that have one."""
    return ring.binary_form(l, xs)


def verify(instance: PowerSumInstance, solution: PowerSumSolution) -> Verdict:
    """Check a candidate solution.

    A false identity is reported through the verdict's reason, never raised.
    """
    ring, l = instance.ring, instance.l
    u, v = list(solution.u), list(solution.v)
    plain = None
    if ring.binary_form(l, u) is not None:
        plain = (ring.binary_form(l, u), ring.binary_form(l, v))

    if len(u) != instance.u_length or len(v) != instance.v_length:
        return Verdict(
            False,
            "length mismatch",
            binary_form=plain,
            details={
                "expected_lengths": [instance.u_length, instance.v_length],
                "lengths": [len(u), len(v)],
            },
        )
    outside = [x for x in u + v if not ring.contains(x)]
    if outside:
        return Verdict(False, "not in carrier", details={"outside": [encode_int(x) for x in outside]})
    if solution.trivial:
        return Verdict(False, "trivial")

    lhs, rhs = evaluate_side(ring, l, u), evaluate_side(ring, l, v)
    holds = lhs == rhs
    if plain is not None and (plain[0] == plain[1]) != holds:
        raise ArithmeticError(f"Binary form {plain} disagrees with ring evaluation ({lhs}, {rhs})")
    return Verdict(holds, "" if holds else "unequal sides", lhs, rhs, plain)


def to_record(instance: PowerSumInstance, solution: PowerSumSolution, value: int) -> Dict[str, Any]:
    return {
        "ring": instance.ring.descriptor(),
        "l": instance.l,
        "p": instance.p,
        "q": instance.q,
        "u": [encode_int(x) for x in solution.u],
        "v": [encode_int(x) for x in solution.v],
        "sum": str(value),
    }


def from_record(record: Dict[str, Any]) -> Tuple[PowerSumInstance, PowerSumSolution]:
    """Read the JSON form written by `to_record`; `sum` is optional."""
    try:
        ring = ring_from_descriptor(record["ring"])
        instance = PowerSumInstance(
            ring, decode_int(record["l"]), decode_int(record["p"]), decode_int(record["q"])
        )
        solution = PowerSumSolution(as_int_list(record["u"]), as_int_list(record["v"]))
    except KeyError as e:
        raise ValueError(f"Solution record misses the key {e}")
    return instance, solution

