"""Polyadic (m,n)-rings over integer-encoded carriers.

A ring exposes an m-ary addition and an n-ary multiplication on Python ints
(arbitrary precision). Long operations, polyadic powers and the axiom
checkers below work with any `RingHandle`.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..arity.shape import check_arity, check_count
from ..errors import LengthMismatch, NotInCarrier

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20231
DEFAULT_WINDOW = (-10, 10)
DEFAULT_SAMPLES = 200
# explicit samples are enumerated exhaustively up to this many polyads
MAX_EXHAUSTIVE = 20000

Operation = Callable[[Sequence[int]], int]


class RingHandle:
    """Base class of all polyadic rings.

    Subclasses set `name`, the arities `m` and `n` and implement `add` and
    `mul`. Finite carriers override `elements`.
    """

    name: str = "ring"
    kind: str = ""
    shift_zero: Optional[int] = None
    sample_window: Tuple[int, int] = DEFAULT_WINDOW

    def __init__(self, m: int, n: int):
        self.m = check_arity("m", m)
        self.n = check_arity("n", n)

    def add(self, xs: Sequence[int]) -> int:
        raise NotImplementedError

    def mul(self, xs: Sequence[int]) -> int:
        raise NotImplementedError

    @property
    def finite(self) -> bool:
        return self.elements() is not None

    def elements(self) -> Optional[List[int]]:
        """The carrier as a list, or None when it is infinite."""
        return None

    def contains(self, x: int) -> bool:
        return isinstance(x, int)

    def element(self, k: int) -> int:
        """Element with index k."""
        return k

    def operation(self, which: str) -> Tuple[Operation, int]:
        if which in ("addition", "add"):
            return self.add, self.m
        if which in ("multiplication", "mul"):
            return self.mul, self.n
        raise ValueError(f"which must be 'addition' or 'multiplication', not {which}")

    def querelement(self, x: int) -> Optional[int]:
        return None

    def solve_addition(self, known: Sequence[int], c: int) -> Optional[int]:
        """The x with add([*known, x]) = c, for commutative additions.

        Finite carriers are searched, infinite ones return None unless the
        subclass knows a closed form.
        """
        elements = self.elements()
        if elements is None:
            return None
        for x in elements:
            if self.add([*known, x]) == c:
                return x
        return None

    def closed_form_power(self, x: int, l: int) -> Optional[int]:
        return None

    def binary_form(self, l: int, xs: Sequence[int]) -> Optional[int]:
        """Plain big-integer sum of shifted powers equivalent to a side, if any."""
        return None

    def descriptor(self) -> Dict[str, Any]:
        return {"kind": self.kind, "a": None, "b": None}

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, m={self.m}, n={self.n})"


@dataclass
class AxiomVerdict:
    axiom: str
    holds: bool
    checked: int
    witness: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "holds": self.holds,
            "checked": self.checked,
            "witness": self.witness,
        }


@dataclass
class DistributivityVerdict:
    relations: List[bool]
    checked: int
    witnesses: Dict[int, Dict[str, Any]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return all(self.relations)

    @property
    def partial(self) -> bool:
        return any(self.relations) and not all(self.relations)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": "distributivity",
            "holds": self.holds,
            "partial": self.partial,
            "relations": list(self.relations),
            "checked": self.checked,
            "witnesses": {str(k): v for k, v in self.witnesses.items()},
        }


def long_length(arity: int, ell: int) -> int:
    return ell * (arity - 1) + 1


def infer_ell(arity: int, length: int) -> int:
    """The ell with length = ell (arity - 1) + 1."""
    if length < 1 or (length - 1) % (arity - 1):
        raise LengthMismatch(
            f"{length} arguments do not fit any long {arity}-ary operation",
            equation="long length",
            arity=arity,
            length=length,
        )
    return (length - 1) // (arity - 1)


def fold(op: Operation, arity: int, xs: Sequence[int], positions: Optional[Sequence[int]] = None) -> int:
    """Reduce xs with an arity-ary operation.

    Each step replaces `arity` consecutive arguments starting at
    positions[step] by their image. Without positions the fold is
    left-nested.
    """
    xs = list(xs)
    ell = infer_ell(arity, len(xs))
    if positions is None:
        positions = [0] * ell
    if len(positions) != ell:
        raise LengthMismatch(
            f"Need {ell} positions, got {len(positions)}", equation="long length", arity=arity
        )
    for step, j in enumerate(positions):
        if not 0 <= j <= len(xs) - arity:
            raise IndexError(f"Position {j} out of range at step {step}")
        xs[j : j + arity] = [op(xs[j : j + arity])]
    return xs[0]


def _long(op: Operation, arity: int, ell: int, xs: Sequence[int]) -> int:
    check_count("ell", ell, minimum=0)
    expected = long_length(arity, ell)
    if len(xs) != expected:
        raise LengthMismatch(
            f"Expected {expected} arguments, got {len(xs)}",
            equation="long length",
            ell=ell,
            arity=arity,
            length=len(xs),
        )
    return fold(op, arity, xs)


def long_add(ring: RingHandle, ell: int, xs: Sequence[int]) -> int:
    """Left-nested composition of ell m-ary additions over ell(m-1)+1 elements.

    Raises:
        LengthMismatch: If len(xs) != ell(m-1)+1.
    """
    return _long(ring.add, ring.m, ell, xs)


def long_mul(ring: RingHandle, ell: int, xs: Sequence[int]) -> int:
    """Left-nested composition of ell n-ary multiplications."""
    return _long(ring.mul, ring.n, ell, xs)


def polyadic_power(ring: RingHandle, x: int, l: int) -> int:
    """Long product of l(n-1)+1 copies of x; l=0 returns x."""
    check_count("l", l, minimum=0)
    if not ring.contains(x):
        raise NotInCarrier(f"{x} is not in {ring.name}", equation="carrier", x=x)
    return long_mul(ring, l, [x] * long_length(ring.n, l))


def sample_polyads(
    ring: RingHandle,
    size: int,
    sample: Optional[Iterable[int]] = None,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    window: Optional[Tuple[int, int]] = None,
) -> Iterable[Tuple[int, ...]]:
    """Polyads of the given size for the axiom checkers.

    Finite carriers and small explicit samples are enumerated exhaustively;
    otherwise `samples` polyads are drawn with a seeded numpy generator,
    from `sample` if given or from the index window mapped by `ring.element`.
    """
    rng = np.random.default_rng(seed)
    pool = list(sample) if sample is not None else ring.elements()
    if pool is not None:
        if not pool:
            raise ValueError("Empty sample")
        if len(pool) ** size <= MAX_EXHAUSTIVE:
            return itertools.product(pool, repeat=size)
        picks = rng.integers(0, len(pool), size=(samples, size))
        return [tuple(pool[int(i)] for i in row) for row in picks]

    low, high = window or ring.sample_window
    draws = rng.integers(low, high + 1, size=(samples, size))
    return [tuple(ring.element(int(k)) for k in row) for row in draws]


def check_associativity(ring: RingHandle, which: str = "addition", **sampler) -> AxiomVerdict:
    """All placements of the inner operation inside the outer one agree.

    Args:
        ring (RingHandle): The ring.
        which (str, optional): 'addition' or 'multiplication'. Defaults to 'addition'.
        **sampler: Passed to `sample_polyads`.

    Returns:
        AxiomVerdict: With the first counterexample placement as witness.
    """
    op, k = ring.operation(which)
    checked = 0
    for polyad in sample_polyads(ring, 2 * k - 1, **sampler):
        xs = list(polyad)
        reference = op([op(xs[:k])] + xs[k:])
        for i in range(1, k):
            value = op(xs[:i] + [op(xs[i : i + k])] + xs[i + k :])
            checked += 1
            if value != reference:
                return AxiomVerdict(
                    f"associativity/{which}",
                    False,
                    checked,
                    {"polyad": xs, "placement": i, "values": [reference, value]},
                )
    return AxiomVerdict(f"associativity/{which}", True, checked)


def check_distributivity(ring: RingHandle, **sampler) -> DistributivityVerdict:
    """Evaluate each of the n distributivity relations.

    Relation i places the m-ary sum at position i of the multiplication.
    """
    m, n = ring.m, ring.n
    relations = [True] * n
    witnesses = {}
    checked = 0
    for polyad in sample_polyads(ring, n - 1 + m, **sampler):
        others, summands = list(polyad[: n - 1]), list(polyad[n - 1 :])
        checked += 1
        for i in range(n):
            if not relations[i]:
                continue
            lhs = ring.mul(others[:i] + [ring.add(summands)] + others[i:])
            rhs = ring.add([ring.mul(others[:i] + [s] + others[i:]) for s in summands])
            if lhs != rhs:
                relations[i] = False
                witnesses[i + 1] = {"others": others, "summands": summands, "values": [lhs, rhs]}
        if not any(relations):
            break
    return DistributivityVerdict(relations, checked, witnesses)


def _permutations(k: int) -> List[Tuple[int, ...]]:
    if k <= 5:
        return list(itertools.permutations(range(k)))[1:]
    # adjacent transpositions and the rotation generate the symmetric group
    perms = []
    for i in range(k - 1):
        p = list(range(k))
        p[i], p[i + 1] = p[i + 1], p[i]
        perms.append(tuple(p))
    perms.append(tuple(range(1, k)) + (0,))
    return perms


def check_commutativity(ring: RingHandle, which: str = "addition", **sampler) -> AxiomVerdict:
    op, k = ring.operation(which)
    perms = _permutations(k)
    checked = 0
    for polyad in sample_polyads(ring, k, **sampler):
        reference = op(list(polyad))
        for perm in perms:
            permuted = [polyad[i] for i in perm]
            checked += 1
            value = op(permuted)
            if value != reference:
                return AxiomVerdict(
                    f"commutativity/{which}",
                    False,
                    checked,
                    {"polyad": list(polyad), "permuted": permuted, "values": [reference, value]},
                )
    return AxiomVerdict(f"commutativity/{which}", True, checked)


def check_solvability(ring: RingHandle, **sampler) -> AxiomVerdict:
    """Every equation add[.., x, ..] = c has a solution x at every place.

    The first element of each sampled polyad is the right-hand side c.
    """
    m = ring.m
    checked = 0
    for polyad in sample_polyads(ring, m, **sampler):
        c, known = polyad[0], list(polyad[1:])
        x = ring.solve_addition(known, c)
        for i in range(m):
            checked += 1
            ok = x is not None and ring.contains(x) and ring.add(known[:i] + [x] + known[i:]) == c
            if not ok:
                return AxiomVerdict(
                    "solvability", False, checked, {"known": known, "c": c, "place": i, "x": x}
                )
    return AxiomVerdict("solvability", True, checked)


def check_closure(ring: RingHandle, **sampler) -> AxiomVerdict:
    checked = 0
    for which in ("addition", "multiplication"):
        op, k = ring.operation(which)
        for polyad in sample_polyads(ring, k, **sampler):
            value = op(list(polyad))
            checked += 1
            if not ring.contains(value):
                return AxiomVerdict(
                    "closure", False, checked, {"which": which, "polyad": list(polyad), "value": value}
                )
    return AxiomVerdict("closure", True, checked)


def _finite_elements(ring: RingHandle) -> List[int]:
    elements = ring.elements()
    if elements is None:
        raise ValueError(f"{ring.name} has an infinite carrier, use a finite ring")
    return elements


def find_idempotents(ring: RingHandle) -> Dict[str, List[int]]:
    elements = _finite_elements(ring)
    return {
        "addition": [x for x in elements if ring.add([x] * ring.m) == x],
        "multiplication": [x for x in elements if ring.mul([x] * ring.n) == x],
    }


def find_zero(ring: RingHandle) -> Optional[int]:
    """The z with mul[.., z, ..] = z for all other arguments, if any."""
    elements = _finite_elements(ring)
    n = ring.n
    for z in elements:
        if all(
            ring.mul(list(rest[:i]) + [z] + list(rest[i:])) == z
            for rest in itertools.product(elements, repeat=n - 1)
            for i in range(n)
        ):
            return z
    return None


def find_identity(ring: RingHandle) -> Optional[int]:
    """The e with mul[x, e, .., e] = x at every place of x, if any."""
    elements = _finite_elements(ring)
    n = ring.n
    for e in elements:
        if all(
            ring.mul([e] * i + [x] + [e] * (n - 1 - i)) == x for x in elements for i in range(n)
        ):
            return e
    return None
