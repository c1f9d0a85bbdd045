"""Bounded search for equal sums of like powers.

Sides are enumerated as non-decreasing tuples over the elements with
indices in a closed range. The work is split by the leading element of the
u side; every partition is independent and the merged output is ranked by
the common value of both sides, then by (u, v).
"""
import itertools
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Any, Dict, List, Tuple

from tqdm import tqdm

from ..rings.core import RingHandle, long_add, polyadic_power
from ..rings.registry import ring_from_descriptor
from .equation import PowerSumInstance, PowerSumSolution

logger = logging.getLogger(__name__)

STRATEGIES = ("hash", "nested")

Side = Tuple[int, ...]


def _freeze(descriptor: Dict[str, Any]) -> Tuple:
    return tuple(sorted(descriptor.items()))


@lru_cache(maxsize=8)
def _ring(frozen: Tuple) -> RingHandle:
    return ring_from_descriptor(dict(frozen))


@lru_cache(maxsize=8)
def _powers(frozen: Tuple, l: int, elements: Side) -> Dict[int, int]:
    ring = _ring(frozen)
    return {x: polyadic_power(ring, x, l) for x in elements}


def _side_value(ring: RingHandle, powers: Dict[int, int], ell: int, side: Side) -> int:
    return long_add(ring, ell, [powers[x] for x in side])


@lru_cache(maxsize=8)
def _side_table(frozen: Tuple, l: int, ell: int, elements: Side) -> Dict[int, List[Side]]:
    """All sides of ell(m-1)+1 elements keyed by their value."""
    ring = _ring(frozen)
    powers = _powers(frozen, l, elements)
    table = defaultdict(list)
    for side in itertools.combinations_with_replacement(elements, ell * (ring.m - 1) + 1):
        table[_side_value(ring, powers, ell, side)].append(side)
    return dict(table)


def _search_partition(task: Tuple) -> List[Tuple[int, Side, Side]]:
    """Solutions whose u side starts with elements[lead]."""
    frozen, l, p, q, elements, lead, strategy = task
    ring = _ring(frozen)
    powers = _powers(frozen, l, elements)
    u_size = p * (ring.m - 1) + 1

    if strategy == "hash":
        table = _side_table(frozen, l, q, elements)
    else:
        v_sides = list(itertools.combinations_with_replacement(elements, q * (ring.m - 1) + 1))

    hits = []
    for tail in itertools.combinations_with_replacement(elements[lead:], u_size - 1):
        u = (elements[lead],) + tail
        value = _side_value(ring, powers, p, u)
        if strategy == "hash":
            candidates = table.get(value, [])
        else:
            candidates = [v for v in v_sides if _side_value(ring, powers, q, v) == value]
        for v in candidates:
            if u == v or (p == q and not u < v):
                continue
            hits.append((value, u, v))
    return hits


def search(
    instance: PowerSumInstance,
    k_bound: Tuple[int, int],
    strategy: str = "hash",
    exclude_shift_zero: bool = False,
    workers: int = 1,
    progress: bool = False,
) -> List[Tuple[int, PowerSumSolution]]:
    """
    All nontrivial solutions with element indices in k_bound.

    Args:
        instance (PowerSumInstance): The (l | p, q) instance.
        k_bound (Tuple[int, int]): Inclusive index range, mapped to elements by
            `ring.element`.
        strategy (str, optional): 'hash' joins on side values, 'nested'
            compares every pair of sides. Defaults to 'hash'.
        exclude_shift_zero (bool, optional): Drop the ring's shift-zero element
            from the candidates. Defaults to False.
        workers (int, optional): Number of worker processes. Defaults to 1.
        progress (bool, optional): Show a tqdm bar over partitions. Defaults to False.

    Returns:
        List[Tuple[int, PowerSumSolution]]: (common value, solution), ranked by
            value, then by u and v.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"Unknown strategy {strategy}, choose from {STRATEGIES}")
    low, high = k_bound
    if low > high:
        raise ValueError(f"Empty index range {k_bound}")
    ring = instance.ring

    elements = sorted({x for x in map(ring.element, range(low, high + 1)) if ring.contains(x)})
    if exclude_shift_zero and ring.shift_zero is not None:
        elements = [x for x in elements if x != ring.shift_zero]
    elements = tuple(elements)

    frozen = _freeze(ring.descriptor())
    tasks = [
        (frozen, instance.l, instance.p, instance.q, elements, lead, strategy)
        for lead in range(len(elements))
    ]
    logger.info(f"Searching {ring.name} (l={instance.l}|{instance.p},{instance.q}) in {len(tasks)} partitions")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(
                tqdm(executor.map(_search_partition, tasks), total=len(tasks), disable=not progress)
            )
    else:
        results = [_search_partition(t) for t in tqdm(tasks, disable=not progress)]

    hits = sorted(itertools.chain.from_iterable(results))
    logger.info(f"Found {len(hits)} solutions")
    return [(value, PowerSumSolution(u, v)) for value, u, v in hits]
