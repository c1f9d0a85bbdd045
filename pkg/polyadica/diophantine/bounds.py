"""Lander-Parkin-Selfridge bounds for polyadic rings.

The binary bound l_LPS solves (n - 1) l = (p + q)(m - 1) + 1, the polyadic
bound is l_pLPS = p + q + 1. At the limiting arities (m0, n0) they coincide.
"""
import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterable, Optional, Tuple

import pandas as pd

from ..arity.shape import check_arity, check_count

logger = logging.getLogger(__name__)

REGIMES = ("counterexample-window", "polyadic-weaker", "coincide")


@dataclass(frozen=True)
class LPSBound:
    l: int  # noqa: E741
    exact: bool


@dataclass(frozen=True)
class ConjectureReport:
    l_LPS: int
    exact: bool
    l_pLPS: int
    regime: str
    window: Optional[Tuple[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def lps_bound_binary(p: int, q: int, m: int, n: int) -> LPSBound:
    """Integer solution l of (n - 1) l = (p + q)(m - 1) + 1, else its floor flagged inexact."""
    check_count("p", p, minimum=0)
    check_count("q", q, minimum=0)
    check_arity("m", m)
    check_arity("n", n)
    l, rest = divmod((p + q) * (m - 1) + 1, n - 1)
    return LPSBound(l, rest == 0)


def lps_bound_polyadic(p: int, q: int) -> int:
    check_count("p", p, minimum=0)
    check_count("q", q, minimum=0)
    return p + q + 1


def limiting_arities(pq: int, k: int) -> Tuple[int, int]:
    """
    Limiting arities for a total of pq = p + q additions.

    Args:
        pq (int): p + q, at least 2.
        k (int): Non-negative family parameter.

    Returns:
        Tuple[int, int]: (m0, n0) with m0 - n0 = k + 1.
    """
    check_count("p+q", pq, minimum=2)
    check_count("k", k, minimum=0)
    return 3 + pq + (pq + 1) * k, 2 + pq + pq * k


def limiting_arity_table(pq_values: Iterable[int] = (2, 3, 4), k_max: int = 3) -> pd.DataFrame:
    rows = [
        dict(zip(("p_plus_q", "k", "m0", "n0"), (pq, k, *limiting_arities(pq, k))))
        for pq in pq_values
        for k in range(k_max + 1)
    ]
    return pd.DataFrame(rows, columns=["p_plus_q", "k", "m0", "n0"])


def conjecture_report(p: int, q: int, m: int, n: int) -> ConjectureReport:
    """Compare both bounds.

    When l_pLPS < l_LPS, multiplication counts l in (l_pLPS, l_LPS] may carry
    counterexamples to the polyadic conjecture; when l_pLPS > l_LPS the
    polyadic conjecture is the weaker one.
    """
    binary = lps_bound_binary(p, q, m, n)
    polyadic = lps_bound_polyadic(p, q)
    if polyadic < binary.l:
        return ConjectureReport(binary.l, binary.exact, polyadic, REGIMES[0], (polyadic, binary.l))
    if polyadic > binary.l:
        return ConjectureReport(binary.l, binary.exact, polyadic, REGIMES[1])
    return ConjectureReport(binary.l, binary.exact, polyadic, REGIMES[2])
