"""Registry of known equal-sums-of-like-powers identities."""
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

import pandas as pd

from ..rings.registry import ring_from_descriptor
from .equation import PowerSumInstance, PowerSumSolution, verify

logger = logging.getLogger(__name__)

EXOTIC = {"kind": "exotic32"}


@dataclass(frozen=True)
class KnownIdentity:
    name: str
    display: str
    ring: Dict[str, Any]
    l: int  # noqa: E741
    p: int
    q: int
    u: Tuple[int, ...]
    v: Tuple[int, ...]
    expected: bool = True
    suspect: bool = False

    def instance(self) -> PowerSumInstance:
        return PowerSumInstance(ring_from_descriptor(self.ring), self.l, self.p, self.q)

    def solution(self) -> PowerSumSolution:
        return PowerSumSolution(self.u, self.v)


def _congruence(a: int, b: int) -> Dict[str, Any]:
    return {"kind": "congruence", "a": a, "b": b}


KNOWN_IDENTITIES = (
    KnownIdentity("quadruple-3", "3^2 = 1^2 + 2^2 + 2^2", EXOTIC, 1, 0, 1, (2,), (0, 1, 1)),
    KnownIdentity("quadruple-15", "15^2 = 2^2 + 10^2 + 11^2", EXOTIC, 1, 0, 1, (14,), (1, 9, 10)),
    KnownIdentity("cube-6", "6^3 = 3^3 + 4^3 + 5^3", EXOTIC, 2, 0, 1, (5,), (2, 3, 4)),
    KnownIdentity(
        "cube-6-binary", "6^3 = 3^3 + 4^3 + 5^3", {"kind": "binaryZ"}, 2, 0, 2, (6,), (3, 4, 5)
    ),
    KnownIdentity(
        "cube-709", "709^3 = 193^3 + 461^3 + 631^3", EXOTIC, 2, 0, 1, (708,), (192, 460, 630)
    ),
    KnownIdentity(
        "quartic-422481",
        "422481^4 = 95800^4 + 217519^4 + 414560^4",
        EXOTIC,
        3,
        0,
        1,
        (422480,),
        (95799, 217518, 414559),
    ),
    KnownIdentity(
        "sextic", "3^6 + 19^6 + 22^6 = 10^6 + 15^6 + 23^6", EXOTIC, 5, 1, 1, (2, 18, 21), (9, 14, 22)
    ),
    KnownIdentity(
        "quintic-2-3",
        "14^5 = 4 (-1)^5 + 7 5^5 + 8^5 + 2 11^5",
        _congruence(2, 3),
        2,
        0,
        5,
        (14,),
        (-1,) * 4 + (5,) * 7 + (8,) + (11,) * 2,
        expected=False,
        suspect=True,
    ),
    KnownIdentity(
        "quintic-4-5",
        "4^5 + 99^5 + 129^5 + 289^5 + 314^5 + 434^5 = 14^5 + 59^5 + 204^5 + 214^5 + 349^5 + 429^5",
        _congruence(4, 5),
        2,
        1,
        1,
        (4, 99, 129, 289, 314, 434),
        (14, 59, 204, 214, 349, 429),
    ),
    KnownIdentity(
        "quintic-4-10",
        "4^5 + 194^5 + 254^5 + 574^5 + 624^5 + 864^5 = 24^5 + 114^5 + 404^5 + 424^5 + 694^5 + 854^5",
        _congruence(4, 10),
        2,
        1,
        1,
        (4, 194, 254, 574, 624, 864),
        (24, 114, 404, 424, 694, 854),
    ),
    KnownIdentity(
        "cubic-6-7",
        "6^3 + 27^3 + 41^3 + 48^3 + 69^3 + 76^3 + 90^3 + 111^3"
        " = 13^3 + 20^3 + 34^3 + 55^3 + 62^3 + 83^3 + 97^3 + 104^3",
        _congruence(6, 7),
        1,
        1,
        1,
        (6, 27, 41, 48, 69, 76, 90, 111),
        (13, 20, 34, 55, 62, 83, 97, 104),
    ),
)


def known_identities() -> List[KnownIdentity]:
    return list(KNOWN_IDENTITIES)


def verify_registry() -> List[Dict[str, Any]]:
    """Verify every known identity.

    Returns:
        List[Dict[str, Any]]: One record per identity with the verdict and
            whether it matches the expected status.
    """
    rows = []
    for identity in known_identities():
        verdict = verify(identity.instance(), identity.solution())
        if identity.suspect:
            logger.warning(
                f"{identity.name} ({identity.display}) is a suspected erratum: {verdict.reason}"
            )
        rows.append(
            {
                "name": identity.name,
                "display": identity.display,
                "ring": identity.ring,
                "expected": identity.expected,
                "holds": verdict.holds,
                "passed": verdict.holds == identity.expected,
                "suspect": identity.suspect,
                "reason": verdict.reason,
                "binary_form": verdict.to_dict().get("binary_form"),
            }
        )
    return rows


def run_registry() -> pd.DataFrame:
    return pd.DataFrame(verify_registry())
