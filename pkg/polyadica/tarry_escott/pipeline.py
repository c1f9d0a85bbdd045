"""Turn multigrade solutions into equal sums of like powers over congruence-class rings.

A solution with P summands per side and degree s fits an (m,n)-ring when
p(m - 1) = P - 1 and l(n - 1) = s - 1. A Frolov transform x -> a + b x
then moves both lists into [[a]]_b.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..congruence.congruence import DEFAULT_B_MAX, CongruenceClass, same_shape_classes
from ..congruence.ring import congruence_ring
from ..diophantine.equation import PowerSumInstance, PowerSumSolution, Verdict, evaluate_side, verify
from ..errors import NoMatchingClass
from .multigrade import MultigradeSolution, frolov_transform

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArityMatch:
    p: int
    m: int
    l: int  # noqa: E741
    n: int
    satisfies_inequality: bool
    avoids_binary: bool
    thue_morse_size: bool

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ClassSolution:
    cls: CongruenceClass
    match: ArityMatch
    multigrade: MultigradeSolution
    instance: PowerSumInstance
    solution: PowerSumSolution
    value: int
    verdict: Verdict

    def display(self) -> str:
        r = self.multigrade.degree
        return " = ".join(
            " + ".join(f"{x}^{r}" for x in side) for side in (self.solution.u, self.solution.v)
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.cls.to_dict(),
            "match": self.match.to_dict(),
            "degree": self.multigrade.degree,
            "u": list(self.solution.u),
            "v": list(self.solution.v),
            "sum": str(self.value),
            "holds": self.verdict.holds,
            "display": self.display(),
        }


def _divisors(x: int) -> List[int]:
    return [d for d in range(1, x + 1) if x % d == 0]


def arity_match(P: int, s: int) -> List[ArityMatch]:
    """
    All (p, m, l, n) with p(m - 1) = P - 1 and l(n - 1) = s - 1.

    Degree 1 only admits l = 0 with binary multiplication.

    Args:
        P (int): Summands per side, at least 2.
        s (int): Degree, at least 1.

    Returns:
        List[ArityMatch]: Sorted by (p, l), each flagged with the inequality
            s <= P - 1, whether it avoids binary arities and whether P = 2^s.
    """
    if P < 2:
        raise ValueError(f"Need at least 2 summands per side, got {P}")
    if s < 1:
        raise ValueError(f"Degree must be at least 1, got {s}")
    multiplications = [(0, 2)] if s == 1 else [(l, (s - 1) // l + 1) for l in _divisors(s - 1)]
    matches = []
    for p in _divisors(P - 1):
        m = (P - 1) // p + 1
        for l, n in multiplications:
            matches.append(
                ArityMatch(
                    p=p,
                    m=m,
                    l=l,
                    n=n,
                    satisfies_inequality=s <= P - 1,
                    avoids_binary=m > 2 and n > 2,
                    thue_morse_size=P == 2**s,
                )
            )
    return sorted(matches, key=lambda match: (match.p, match.l))


def _class_solution(sol: MultigradeSolution, match: ArityMatch, cls: CongruenceClass) -> ClassSolution:
    ring = congruence_ring(cls)
    moved = frolov_transform(sol, cls.a, cls.b)
    instance = PowerSumInstance(ring, match.l, match.p, match.p)
    solution = PowerSumSolution(moved.left, moved.right).canonical()
    verdict = verify(instance, solution)
    if not verdict.holds:
        raise ArithmeticError(f"Transformed solution fails over {cls}: {verdict.reason}")
    return ClassSolution(
        cls, match, moved, instance, solution, evaluate_side(ring, match.l, solution.u), verdict
    )


def _class_solution_task(task: Tuple[MultigradeSolution, ArityMatch, CongruenceClass]) -> ClassSolution:
    return _class_solution(*task)


def generate_class_solutions(
    sol: MultigradeSolution, match: ArityMatch, b_max: int = DEFAULT_B_MAX, workers: int = 1
) -> List[ClassSolution]:
    """One verified solution for every class with b <= b_max of shape (m, n).

    With workers > 1 the classes are transformed in a process pool; the
    order is the class order either way.
    """
    if match.l < 1:
        raise ValueError("Matches without multiplication (l = 0) have no class solution")
    if match.l * (match.n - 1) + 1 != sol.degree or match.p * (match.m - 1) + 1 != sol.size:
        raise ValueError(f"{match} does not fit a solution of size {sol.size} and degree {sol.degree}")
    classes = same_shape_classes(b_max, match.m, match.n)
    logger.info(f"Classes of shape ({match.m},{match.n}) up to b={b_max}: {[str(c) for c in classes]}")
    tasks = [(sol, match, cls) for cls in classes]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(_class_solution_task, tasks))
    return [_class_solution_task(t) for t in tasks]


def generate_class_solution(
    sol: MultigradeSolution,
    match: ArityMatch,
    b_max: int = DEFAULT_B_MAX,
    cls: Optional[CongruenceClass] = None,
) -> ClassSolution:
    """
    Verified solution over the first class of shape (m, n), or over `cls`.

    Raises:
        NoMatchingClass: If no class with b <= b_max has shape (m, n).
    """
    if cls is not None:
        return _class_solution(sol, match, cls)
    solutions = generate_class_solutions(sol, match, b_max)
    if not solutions:
        raise NoMatchingClass(
            f"No class with b <= {b_max} has arity shape ({match.m},{match.n})",
            equation="arity shape",
            m=match.m,
            n=match.n,
            b_max=b_max,
        )
    return solutions[0]


def te_pipeline(
    sol: MultigradeSolution, b_max: int = DEFAULT_B_MAX, skip_binary: bool = True, workers: int = 1
) -> List[ClassSolution]:
    """Class solutions for every admissible arity match of a multigrade solution."""
    results = []
    for match in arity_match(sol.size, sol.degree):
        if not match.satisfies_inequality or match.l < 1:
            continue
        if skip_binary and not match.avoids_binary:
            continue
        found = generate_class_solutions(sol, match, b_max, workers=workers)
        if not found:
            logger.info(f"No class for {match} up to b={b_max}")
        results.extend(found)
    return results
