"""Arity-shape systems of polyadic vector spaces, algebras, mappings and
inner pairing spaces.

Every composed multiaction carries an integer pair (ell_mu, ell_id): the
number of inner multiplications and the number of intact elements. Both must
be non-negative integers, so only some combinations of arities are admissible
("quantized").
"""
import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd
import sympy

from ..errors import NotQuantized, OutOfBounds

logger = logging.getLogger(__name__)

ARITY_MIN = 2
ARITY_MAX = 64

STRUCTURES_WITHOUT_SHAPE = ("magma", "semigroup", "quasigroup", "group", "ring", "field")


@dataclass(frozen=True)
class LShape:
    ell_mu: int
    ell_id: int

    @property
    def places(self) -> int:
        return self.ell_mu + self.ell_id

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class VectorSpaceSignature:
    m_K: int
    n_K: int
    m_V: int
    k_rho: int
    n_rho: int


@dataclass(frozen=True)
class MappingSignature:
    k_F: int
    m_V: int
    m_V_prime: int
    k_rho: int
    k_rho_prime: int
    ell_mu_k: int
    ell_id_k: int
    ell_mu_f: int
    ell_id_f: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class FunctionalShape:
    """The h and L superscripts of the functional components are one and the same."""

    k_L: int
    ell_nu_k: int
    ell_id_nu: int
    ell_mu_h: int
    ell_id_h: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class DualSpaceShape:
    k_L: int
    ell_mu_L: int
    ell_id_L: int
    m_L_rule: str = "m_L = m_K"

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class SumCompatibility:
    compatible: bool
    k_rho: Optional[int]
    mode: Optional[str]
    reason: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class ConstraintReport:
    valid: bool
    checks: Dict[str, bool]
    witnesses: List[str] = field(default_factory=list)
    extra: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "valid": self.valid,
            "checks": dict(self.checks),
            "witnesses": list(self.witnesses),
            **self.extra,
        }


def check_arity(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, not {type(value)}")
    if value < ARITY_MIN or value > ARITY_MAX:
        raise OutOfBounds(
            f"{name}={value} is outside {ARITY_MIN}..{ARITY_MAX}",
            equation="arity range",
            **{name: value},
        )
    return value


def check_count(name: str, value: int, minimum: int = 1) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an int, not {type(value)}")
    if value < minimum:
        raise OutOfBounds(
            f"{name}={value} must be at least {minimum}", equation="count range", **{name: value}
        )
    return value


def _quantize(
    arity_in: int, k_rho: int, n_out: int, equation: str, names: Tuple[str, str]
) -> LShape:
    """Solve k_rho * n_out = arity_in * ell_mu + ell_id with k_rho = ell_mu + ell_id."""
    in_name, out_name = names
    check_arity(in_name, arity_in)
    check_arity(out_name, n_out)
    check_count("k_rho", k_rho)
    details = {in_name: arity_in, "k_rho": k_rho, out_name: n_out}
    if n_out > arity_in:
        raise OutOfBounds(
            f"{out_name}={n_out} exceeds {in_name}={arity_in}", equation=equation, **details
        )

    ell_mu = Fraction(k_rho * (n_out - 1), arity_in - 1)
    ell_id = Fraction(k_rho * (arity_in - n_out), arity_in - 1)
    if ell_mu.denominator != 1 or ell_id.denominator != 1:
        raise NotQuantized(
            f"ell_mu={ell_mu}, ell_id={ell_id} are not both integers",
            equation=equation,
            **details,
        )
    shape = LShape(int(ell_mu), int(ell_id))
    if not (1 <= shape.ell_mu <= k_rho <= (arity_in - 1) * shape.ell_mu):
        raise OutOfBounds(
            f"ell_mu={shape.ell_mu} violates 1 <= ell_mu <= k_rho <= ({in_name}-1) ell_mu",
            equation=equation,
            **details,
        )
    return shape


def composition_shape(n_K: int, k_rho: int, n_rho: int) -> LShape:
    """ell-shape of the composition of n_rho multiactions with k_rho places.

    Args:
        n_K (int): Arity of the field multiplication.
        k_rho (int): Number of places of the multiaction.
        n_rho (int): Arity of the multiaction semigroup.

    Raises:
        NotQuantized: If ell_mu or ell_id is not an integer.
        OutOfBounds: If the arities or the resulting shape leave their ranges.

    Returns:
        LShape: satisfies k_rho * n_rho = n_K * ell_mu + ell_id.
    """
    return _quantize(n_K, k_rho, n_rho, "l1n", ("n_K", "n_rho"))


def distributivity_shape(m_K: int, k_rho: int, n_rho: int) -> LShape:
    """ell-shape of the distributivity of the multiaction over the field addition."""
    return _quantize(m_K, k_rho, n_rho, "l2m", ("m_K", "n_rho"))


def algebra_compat_shape(n_K: int, k_rho: int, n_A: int) -> LShape:
    """ell-shape of the compatibility of the multiaction with the algebra multiplication."""
    return _quantize(n_K, k_rho, n_A, "l1r", ("n_K", "n_A"))


def equal_lshape_arity_conditions(
    sig: VectorSpaceSignature, n_A: int, m_A: Optional[int] = None
) -> ConstraintReport:
    """Whether the composition, distributivity and algebra ell-shapes can coincide.

    They coincide exactly when n_K = m_K and n_rho = n_A; m_A and k_rho are free.
    """
    checks = {"n_K = m_K": sig.n_K == sig.m_K, "n_rho = n_A": sig.n_rho == n_A}
    witnesses = []
    if not checks["n_K = m_K"]:
        witnesses.append(f"n_K={sig.n_K} != m_K={sig.m_K}")
    if not checks["n_rho = n_A"]:
        witnesses.append(f"n_rho={sig.n_rho} != n_A={n_A}")

    shapes = {}
    for name, fn, args in (
        ("composition", composition_shape, (sig.n_K, sig.k_rho, sig.n_rho)),
        ("distributivity", distributivity_shape, (sig.m_K, sig.k_rho, sig.n_rho)),
        ("algebra", algebra_compat_shape, (sig.n_K, sig.k_rho, n_A)),
    ):
        try:
            shapes[name] = fn(*args).to_dict()
        except (NotQuantized, OutOfBounds):
            shapes[name] = None
    computed = [s for s in shapes.values() if s is not None]
    coincide = len(computed) == 3 and all(s == computed[0] for s in computed)

    return ConstraintReport(
        valid=all(checks.values()),
        checks=checks,
        witnesses=witnesses,
        extra={"unconstrained": ["m_A", "k_rho"], "m_A": m_A, "shapes": shapes, "coincide": coincide},
    )


def enumerate_quantized(k_rho: int, max_arity: int) -> List[Tuple[int, int, int, int]]:
    """All (ell_mu, ell_id, n_K, n_rho) with 2 <= n_rho <= n_K <= max_arity that quantize.

    Args:
        k_rho (int): Number of places.
        max_arity (int): Largest n_K considered.

    Returns:
        List[Tuple[int, int, int, int]]: Sorted by (ell_mu, n_K, n_rho).
    """
    check_count("k_rho", k_rho)
    check_arity("max_arity", max_arity)
    rows = []
    for n_K in range(ARITY_MIN, max_arity + 1):
        for n_rho in range(ARITY_MIN, n_K + 1):
            try:
                shape = composition_shape(n_K, k_rho, n_rho)
            except (NotQuantized, OutOfBounds):
                continue
            rows.append((shape.ell_mu, shape.ell_id, n_K, n_rho))
    return sorted(rows)


def quantization_table(
    k_rhos: Iterable[int], max_arity: int, skip_trivial: bool = False
) -> pd.DataFrame:
    """CSV-ready table of enumerate_quantized over several k_rho.

    Args:
        k_rhos (Iterable[int]): Numbers of places.
        max_arity (int): Largest n_K.
        skip_trivial (bool, optional): Drop rows without intact elements
            (ell_id = 0, i.e. n_rho = n_K). Defaults to False.
    """
    records = [
        {"k_rho": k, "ell_mu": mu, "ell_id": lid, "n_K": n_K, "n_rho": n_rho}
        for k in k_rhos
        for mu, lid, n_K, n_rho in enumerate_quantized(k, max_arity)
        if not (skip_trivial and lid == 0)
    ]
    return pd.DataFrame(records, columns=["k_rho", "ell_mu", "ell_id", "n_K", "n_rho"])


def regular_multiaction_places(n_K: int, ell_kappa: int) -> int:
    """Places of a multiaction built from ell_kappa field multiplications."""
    check_arity("n_K", n_K)
    check_count("ell_kappa", ell_kappa)
    return ell_kappa * (n_K - 1)


def long_product_length(arity: int, ell: int) -> int:
    """Number of arguments of a long operation made of ell arity-ary operations."""
    check_arity("arity", arity)
    check_count("ell", ell, minimum=0)
    return ell * (arity - 1) + 1


def _solve_integral(
    system: Sequence[sympy.Eq], unknowns: Sequence[sympy.Symbol], equation: str, details: Dict
) -> Dict[str, int]:
    solutions = sympy.linsolve(list(system), list(unknowns))
    if not solutions:
        raise NotQuantized("The linear system has no solution", equation=equation, **details)
    (values,) = tuple(solutions)
    result = {}
    for symbol, value in zip(unknowns, values):
        if value.free_symbols or not value.is_integer or value < 0:
            raise NotQuantized(
                f"{symbol}={value} is not a non-negative integer", equation=equation, **details
            )
        result[str(symbol)] = int(value)
    return result


def mapping_shape(
    m_V: int, m_V_prime: int, k_F: int, k_rho: int, k_rho_prime: int
) -> MappingSignature:
    """The four ell-components of a k_F-place K-linear mapping.

    Solves
        k_F m_V' = m_V ell_mu^k + ell_id^k,   k_F = ell_mu^k + ell_id^k,
        k_F = ell_mu^f + ell_id^f,             k_rho' = k_rho ell_mu^f.
    """
    check_arity("m_V", m_V)
    check_arity("m_V_prime", m_V_prime)
    check_count("k_F", k_F)
    check_count("k_rho", k_rho)
    check_count("k_rho_prime", k_rho_prime)
    details = dict(m_V=m_V, m_V_prime=m_V_prime, k_F=k_F, k_rho=k_rho, k_rho_prime=k_rho_prime)
    if m_V_prime > m_V:
        raise OutOfBounds(f"m_V_prime={m_V_prime} exceeds m_V={m_V}", equation="fr1", **details)

    unknowns = sympy.symbols("ell_mu_k ell_id_k ell_mu_f ell_id_f", integer=True)
    mu_k, id_k, mu_f, id_f = unknowns
    system = [
        sympy.Eq(k_F * m_V_prime, m_V * mu_k + id_k),
        sympy.Eq(k_F, mu_k + id_k),
        sympy.Eq(k_F, mu_f + id_f),
        sympy.Eq(k_rho_prime, k_rho * mu_f),
    ]
    solved = _solve_integral(system, unknowns, "fr1", details)
    return MappingSignature(k_F, m_V, m_V_prime, k_rho, k_rho_prime, **solved)


def mapping_closed_form(
    m_V: int, m_V_prime: int, k_F: int, k_rho: int, k_rho_prime: int
) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    mu_k = Fraction(k_F * (m_V_prime - 1), m_V - 1)
    mu_f = Fraction(k_rho_prime, k_rho)
    return mu_k, k_F - mu_k, mu_f, k_F - mu_f


def functional_shape(m_K: int, m_V: int, n_K: int, k_L: int, k_rho: int) -> FunctionalShape:
    """The four ell-components of a linear polyadic functional.

    Solves
        k_L m_K = m_V ell_nu^k + ell_id^nu,   k_L = ell_nu^k + ell_id^nu,
        k_L = ell_mu^h + ell_id^h,             n_K - 1 = k_rho ell_mu^h.
    """
    check_arity("m_K", m_K)
    check_arity("m_V", m_V)
    check_arity("n_K", n_K)
    check_count("k_L", k_L)
    check_count("k_rho", k_rho)
    details = dict(m_K=m_K, m_V=m_V, n_K=n_K, k_L=k_L, k_rho=k_rho)

    unknowns = sympy.symbols("ell_nu_k ell_id_nu ell_mu_h ell_id_h", integer=True)
    nu_k, id_nu, mu_h, id_h = unknowns
    system = [
        sympy.Eq(k_L * m_K, m_V * nu_k + id_nu),
        sympy.Eq(k_L, nu_k + id_nu),
        sympy.Eq(k_L, mu_h + id_h),
        sympy.Eq(n_K - 1, k_rho * mu_h),
    ]
    solved = _solve_integral(system, unknowns, "h2", details)
    return FunctionalShape(k_L=k_L, **solved)


def functional_closed_form(
    m_K: int, m_V: int, n_K: int, k_L: int, k_rho: int
) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    nu_k = Fraction(k_L * (m_K - 1), m_V - 1)
    mu_h = Fraction(n_K - 1, k_rho)
    return nu_k, k_L - nu_k, mu_h, k_L - mu_h


def dual_space_shape(n_K: int, n_L: int) -> DualSpaceShape:
    """Places and ell-shape of the multiaction on the dual polyadic space."""
    check_arity("n_K", n_K)
    check_arity("n_L", n_L)
    if n_L > n_K:
        raise OutOfBounds(f"n_L={n_L} exceeds n_K={n_K}", equation="ln", n_K=n_K, n_L=n_L)
    return DualSpaceShape(k_L=n_K - 1, ell_mu_L=n_L - 1, ell_id_L=n_K - n_L)


def _addition_mode(arities: Sequence[int], m_V: int) -> Tuple[Optional[str], str]:
    for i, m_i in enumerate(arities):
        check_arity(f"m_V[{i}]", m_i)
    over = [m_i for m_i in arities if m_i > m_V]
    if over:
        return None, f"component arity {over[0]} exceeds target m_V={m_V}"
    if all(m_i == m_V for m_i in arities):
        return "uniform", ""
    # shorter columns take the first m_V_i summands
    return "mixed", ""


def direct_sum_compatible(components: Sequence[Tuple[int, int]], m_V: int) -> SumCompatibility:
    """Direct sum of polyadic vector spaces given as (m_V_i, k_rho_i) pairs.

    The places of the multiactions add up, the additions are either all of
    arity m_V (uniform) or at most m_V (mixed).
    """
    check_arity("m_V", m_V)
    if not components:
        raise ValueError("A direct sum needs at least one component")
    mode, reason = _addition_mode([c[0] for c in components], m_V)
    k_total = sum(check_count("k_rho", c[1]) for c in components)
    if mode is None:
        return SumCompatibility(False, None, None, reason)
    return SumCompatibility(True, k_total, mode)


def tensor_product_compatible(
    components: Sequence[Tuple[int, int]], m_V: Optional[int] = None
) -> SumCompatibility:
    """Tensor product of polyadic vector spaces given as (m_V_i, k_rho_i) pairs.

    All multiactions must have the same number of places; additions follow
    the direct-sum rule against m_V (defaults to the largest component arity).
    """
    if not components:
        raise ValueError("A tensor product needs at least one component")
    if m_V is None:
        m_V = max(c[0] for c in components)
    check_arity("m_V", m_V)
    k_values = sorted({check_count("k_rho", c[1]) for c in components})
    mode, reason = _addition_mode([c[0] for c in components], m_V)
    if len(k_values) > 1:
        return SumCompatibility(False, None, mode, f"places differ: {k_values}")
    if mode is None:
        return SumCompatibility(False, None, None, reason)
    return SumCompatibility(True, k_values[0], mode)


def norm_constraints(m_K: int, m_V: int, N: int) -> ConstraintReport:
    ok = m_K == m_V == N
    return ConstraintReport(
        valid=ok,
        checks={"m_K = m_V = N": ok},
        witnesses=[] if ok else [f"m_K={m_K}, m_V={m_V}, N={N} differ"],
    )


def inner_pairing_constraints(m_K: int, n_K: int, m_V: int, k_rho: int, N: int) -> ConstraintReport:
    """Arity constraints of a polyadic inner pairing space.

    Valid iff n_K - k_rho = 1, m_V = m_K and n_K = N. The norm constraint
    m_K = m_V = N is reported under `norm`.
    """
    for name, value in (("m_K", m_K), ("n_K", n_K), ("m_V", m_V), ("N", N)):
        check_arity(name, value)
    check_count("k_rho", k_rho)
    checks = {"nkk": n_K - k_rho == 1, "mvm": m_V == m_K, "nkn": n_K == N}
    witnesses = []
    if not checks["nkk"]:
        witnesses.append(f"n_K - k_rho = {n_K - k_rho} != 1")
    if not checks["mvm"]:
        witnesses.append(f"m_V={m_V} != m_K={m_K}")
    if not checks["nkn"]:
        witnesses.append(f"n_K={n_K} != N={N}")
    report = ConstraintReport(valid=all(checks.values()), checks=checks, witnesses=witnesses)
    report.extra["norm"] = norm_constraints(m_K, m_V, N).to_dict()
    if not report.valid:
        logger.debug(f"Inner pairing shape rejected: {witnesses}")
    return report


def check_structure(kind: str, **arities: int) -> Dict[str, Any]:
    """Validate the arity shape of one structure kind.

    Args:
        kind (str): One of STRUCTURES_WITHOUT_SHAPE, 'vector-space', 'module',
            'algebra' or 'inner-pairing'.
        **arities: The arities the kind needs (n_K, m_K, k_rho, n_rho, n_A, m_V, N).

    Returns:
        Dict[str, Any]: {'kind', 'valid', 'shapes', 'errors'}.
    """
    if kind in STRUCTURES_WITHOUT_SHAPE:
        return {"kind": kind, "valid": True, "shapes": {}, "errors": []}

    steps = []
    if kind in ("vector-space", "module", "algebra"):
        steps.append(("composition", composition_shape, ("n_K", "k_rho", "n_rho")))
        steps.append(("distributivity", distributivity_shape, ("m_K", "k_rho", "n_rho")))
        if kind == "algebra":
            steps.append(("algebra", algebra_compat_shape, ("n_K", "k_rho", "n_A")))
    elif kind == "inner-pairing":
        report = inner_pairing_constraints(
            *(arities[k] for k in ("m_K", "n_K", "m_V", "k_rho", "N"))
        )
        return {"kind": kind, "valid": report.valid, "shapes": report.to_dict(), "errors": []}
    else:
        raise ValueError(f"Unknown structure kind {kind}")

    shapes, errors = {}, []
    for name, fn, keys in steps:
        missing = [k for k in keys if k not in arities]
        if missing:
            raise KeyError(f"{kind} needs arities {missing}")
        try:
            shapes[name] = fn(*(arities[k] for k in keys)).to_dict()
        except (NotQuantized, OutOfBounds) as e:
            errors.append(e.to_dict())
    return {"kind": kind, "valid": not errors, "shapes": shapes, "errors": errors}
