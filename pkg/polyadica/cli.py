"""Command-line interface.

Exit codes: 0 success, 1 domain failure (not quantized, false identity),
2 usage error.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

from .arity import shape
from .congruence import congruence
from .diophantine import bounds, identities
from .diophantine.equation import PowerSumInstance, from_record, to_record, verify
from .diophantine.search import STRATEGIES, search
from .errors import PolyadicError
from .rings.registry import RING_KINDS, get_ring
from .store import SolutionStore
from .tarry_escott import multigrade, pipeline
from .utils import dump_records, parse_json_objects

logger = logging.getLogger(__name__)


def arity(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"arity must be an integer, got {value!r}")
    if not shape.ARITY_MIN <= number <= shape.ARITY_MAX:
        raise argparse.ArgumentTypeError(
            f"arity must lie in {shape.ARITY_MIN}..{shape.ARITY_MAX}, got {number}"
        )
    return number


def count(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {number}")
    return number


def component(value: str) -> tuple:
    """`m_V:k_rho` pair of a direct sum or tensor product component."""
    try:
        m_V, k_rho = value.split(":")
        return arity(m_V), count(k_rho)
    except ValueError:
        raise argparse.ArgumentTypeError(f"component must look like m_V:k_rho, got {value!r}")


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _emit_csv(df) -> None:
    sys.stdout.write(df.to_csv(index=False))


def _read_objects(path: str) -> List[Dict[str, Any]]:
    if path == "-":
        return parse_json_objects(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as f:
        return parse_json_objects(f.read())


SHAPE_COMMANDS: Dict[str, Callable[[argparse.Namespace], Any]] = {
    "vector-space": lambda a: shape.composition_shape(a.nK, a.krho, a.nrho).to_dict(),
    "distributivity": lambda a: shape.distributivity_shape(a.mK, a.krho, a.nrho).to_dict(),
    "algebra": lambda a: shape.algebra_compat_shape(a.nK, a.krho, a.nA).to_dict(),
    "equal-lshape": lambda a: shape.equal_lshape_arity_conditions(
        shape.VectorSpaceSignature(a.mK, a.nK, a.mV, a.krho, a.nrho), a.nA, a.mA
    ).to_dict(),
    "regular": lambda a: {"k_rho": shape.regular_multiaction_places(a.nK, a.ell_kappa)},
    "span": lambda a: {"length": shape.long_product_length(a.arity, a.ell)},
    "mapping": lambda a: shape.mapping_shape(a.mV, a.mV_prime, a.kF, a.krho, a.krho_prime).to_dict(),
    "functional": lambda a: shape.functional_shape(a.mK, a.mV, a.nK, a.kL, a.krho).to_dict(),
    "dual": lambda a: shape.dual_space_shape(a.nK, a.nL).to_dict(),
    "direct-sum": lambda a: shape.direct_sum_compatible(a.component, a.mV).to_dict(),
    "tensor": lambda a: shape.tensor_product_compatible(a.component, a.mV).to_dict(),
    "inner-pairing": lambda a: shape.inner_pairing_constraints(a.mK, a.nK, a.mV, a.krho, a.N).to_dict(),
}

SHAPE_ARGUMENTS = {
    "vector-space": ("nK", "krho", "nrho"),
    "distributivity": ("mK", "krho", "nrho"),
    "algebra": ("nK", "krho", "nA"),
    "equal-lshape": ("mK", "nK", "mV", "krho", "nrho", "nA"),
    "regular": ("nK", "ell_kappa"),
    "span": ("arity", "ell"),
    "mapping": ("mV", "mV_prime", "kF", "krho", "krho_prime"),
    "functional": ("mK", "mV", "nK", "kL", "krho"),
    "dual": ("nK", "nL"),
    "inner-pairing": ("mK", "nK", "mV", "krho", "N"),
}

COUNT_ARGUMENTS = ("krho", "krho_prime", "kF", "kL", "ell_kappa", "ell")


def cmd_shape(args: argparse.Namespace) -> int:
    _emit(SHAPE_COMMANDS[args.structure](args))
    return 0


def cmd_quantize(args: argparse.Namespace) -> int:
    _emit_csv(shape.quantization_table(args.krho, args.max_arity, args.skip_trivial))
    return 0


def cmd_class_table(args: argparse.Namespace) -> int:
    _emit_csv(congruence.class_table(args.b_max))
    return 0


def cmd_class_info(args: argparse.Namespace) -> int:
    cls = congruence.CongruenceClass(args.a, args.b)
    _emit(
        {
            **congruence.arity_shape(cls).to_dict(),
            **congruence.zero_and_unit_analysis(cls),
        }
    )
    return 0


def cmd_lps_table(args: argparse.Namespace) -> int:
    _emit_csv(bounds.limiting_arity_table(args.pq, args.k_max))
    return 0


def cmd_conjecture(args: argparse.Namespace) -> int:
    _emit(bounds.conjecture_report(args.p, args.q, args.m, args.n).to_dict())
    return 0


def cmd_search(args: argparse.Namespace) -> int:
    ring = get_ring(args.ring, args.a, args.b)
    instance = PowerSumInstance(ring, args.l, args.p, args.q)
    store = SolutionStore(args.store) if args.save else None
    hits = search(
        instance,
        (args.min, args.max),
        strategy=args.strategy,
        exclude_shift_zero=args.exclude_shift_zero,
        workers=args.workers,
        progress=args.progress,
    )
    for value, solution in hits:
        record = to_record(instance, solution, value)
        if store is not None:
            store.add(record)
        _emit(record)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    records = _read_objects(args.file)
    if not records:
        raise ValueError(f"No solution found in {args.file}")
    status = 0
    for record in records:
        instance, solution = from_record(record)
        verdict = verify(instance, solution)
        _emit({"ring": instance.ring.descriptor(), **verdict.to_dict()})
        if not verdict.holds:
            status = 1
    return status


def cmd_identities(args: argparse.Namespace) -> int:
    rows = identities.verify_registry()
    if args.out:
        dump_records(rows, args.out)
    for row in rows:
        _emit(row)
    return 0 if all(row["passed"] for row in rows) else 1


def _multigrade_input(args: argparse.Namespace) -> multigrade.MultigradeSolution:
    if getattr(args, "input", None):
        (data,) = _read_objects(args.input)
        return multigrade.MultigradeSolution.from_dict(data)
    if getattr(args, "solution", None):
        return multigrade.BUILTIN_SOLUTIONS[args.solution]
    if getattr(args, "degree", None):
        return multigrade.prouhet_thue_morse(args.degree)
    raise ValueError("Give a degree, a built-in solution or an input file")


def cmd_te_gen(args: argparse.Namespace) -> int:
    _emit(_multigrade_input(args).to_dict())
    return 0


def cmd_frolov(args: argparse.Namespace) -> int:
    _emit(multigrade.frolov_transform(_multigrade_input(args), args.a, args.b).to_dict())
    return 0


def cmd_te_pipeline(args: argparse.Namespace) -> int:
    results = pipeline.te_pipeline(
        _multigrade_input(args),
        b_max=args.b_max,
        skip_binary=not args.keep_binary,
        workers=args.workers,
    )
    for result in results:
        _emit(result.to_dict())
    return 0 if results else 1


def _add_multigrade_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--degree", type=count, help="Prouhet-Thue-Morse solution of this degree")
    source.add_argument("--solution", choices=sorted(multigrade.BUILTIN_SOLUTIONS))
    source.add_argument("--in", dest="input", help="JSON file with left, right (and degree)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyadica", description="Polyadic rings, arity shapes and equal sums of like powers."
    )
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    parser.add_argument("--store", default=None, help="Solution store (.jsonl), overrides POLYADICA_STORE")
    commands = parser.add_subparsers(dest="command", required=True)

    shape_parser = commands.add_parser("shape", help="Arity shapes of polyadic structures")
    structures = shape_parser.add_subparsers(dest="structure", required=True)
    for name, names in SHAPE_ARGUMENTS.items():
        sub = structures.add_parser(name)
        for arg in names:
            sub.add_argument(
                f"--{arg.replace('_', '-')}",
                dest=arg,
                type=count if arg in COUNT_ARGUMENTS else arity,
                required=True,
            )
        if name == "equal-lshape":
            sub.add_argument("--mA", type=arity, default=None)
        sub.set_defaults(func=cmd_shape)
    for name, mV_required in (("direct-sum", True), ("tensor", False)):
        sub = structures.add_parser(name)
        sub.add_argument("--component", type=component, action="append", required=True)
        sub.add_argument("--mV", type=arity, required=mV_required, default=None)
        sub.set_defaults(func=cmd_shape)

    sub = commands.add_parser("quantize", help="Quantized ell-shapes as CSV")
    sub.add_argument("--krho", type=count, nargs="+", required=True)
    sub.add_argument("--max-arity", type=arity, default=10)
    sub.add_argument("--skip-trivial", action="store_true", help="Drop rows with ell_id = 0")
    sub.set_defaults(func=cmd_quantize)

    sub = commands.add_parser("class-table", help="Shapes of all congruence classes as CSV")
    sub.add_argument("--b-max", type=arity, default=congruence.DEFAULT_B_MAX)
    sub.set_defaults(func=cmd_class_table)

    sub = commands.add_parser("class-info", help="Shape, zero and unit of one congruence class")
    sub.add_argument("--a", type=int, required=True)
    sub.add_argument("--b", type=int, required=True)
    sub.set_defaults(func=cmd_class_info)

    sub = commands.add_parser("lps-table", help="Limiting arities as CSV")
    sub.add_argument("--pq", type=count, nargs="+", default=[2, 3, 4])
    sub.add_argument("--k-max", type=count, default=3)
    sub.set_defaults(func=cmd_lps_table)

    sub = commands.add_parser("conjecture", help="Binary and polyadic LPS bounds")
    for arg in ("p", "q"):
        sub.add_argument(f"--{arg}", type=count, required=True)
    for arg in ("m", "n"):
        sub.add_argument(f"--{arg}", type=arity, required=True)
    sub.set_defaults(func=cmd_conjecture)

    sub = commands.add_parser("search", help="Bounded search, one JSON line per solution")
    sub.add_argument("--ring", choices=RING_KINDS, required=True)
    sub.add_argument("--a", type=int, default=None)
    sub.add_argument("--b", type=int, default=None)
    sub.add_argument("--l", type=count, required=True)
    sub.add_argument("--p", type=count, required=True)
    sub.add_argument("--q", type=count, required=True)
    sub.add_argument("--min", type=int, default=0)
    sub.add_argument("--max", type=int, required=True)
    sub.add_argument("--strategy", choices=STRATEGIES, default="hash")
    sub.add_argument("--exclude-shift-zero", action="store_true")
    sub.add_argument("--workers", type=count, default=1)
    sub.add_argument("--progress", action="store_true")
    sub.add_argument("--save", action="store_true", help="Append solutions to the store")
    sub.set_defaults(func=cmd_search)

    sub = commands.add_parser("verify", help="Verify solutions from a JSON or JSON-lines file")
    sub.add_argument("--file", required=True, help="Path, or - for stdin")
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("identities", help="Verify the registry of known identities")
    sub.add_argument("--out", default=None, help="Also dump the verdicts to this .jsonl file")
    sub.set_defaults(func=cmd_identities)

    sub = commands.add_parser("te-gen", help="Multigrade solution as JSON")
    _add_multigrade_source(sub)
    sub.set_defaults(func=cmd_te_gen)

    sub = commands.add_parser("frolov", help="Affine transform x -> a + b x of a multigrade solution")
    sub.add_argument("--a", type=int, required=True)
    sub.add_argument("--b", type=int, required=True)
    _add_multigrade_source(sub)
    sub.set_defaults(func=cmd_frolov)

    sub = commands.add_parser("te-pipeline", help="Equal sums of like powers over congruence classes")
    _add_multigrade_source(sub)
    sub.add_argument("--b-max", type=arity, default=congruence.DEFAULT_B_MAX)
    sub.add_argument("--keep-binary", action="store_true", help="Keep matches with binary arities")
    sub.add_argument("--workers", type=count, default=1)
    sub.set_defaults(func=cmd_te_pipeline)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.getLogger("polyadica").setLevel(logging.DEBUG)
    try:
        return args.func(args)
    except PolyadicError as e:
        _emit(e.to_dict())
        return 1
    except (ValueError, TypeError, KeyError, OSError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        _emit({"error": type(e).__name__, "message": str(e)})
        return 2
