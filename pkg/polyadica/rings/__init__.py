from .builtin import (  # noqa
    BinaryIntegerRing,
    Exotic32Ring,
    ExponentialRing,
    Finite34Ring,
    builtin_binary_Z,
    builtin_exotic_32,
    builtin_exponential_example,
    builtin_finite_34,
)
from .core import (  # noqa
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    DEFAULT_WINDOW,
    AxiomVerdict,
    DistributivityVerdict,
    RingHandle,
    check_associativity,
    check_closure,
    check_commutativity,
    check_distributivity,
    check_solvability,
    find_identity,
    find_idempotents,
    find_zero,
    fold,
    long_add,
    long_mul,
    polyadic_power,
)
from .registry import RING_KINDS, get_ring, ring_from_descriptor  # noqa
