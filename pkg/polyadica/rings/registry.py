"""Rings from JSON descriptors `{"kind": ..., "a": ..., "b": ...}`."""
import logging
from typing import Any, Dict, Optional, Union

from .builtin import (
    builtin_binary_Z,
    builtin_exotic_32,
    builtin_exponential_example,
    builtin_finite_34,
)
from .core import RingHandle

logger = logging.getLogger(__name__)

BUILTIN_RINGS = {
    "exotic32": builtin_exotic_32,
    "finite34": builtin_finite_34,
    "binaryZ": builtin_binary_Z,
    "exponential": builtin_exponential_example,
}
RING_KINDS = tuple(BUILTIN_RINGS) + ("congruence",)


def get_ring(kind: str, a: Optional[int] = None, b: Optional[int] = None) -> RingHandle:
    """
    Build a ring by kind.

    Args:
        kind (str): One of RING_KINDS.
        a (int, optional): Residue, only for kind 'congruence'.
        b (int, optional): Modulus, only for kind 'congruence'.

    Returns:
        RingHandle: The ring.
    """
    if kind == "congruence":
        if a is None or b is None:
            raise ValueError("A congruence ring needs both a and b")
        from ..congruence.ring import congruence_ring_from

        return congruence_ring_from(int(a), int(b))
    if kind not in BUILTIN_RINGS:
        raise ValueError(f"Unknown ring kind {kind}, choose from {RING_KINDS}")
    return BUILTIN_RINGS[kind]()


def ring_from_descriptor(descriptor: Union[str, Dict[str, Any]]) -> RingHandle:
    if isinstance(descriptor, str):
        return get_ring(descriptor)
    if not isinstance(descriptor, dict) or "kind" not in descriptor:
        raise TypeError(f"Ring descriptor must be a dict with a 'kind', not {descriptor}")
    return get_ring(descriptor["kind"], descriptor.get("a"), descriptor.get("b"))
