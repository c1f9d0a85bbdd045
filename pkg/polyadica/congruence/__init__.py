from .congruence import (  # noqa
    DEFAULT_B_MAX,
    ClassElement,
    CongruenceClass,
    ShapeInvariants,
    add,
    arity_shape,
    class_table,
    equal_arity_invariants,
    is_limiting,
    mul,
    multiplicative_neutral_check,
    multiplicative_querelement,
    neutral_sequence_check,
    querelement,
    same_shape_classes,
    zero_and_unit_analysis,
)
from .rationals import (  # noqa
    PolyadicRational,
    from_fraction,
    rational_add,
    rational_inverse,
    rational_mul,
    rational_querelement,
)
from .ring import CongruenceRing, congruence_ring, congruence_ring_from  # noqa
