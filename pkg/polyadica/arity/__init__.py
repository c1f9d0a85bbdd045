from .shape import (  # noqa
    ARITY_MAX,
    ARITY_MIN,
    ConstraintReport,
    DualSpaceShape,
    FunctionalShape,
    LShape,
    MappingSignature,
    SumCompatibility,
    VectorSpaceSignature,
    algebra_compat_shape,
    check_structure,
    composition_shape,
    direct_sum_compatible,
    distributivity_shape,
    dual_space_shape,
    enumerate_quantized,
    equal_lshape_arity_conditions,
    functional_shape,
    inner_pairing_constraints,
    long_product_length,
    mapping_shape,
    norm_constraints,
    quantization_table,
    regular_multiaction_places,
    tensor_product_compatible,
)
