from .multigrade import (  # noqa
    BUILTIN_SOLUTIONS,
    GOLDEN_QUINTIC,
    LEHMER_OCTET,
    MultigradeSolution,
    frolov_transform,
    make_solution,
    prouhet_thue_morse,
    thue_morse,
    verify_degree,
)
from .pipeline import (  # noqa
    ArityMatch,
    ClassSolution,
    arity_match,
    generate_class_solution,
    generate_class_solutions,
    te_pipeline,
)
