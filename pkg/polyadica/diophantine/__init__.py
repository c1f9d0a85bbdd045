from .bounds import (  # noqa
    ConjectureReport,
    LPSBound,
    conjecture_report,
    limiting_arities,
    limiting_arity_table,
    lps_bound_binary,
    lps_bound_polyadic,
)
from .equation import (  # noqa
    PowerSumInstance,
    PowerSumSolution,
    Verdict,
    binary_form,
    evaluate_side,
    from_record,
    to_record,
    verify,
)
from .identities import KnownIdentity, known_identities, run_registry, verify_registry  # noqa
from .search import STRATEGIES, search  # noqa
