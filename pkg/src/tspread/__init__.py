"""t-spread strongly stable monomial ideals.

Exact combinatorics of t-spread monomials (indices at pairwise distance at
least t): enumeration in squarefree-lex order, Borel closures and shadows,
graded Betti numbers of strongly stable ideals via the closed formula,
extremal Betti numbers (corners), the explicit construction of ideals with
the maximal number of corners, and a brute-force oracle that re-derives the
maximal corner counts by exhaustive enumeration.
"""

from .betti import (
    BettiTable,
    CornerSequence,
    corners_from_table,
    corners_via_characterization,
    graded_betti,
    proj_dim,
    regularity,
    render_diagram,
)
from .construction import (
    ConstructionReport,
    Decomposition,
    build_omegas,
    construct_extremal_ideal,
    decompose,
    j_max,
    max_corners,
    nu_max,
    omega_claim_check,
    s_value,
    slex_successor_with_max_n,
)
from .errors import (
    BudgetExceededError,
    ConstructionInapplicableError,
    DegreeMismatchError,
    InvalidMonomialError,
    InvariantViolationError,
    NotStronglyStableError,
    NotTSpreadError,
    TSpreadError,
)
from .ideals import (
    SpreadIdeal,
    borel_closure_degree,
    borel_ideal,
    is_strongly_stable,
    iterated_shadow,
    shadow,
)
from .monomials import (
    Context,
    Monomial,
    format_monomial,
    is_t_spread,
    max_index,
    min_index,
    parse_monomial,
    slex_cmp,
    slex_sorted,
    spread_count,
    spread_monomials,
    support,
)
from .oracle import (
    CrossValidationReport,
    SearchBudget,
    TableCell,
    brute_force_max_corners,
    cross_validate,
    enumerate_borel_closed,
    enumerate_strongly_stable_ideals,
    regenerate_table,
    table_csv,
    table_markdown,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "BudgetExceededError",
    "ConstructionInapplicableError",
    "ConstructionReport",
    "Context",
    "CornerSequence",
    "CrossValidationReport",
    "Decomposition",
    "DegreeMismatchError",
    "InvalidMonomialError",
    "InvariantViolationError",
    "Monomial",
    "NotStronglyStableError",
    "NotTSpreadError",
    "SearchBudget",
    "SpreadIdeal",
    "TSpreadError",
    "TableCell",
    "borel_closure_degree",
    "borel_ideal",
    "brute_force_max_corners",
    "build_omegas",
    "construct_extremal_ideal",
    "corners_from_table",
    "corners_via_characterization",
    "cross_validate",
    "decompose",
    "enumerate_borel_closed",
    "enumerate_strongly_stable_ideals",
    "format_monomial",
    "graded_betti",
    "is_strongly_stable",
    "is_t_spread",
    "iterated_shadow",
    "j_max",
    "max_corners",
    "max_index",
    "min_index",
    "nu_max",
    "omega_claim_check",
    "parse_monomial",
    "proj_dim",
    "regenerate_table",
    "regularity",
    "render_diagram",
    "s_value",
    "shadow",
    "slex_cmp",
    "slex_sorted",
    "slex_successor_with_max_n",
    "spread_count",
    "spread_monomials",
    "support",
    "table_csv",
    "table_markdown",
]
