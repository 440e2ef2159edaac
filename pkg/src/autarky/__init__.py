"""Maximal autarkies and lean kernels of CNF clause-sets.

An autarky is a partial assignment that satisfies every clause it
touches; applying it never changes satisfiability.  This package
computes maximal autarkies (and thereby lean kernels) with a handful of
SAT-oracle algorithms over an embedded CDCL solver, plus an exhaustive
reference implementation for verification.
"""

from .algorithms import (
    AlgorithmResult,
    InternalInvariantError,
    SchemeInvariantError,
    SteeringRangeError,
    algo_a0,
    algo_a01,
    algo_a1,
    algo_abs,
    scheme_s01,
    sqrt_partition,
)
from .adversarial import AdversarialOracle
from .brute import (
    DEFAULT_LIMIT,
    AutarkyCatalog,
    SizeExceededError,
    enumerate_autarkies,
    maximal_autarky_bf,
)
from .dimacs import DimacsError, parse_dimacs, serialize_dimacs
from .engine import (
    InternalOracle,
    OracleAnswer,
    RunStats,
    Solver,
    solve_core,
    solve_decision,
    solve_full,
    solve_sat,
)
from .formula import (
    BOT,
    EMPTY,
    TOP,
    Clause,
    ClauseSet,
    ContractViolationError,
    PartialAssignment,
    TautologyError,
    apply,
    compose_autarkies,
    extend_quasi_maximal,
    is_autarky,
    restrict,
    satisfies,
)
from .generators import FAMILIES, gen_family, mixed, random_3cnf, units, units_pairs
from .translate import (
    TranslatedFormula,
    VarMap,
    encode_at_least,
    lift_partial,
    lift_total,
    project,
    saturate,
    translate,
)

__version__ = "0.1.0"
