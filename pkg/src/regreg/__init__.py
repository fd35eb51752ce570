"""Subset-sum instances from regressively regular functions, and their solvers."""

from .errors import (
    InfeasibleSmallRange,
    InvariantViolation,
    MissingDomain,
    NegativeOutOfRange,
    NotRegular,
    NotTLogBounded,
    RegregError,
    TooLarge,
    TrivialZero,
)
from .families import (
    Family,
    FamilySpec,
    FiniteFn,
    Violation,
    check_full_sample,
    check_jump_free_pair,
    check_reflexive,
    field_of,
    jump_free_violations,
    make_fn,
    restricted_domain,
)
from .instances import (
    GammaFn,
    RhoFn,
    StructuredInstance,
    build_deltas,
    build_structured,
    check_tlog_bounded,
    gen_gamma,
    gen_regular_fn,
    gen_rho_tlog,
    tlog_cap,
)
from .ordertype import class_count, enumerate_classes, signature, surjections
from .regularity import (
    BlockPartition,
    GridE,
    RegRegReport,
    VerdictKind,
    check_regressively_regular,
    find_regressively_regular,
    partition_blocks,
    regressive_values,
)
from .solvers import (
    SolveResult,
    Status,
    solve_dp,
    solve_mitm,
    solve_structured,
    verify_witness,
)

__version__ = "0.1.0"
