"""Bilevel optimization test problems with analytic derivatives, plus tools to
verify the derivatives, validate the known solutions and run a baseline solver."""

from .core import (
    ALL_SELECTORS,
    DERIVATIVE_SELECTORS,
    Deriv,
    Dimensions,
    EvalSelector,
    Func,
    Point,
    ProblemDefinition,
    evaluate,
    shape_of,
)
from .derivcheck import DerivativeCheckReport, FdConfig, check_problem
from .errors import (
    BilevelError,
    BudgetExhausted,
    DimensionMismatch,
    DomainViolation,
    NoFeasiblePoint,
    NotCheckable,
    NotSmooth,
    ParameterOutOfRange,
    UnknownProblem,
)
from .registry import (
    KnownSolution,
    ProblemRecord,
    instantiate,
    list_problems,
    lookup,
    names,
    record,
    records,
    registry_size,
)
from .solver import MpccModel, SolveConfig, build_mpcc, dump_mpcc, mpcc_residual, solve_nested
from .validation import (
    OracleConfig,
    Tolerances,
    ValidationVerdict,
    kkt_residual,
    lower_level_oracle,
    validate,
)

__all__ = [
    "DerivativeCheckReport",
    "FdConfig",
    "check_problem",
    "MpccModel",
    "SolveConfig",
    "build_mpcc",
    "dump_mpcc",
    "mpcc_residual",
    "solve_nested",
    "ALL_SELECTORS",
    "DERIVATIVE_SELECTORS",
    "Deriv",
    "Dimensions",
    "EvalSelector",
    "Func",
    "Point",
    "ProblemDefinition",
    "evaluate",
    "shape_of",
    "BilevelError",
    "BudgetExhausted",
    "DimensionMismatch",
    "DomainViolation",
    "NoFeasiblePoint",
    "NotCheckable",
    "NotSmooth",
    "ParameterOutOfRange",
    "UnknownProblem",
    "KnownSolution",
    "ProblemRecord",
    "instantiate",
    "list_problems",
    "lookup",
    "names",
    "record",
    "records",
    "registry_size",
    "OracleConfig",
    "Tolerances",
    "ValidationVerdict",
    "kkt_residual",
    "lower_level_oracle",
    "validate",
]
