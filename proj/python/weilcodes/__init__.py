"""Trace codes over quadratic defining sets, with exact enumerators and their closed forms."""

from ._core import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CodeSpec,
    Error,
    classify,
    defining_set,
    encode,
    enumerate,
    gauss_sum,
    griesmer,
    parse_sweep,
    pless_check,
    predict,
    run_cli,
    verify,
    verify_table,
    weil_sum,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "CodeSpec",
    "Error",
    "classify",
    "defining_set",
    "encode",
    "enumerate",
    "gauss_sum",
    "griesmer",
    "parse_sweep",
    "pless_check",
    "predict",
    "run_cli",
    "verify",
    "verify_table",
    "weil_sum",
]
