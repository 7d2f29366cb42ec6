"""Wronski systems, real solution lower bounds and factorization counts."""

from ._core import (
    Error,
    builtin_names,
    center_check,
    chain_union_imbalance,
    count_for_target,
    count_real_factorizations,
    emit_report,
    factorization_bounds,
    factorization_table,
    linear_extension_count,
    polytope_info,
    poset_polytope_signature,
    report_from_json,
    run_experiment,
    sample_system,
    sign_imbalance,
    solve_builtin,
    solve_json,
    white_imbalance,
)

__all__ = [
    "Error",
    "builtin_names",
    "center_check",
    "chain_union_imbalance",
    "count_for_target",
    "count_real_factorizations",
    "emit_report",
    "factorization_bounds",
    "factorization_table",
    "linear_extension_count",
    "polytope_info",
    "poset_polytope_signature",
    "report_from_json",
    "run_experiment",
    "sample_system",
    "sign_imbalance",
    "solve_builtin",
    "solve_json",
    "white_imbalance",
]
