"""Exact error analysis of floating-point powers and products."""

from rnpow._rnpow import (
    build_sequence,
    bounds,
    exhaustive_max_error,
    fp_mul,
    n_max,
    naive_power,
    round_nearest,
    run_cli,
    spot_error,
    verify,
)

__all__ = [
    "build_sequence",
    "bounds",
    "exhaustive_max_error",
    "fp_mul",
    "n_max",
    "naive_power",
    "round_nearest",
    "run_cli",
    "spot_error",
    "verify",
]
