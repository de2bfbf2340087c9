"""Sampling, tail estimates and small-n oracles for L_p^n spheres and balls."""

from ._core import (
    Body,
    BoundEnvelope,
    ExponentFit,
    FitPoint,
    InsufficientDataError,
    OracleResult,
    TailEstimate,
    WindowPolicy,
    big_l_norm,
    bound_envelope,
    clopper_pearson,
    constants,
    constants_version,
    envelope_t_grid,
    estimate_tail,
    exact_small_n,
    fit_exponent,
    geometric_cap,
    inf,
    moment_xq,
    normalizing_constant,
    nu_from_oracle,
    ratio_statistic,
    sample,
    threshold_T,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
