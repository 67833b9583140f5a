"""Integrated quantiles, tail risk measures, and gap functionals."""

from ._intquant import (
    DataError,
    IntquantError,
    Model,
    MomentError,
    delta,
    distortion,
    distortion_interval,
    es,
    es_interval,
    gamma,
    gamma_star,
    rvar,
    sigma2,
)

__all__ = [
    "DataError",
    "IntquantError",
    "Model",
    "MomentError",
    "delta",
    "distortion",
    "distortion_interval",
    "es",
    "es_interval",
    "gamma",
    "gamma_star",
    "rvar",
    "sigma2",
]
