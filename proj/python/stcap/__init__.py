"""Secrecy transmission capacity of Poisson wireless networks."""

from ._core import (
    CapacityResult,
    DomainError,
    GuardZoneConfig,
    MonteCarloConfig,
    NetworkParams,
    NumericError,
    OutageConstraints,
    OutageEstimate,
    Protocol,
    WindowTooSmall,
    WynerRates,
    active_density,
    capacity,
    connection_outage,
    coop_capacity,
    coop_min_feasible_sigma,
    coop_positivity,
    coop_rate_e,
    estimate_connection_outage,
    estimate_guardzone_outages,
    estimate_secrecy_outage,
    feasible_sigma_range,
    interference_constant,
    lambert_w0,
    laplace_z,
    noncoop_capacity,
    noncoop_secrecy_outage_ub,
    optimal_lambda_asymptotic,
    optimal_sigma_sparse,
    optimize,
    positivity,
    rate_e_from_epsilon,
    rate_t_from_sigma,
    secrecy_outage_bounds,
)

__all__ = [name for name in dir() if not name.startswith("_")]
