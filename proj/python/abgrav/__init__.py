"""Electric Aharonov-Bohm phases and their weak-field Schwarzschild analog.

Thin wrapper over the C++ core: closed-form phase predictions plus
config-driven two-arm interferometer runs.
"""

from abgrav._core import (
    Constants,
    compare_routes,
    elevator_phase,
    newtonian_phase,
    proper_time_route_phase,
    redshift_factor,
    run_scenario,
    semi_covariant_phase,
    sweep,
    wrap_to_pi,
)

__all__ = [
    "Constants",
    "compare_routes",
    "elevator_phase",
    "newtonian_phase",
    "proper_time_route_phase",
    "redshift_factor",
    "run_scenario",
    "semi_covariant_phase",
    "sweep",
    "wrap_to_pi",
]
