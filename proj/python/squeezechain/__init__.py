"""Exact spin-squeezing dynamics of the transverse-field XY chain.

Thin wrapper around the C++ core; see the project README for the CLI and the
full C++ API.
"""

from ._squeezechain import (
    InvalidParameterError,
    SqueezechainError,
    __version__,
    average_sweep,
    bogoliubov_angle,
    dispersion,
    ground_state_sweep,
    long_time_average,
    max_group_velocity,
    momentum_grid,
    oracle_max_mismatch,
    pfaffian,
    quench_trajectory,
    revival_scan,
)

__all__ = [
    "InvalidParameterError",
    "SqueezechainError",
    "__version__",
    "average_sweep",
    "bogoliubov_angle",
    "dispersion",
    "ground_state_sweep",
    "long_time_average",
    "max_group_velocity",
    "momentum_grid",
    "oracle_max_mismatch",
    "pfaffian",
    "quench_trajectory",
    "revival_scan",
]
