"""Blow-up time lower bounds for a radial nonlinear-diffusion chemotaxis model.

Thin wrapper over the C++ core; see the package README for the model, the
constant cascade and the CLI.
"""

from ._core import (
    Problem,
    build_cascade,
    compute_exponents,
    compute_pbar,
    default_free_parameters,
    explicit_lower_bound,
    osgood_lower_bound,
    simulate,
    validate_blowup_restrictions,
)

__all__ = [
    "Problem",
    "build_cascade",
    "compute_exponents",
    "compute_pbar",
    "default_free_parameters",
    "explicit_lower_bound",
    "osgood_lower_bound",
    "simulate",
    "validate_blowup_restrictions",
]
