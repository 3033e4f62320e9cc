"""Half-line delta-limit numerics: resonances, Robin parameters, resolvent kernels."""

from ._core import (
    DeltalimError,
    Kernel,
    Potential,
    ResonanceHit,
    airy,
    alpha_linear,
    classify_3d,
    classify_scaling,
    estimate_alpha,
    find_resonances,
    kernel_dirichlet,
    kernel_robin,
    kernel_scaled,
    linear_resonances,
    locate_resonance,
    psi_linear,
    robin_alpha,
    shoot_residual,
    upsilon_linear_residual,
)

__all__ = [
    "DeltalimError",
    "Kernel",
    "Potential",
    "ResonanceHit",
    "airy",
    "alpha_linear",
    "classify_3d",
    "classify_scaling",
    "estimate_alpha",
    "find_resonances",
    "kernel_dirichlet",
    "kernel_robin",
    "kernel_scaled",
    "linear_resonances",
    "locate_resonance",
    "psi_linear",
    "robin_alpha",
    "shoot_residual",
    "upsilon_linear_residual",
]
