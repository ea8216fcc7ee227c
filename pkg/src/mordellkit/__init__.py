"""Numerical verification of self-reciprocal Fourier kernels, Mordell-type
integrals and related theta, elliptic and lattice series."""

__version__ = "0.1.0"

from .errors import ConstraintViolation, DomainError, InvalidDecay, MordellKitError, NonConvergence
from .identities import evaluate_side, fresnel, list_identities, phi, psi, verify
from .quad import Integrand1D, Integrand2D, QuadResult, integrate_quadrant, integrate_semi_infinite
from .series import SeriesResult, SeriesTerm
from .specfun import kernel
from .transforms import TransformKind, fourier_1d, fourier_2d, self_reciprocity_residual

__all__ = [
    "__version__",
    "ConstraintViolation", "DomainError", "InvalidDecay", "MordellKitError", "NonConvergence",
    "evaluate_side", "fresnel", "list_identities", "phi", "psi", "verify",
    "Integrand1D", "Integrand2D", "QuadResult", "integrate_quadrant", "integrate_semi_infinite",
    "SeriesResult", "SeriesTerm", "kernel",
    "TransformKind", "fourier_1d", "fourier_2d", "self_reciprocity_residual",
]
