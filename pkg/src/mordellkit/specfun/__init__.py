"""Hyperbolic kernel catalog, elliptic integrals and order-zero Bessel functions."""

from .bessel import BesselValue, bessel_J0, bessel_K0, bessel_K0_complex, bessel_Y0, k0_imaginary
from .elliptic import (
    EllipticValues,
    agm,
    dn_quarter_check,
    elliptic_E,
    elliptic_K,
    modulus_from_ratio,
    series_K_check,
)
from .kernels import (
    CATALOG,
    SELF_RECIPROCAL_1D,
    Decay,
    KernelDescriptor,
    KernelSpec,
    kernel,
    kernel_eval_1d,
    kernel_eval_2d,
)

__all__ = [
    "BesselValue", "bessel_J0", "bessel_K0", "bessel_K0_complex", "bessel_Y0", "k0_imaginary",
    "EllipticValues", "agm", "dn_quarter_check", "elliptic_E", "elliptic_K",
    "modulus_from_ratio", "series_K_check",
    "CATALOG", "SELF_RECIPROCAL_1D", "Decay", "KernelDescriptor", "KernelSpec",
    "kernel", "kernel_eval_1d", "kernel_eval_2d",
]
