"""Riemann Xi kernels, their approximating families, transforms and zeros."""

from ._core import (
    DomainError,
    NumericalError,
    ParameterError,
    PreconditionError,
    bessel_k,
    kernel,
    params,
    phi,
    rel_l1_diff,
    roots_in_unit_disk,
    theta,
    xi,
    zeros,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "ParameterError",
    "PreconditionError",
    "bessel_k",
    "kernel",
    "params",
    "phi",
    "rel_l1_diff",
    "roots_in_unit_disk",
    "theta",
    "xi",
    "zeros",
]
