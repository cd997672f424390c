"""Univariate radial kernels and their analytic derivatives.

Three kernel families are supported, all centered at an abscissa ``x_j``:

* ``MQ``   -- multiquadric  sqrt((x-x_j)^2 + c^2)
* ``RTH``  -- hyperbolic-tangent kernel  (x-x_j) * tanh((x-x_j)/c)
* ``ABS``  -- the c->0 limit kernel  |x-x_j|

``c`` is the shape parameter; both smooth families tend to ``ABS`` as
``c -> 0``.  All evaluators are pure and accept scalars or numpy arrays.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Family",
    "KernelSpec",
    "UnsupportedKernelError",
    "NonDifferentiableError",
    "kernel_eval",
    "kernel_d1",
    "kernel_d2",
]

# Beyond this argument tanh is +-1 to double precision and sech^2 underflows;
# clamping avoids overflow in cosh for large arguments.
_SATURATION = 20.0


class Family(enum.Enum):
    MQ = "mq"
    RTH = "rth"
    ABS = "abs"


class UnsupportedKernelError(ValueError):
    """Requested operation is undefined for this kernel family."""


class NonDifferentiableError(ValueError):
    """Derivative requested at a point where the kernel has a corner."""


@dataclass(frozen=True)
class KernelSpec:
    """Kernel family plus shape parameter.

    ``c`` must be a positive finite real for MQ and RTH; it is ignored
    (and may be omitted) for ABS.
    """

    family: Family
    c: float | None = None

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family(self.family))
        if self.family is Family.ABS:
            return
        if self.c is None or not np.isfinite(self.c) or self.c <= 0:
            raise ValueError(
                f"shape parameter must be a positive finite real, got {self.c!r}"
            )
        object.__setattr__(self, "c", float(self.c))


def _scaled(d, c):
    """Saturated scaled argument (x - x_j)/c, clamped to [-20, 20].

    Clamping before the division keeps huge ``|d|`` from overflowing
    ``d/c`` and keeps products like ``u * sech^2(u)`` finite; tanh is
    already +-1 to double precision at the clamp boundary.
    """
    bound = _SATURATION * c
    return np.clip(d, -bound, bound) / c


def _tanh_sat(u):
    """tanh with explicit saturation to +-1 for |u| >= 20."""
    u = np.asarray(u, dtype=float)
    return np.where(np.abs(u) >= _SATURATION, np.sign(u), np.tanh(u))


def _sech2(u):
    """sech^2 with explicit underflow to 0 for |u| >= 20."""
    u = np.asarray(u, dtype=float)
    safe = np.minimum(np.abs(u), _SATURATION)
    return np.where(np.abs(u) >= _SATURATION, 0.0, 1.0 / np.cosh(safe) ** 2)


def kernel_eval(spec: KernelSpec, center, x):
    """Evaluate the kernel centered at ``center`` at point(s) ``x``."""
    d = np.asarray(x, dtype=float) - center
    if spec.family is Family.MQ:
        out = np.hypot(d, spec.c)
    elif spec.family is Family.RTH:
        out = d * _tanh_sat(_scaled(d, spec.c))
    else:
        out = np.abs(d)
    return out if out.ndim else float(out)


def kernel_d1(spec: KernelSpec, center, x):
    """Analytic first derivative with respect to ``x``.

    For ABS the derivative is sign(x - center); it does not exist at the
    center itself.
    """
    d = np.asarray(x, dtype=float) - center
    if spec.family is Family.MQ:
        out = d / np.hypot(d, spec.c)
    elif spec.family is Family.RTH:
        u = _scaled(d, spec.c)
        out = _tanh_sat(u) + u * _sech2(u)
    else:
        if np.any(d == 0):
            raise NonDifferentiableError(
                "ABS kernel is not differentiable at its center"
            )
        out = np.sign(d)
    return out if out.ndim else float(out)


def kernel_d2(spec: KernelSpec, center, x):
    """Analytic second derivative with respect to ``x``.

    MQ:  c^2 / (c^2 + (x-x_j)^2)^(3/2), positive everywhere.
    RTH: (2/c) sech^2(u) (1 - u tanh(u)) with u=(x-x_j)/c; nonnegative
    exactly on |x - x_j| <= c*xi where xi solves u*tanh(u)=1.
    """
    if spec.family is Family.ABS:
        raise UnsupportedKernelError("ABS kernel has no second derivative")
    d = np.asarray(x, dtype=float) - center
    if spec.family is Family.MQ:
        q = np.hypot(d, spec.c)
        out = spec.c**2 / q**3
    else:
        u = _scaled(d, spec.c)
        out = (2.0 / spec.c) * _sech2(u) * (1.0 - u * _tanh_sat(u))
    return out if out.ndim else float(out)
