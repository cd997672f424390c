"""Shape-preservation and definiteness diagnostics.

The operator inherits monotonicity/convexity from the data for small
enough shape parameter; that guarantee is asymptotic, so these routines
report empirical evidence (derivative ranges, curvature) rather than
asserting the property.  The kernel-matrix inertia check verifies that
the tanh kernel is conditionally negative definite of order 1: its Gram
matrix on distinct nodes has exactly one positive eigenvalue.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .kernels import Family, KernelSpec, UnsupportedKernelError, kernel_eval
from .quasi import DividedDifferences, QuasiInterpolant

__all__ = [
    "SignClass",
    "ShapeReport",
    "InertiaResult",
    "shape_report",
    "curvature",
    "gram_inertia",
]

# Exact nonnegativity fails in floating point; derivative minima are
# classified against this slack.
_SIGN_TOL = 1e-8


class SignClass(enum.Enum):
    NONNEG = "nonneg"
    NONPOS = "nonpos"
    ZERO = "zero"
    MIXED = "mixed"


def _classify(values, zero_tol, allow_zero=False):
    values = np.asarray(values)
    scale = max(1.0, float(np.max(np.abs(values), initial=0.0)))
    lo = float(np.min(values))
    hi = float(np.max(values))
    tol = zero_tol * scale
    if allow_zero and abs(lo) <= tol and abs(hi) <= tol:
        return SignClass.ZERO
    if lo >= -tol:
        return SignClass.NONNEG
    if hi <= tol:
        return SignClass.NONPOS
    return SignClass.MIXED


@dataclass(frozen=True)
class ShapeReport:
    data_monotone_sign: SignClass
    min_d1: float
    max_d1: float
    data_convex_sign: SignClass
    min_d2_at_nodes: float
    min_d2_on_grid: float
    sample_count: int


@dataclass(frozen=True)
class InertiaResult:
    n_positive: int
    n_negative: int
    n_zero: int


def shape_report(q: QuasiInterpolant, sample_count: int) -> ShapeReport:
    """Classify the data's shape and record the operator's derivative ranges.

    Derivatives are sampled equispaced on (x_0, x_n), pulled in from the
    endpoints by h*1e-3 because the |.| boundary pieces give only one-sided
    derivatives there; the second derivative is additionally evaluated at
    the interior nodes, where its sign tracking is most reliable.
    """
    if q.kernel.family is Family.ABS:
        raise UnsupportedKernelError("shape diagnostics require a smooth kernel")
    if sample_count < 2:
        raise ValueError("sample_count must be >= 2")
    dd = DividedDifferences.of(q.samples)
    x = q.samples.grid.nodes
    inset = q.samples.grid.h * 1e-3
    grid = np.linspace(x[0] + inset, x[-1] - inset, int(sample_count))

    d1 = q.eval_d1(grid)
    d2 = q.eval_d2(grid)
    d2_nodes = q.eval_d2(x[1:-1])

    return ShapeReport(
        data_monotone_sign=_classify(dd.first, _SIGN_TOL),
        min_d1=float(np.min(d1)),
        max_d1=float(np.max(d1)),
        data_convex_sign=_classify(dd.second, _SIGN_TOL, allow_zero=True),
        min_d2_at_nodes=float(np.min(d2_nodes)),
        min_d2_on_grid=float(np.min(d2)),
        sample_count=int(sample_count),
    )


def curvature(q: QuasiInterpolant, x):
    """Plane-curve curvature |y''| / (1 + y'^2)^(3/2) of the operator."""
    d1 = q.eval_d1(x)
    d2 = q.eval_d2(x)
    return np.abs(d2) / (1.0 + np.asarray(d1) ** 2) ** 1.5


def gram_inertia(nodes, kernel: KernelSpec, zero_rtol=1e-10) -> InertiaResult:
    """Inertia (signature) of the kernel Gram matrix on distinct nodes.

    A_ij = phi(|x_i - x_j|) with phi centered so the tanh kernel gives a
    zero diagonal.  Only signs are needed, so the matrix is reduced by a
    symmetric-indefinite (Bunch-Kaufman) factorization and the inertia is
    read off the 1x1/2x2 pivot blocks; a full eigensolve would misreport
    tiny-but-genuine eigenvalues as zero on ill-conditioned matrices.
    Block eigenvalues with |lambda| <= zero_rtol * max|A| count as zero.
    For the tanh kernel the expected result is one positive and n-1
    negative eigenvalues on any set of n >= 2 distinct nodes.
    """
    nodes = np.asarray(nodes, dtype=float)
    if nodes.ndim != 1 or nodes.size < 2:
        raise ValueError("need at least 2 nodes")
    if np.unique(nodes).size != nodes.size:
        raise ValueError("nodes must be distinct")
    a = kernel_eval(kernel, nodes[None, :], nodes[:, None])
    _, d, _ = scipy.linalg.ldl(a)
    tol = zero_rtol * float(np.max(np.abs(a)))
    n = nodes.size
    n_pos = n_neg = n_zero = 0
    i = 0
    while i < n:
        if i + 1 < n and d[i + 1, i] != 0.0:
            block_eigs = np.linalg.eigvalsh(d[i : i + 2, i : i + 2])
            i += 2
        else:
            block_eigs = (d[i, i],)
            i += 1
        for lam in block_eigs:
            if abs(lam) <= tol:
                n_zero += 1
            elif lam > 0:
                n_pos += 1
            else:
                n_neg += 1
    return InertiaResult(n_positive=n_pos, n_negative=n_neg, n_zero=n_zero)
