"""How well each smooth kernel approximates |x|.

The sharp error constant for ``x*tanh(x/c)`` comes from the only positive
root of ``t*(tanh(t)+1) - 1``: the maximum of ``|x| - x*tanh(x/c)`` sits at
``x = c*t_star`` and equals ``err_coeff * c`` with
``err_coeff = t_star*(1 - tanh(t_star)) ~= 0.2785``.  The multiquadric gap
``sqrt(x^2+c^2) - |x|`` is bounded by ``c``.  ``xi`` marks where the second
derivative of the tanh kernel changes sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .kernels import Family, KernelSpec, kernel_eval

__all__ = [
    "ExtremumConstants",
    "AbsErrorRow",
    "solve_extremum_constants",
    "abs_linf_error",
    "rate_rc",
    "faster_convergence_ratio",
    "abs_error_table",
]


@dataclass(frozen=True)
class ExtremumConstants:
    t_star: float      # argmax of |x| - x*tanh(x/c), in units of c
    err_coeff: float   # max error divided by c
    xi: float          # sign change of the tanh kernel's 2nd derivative, in units of c


@dataclass(frozen=True)
class AbsErrorRow:
    n: int
    c: float
    family: Family
    linf_error: float
    rate_rc: float | None  # None for the first c in a sequence


def _bisect_newton(f, df, a, b, width=1e-14, polish=5):
    """Deterministic root finder: bisect to `width`, then Newton polish.

    The bracket [a, b] must straddle a sign change.
    """
    fa = f(a)
    fb = f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa < 0) == (fb < 0):
        raise ValueError(f"no sign change on [{a}, {b}]")
    while b - a > width:
        m = 0.5 * (a + b)
        fm = f(m)
        if fm == 0.0:
            a = b = m
            break
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    x = 0.5 * (a + b)
    for _ in range(polish):
        x = x - f(x) / df(x)
    return x


def solve_extremum_constants() -> ExtremumConstants:
    """Solve for the three kernel constants by bracketed root finding.

    Brackets are fixed analytically: s(t)=t*(tanh t + 1)-1 has s(0)=-1 and
    s(1)>0; u*tanh(u)-1 changes sign on [1, 1.3].
    """
    s = lambda t: t * (np.tanh(t) + 1.0) - 1.0
    ds = lambda t: np.tanh(t) + 1.0 + t / np.cosh(t) ** 2
    t_star = _bisect_newton(s, ds, 0.0, 1.0)

    g = lambda u: u * np.tanh(u) - 1.0
    dg = lambda u: np.tanh(u) + u / np.cosh(u) ** 2
    xi = _bisect_newton(g, dg, 1.0, 1.3)

    return ExtremumConstants(
        t_star=t_star,
        err_coeff=t_star * (1.0 - np.tanh(t_star)),
        xi=xi,
    )


def abs_linf_error(family, c, grid) -> float:
    """Max over `grid` of the kernel-vs-|x| gap, kernel centered at 0."""
    grid = np.asarray(grid, dtype=float)
    if grid.size == 0:
        raise ValueError("grid must be nonempty")
    spec = KernelSpec(Family(family), c)
    return float(np.max(np.abs(kernel_eval(spec, 0.0, grid) - np.abs(grid))))


def rate_rc(errors) -> list:
    """Pairwise convergence rates log(E_i/E_{i-1}) / log(c_i/c_{i-1}).

    `errors` is an ordered sequence of (c, E) with strictly decreasing
    positive c and positive E.  Returns len-1 rates.
    """
    cs = np.array([c for c, _ in errors], dtype=float)
    es = np.array([e for _, e in errors], dtype=float)
    if np.any(cs <= 0) or np.any(np.diff(cs) >= 0):
        raise ValueError("shape parameters must be positive and strictly decreasing")
    if np.any(es <= 0):
        raise ValueError("errors must be positive for log-based rates")
    return list(np.log(es[1:] / es[:-1]) / np.log(cs[1:] / cs[:-1]))


def faster_convergence_ratio(x, c) -> float:
    """Ratio of the tanh-kernel gap to the multiquadric gap at fixed x.

    (x*tanh(x/c) - |x|) / (sqrt(x^2+c^2) - |x|); tends to 0 as c -> 0+,
    i.e. the tanh kernel closes on |x| strictly faster.
    """
    if x == 0:
        raise ValueError("ratio is defined for fixed x != 0")
    if c <= 0:
        raise ValueError("c must be positive")
    num = x * np.tanh(x / c) - abs(x)
    den = np.hypot(x, c) - abs(x)
    return float(num / den)


def abs_error_table(n, c_list, families=(Family.MQ, Family.RTH)) -> list:
    """Error/rate rows for n equispaced points on [-10, 10] inclusive.

    One row per (family, c); rates computed per family down the c sequence
    and absent (None) for the first c.
    """
    grid = np.linspace(-10.0, 10.0, int(n))
    rows = []
    for family in families:
        family = Family(family)
        errs = [abs_linf_error(family, c, grid) for c in c_list]
        rates = [None]
        for i in range(1, len(c_list)):
            rates.append(
                float(np.log(errs[i] / errs[i - 1]) / np.log(c_list[i] / c_list[i - 1]))
            )
        for c, e, r in zip(c_list, errs, rates):
            rows.append(AbsErrorRow(n=int(n), c=float(c), family=family,
                                    linf_error=e, rate_rc=r))
    return rows
