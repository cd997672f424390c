"""Univariate quasi-interpolation with smooth approximants of |x|.

A small numpy library built around two radial kernels -- the multiquadric
sqrt(r^2 + c^2) and the hyperbolic-tangent kernel r*tanh(r/c) -- and the
linear-reproducing quasi-interpolation operator they induce, plus shape
diagnostics and a benchmark harness.
"""

from .absapprox import (
    AbsErrorRow,
    ExtremumConstants,
    abs_error_table,
    abs_linf_error,
    faster_convergence_ratio,
    rate_rc,
    solve_extremum_constants,
)
from .bench import (
    TEST_FUNCTIONS,
    ErrorRecord,
    ExperimentConfig,
    PointwiseSeries,
    RateRow,
    TestFunction,
    emit_csv,
    eval_grid,
    linf_error,
    run_error_sweep,
    run_gibbs_study,
    run_rate_study,
    run_runge_study,
)
from .kernels import (
    Family,
    KernelSpec,
    NonDifferentiableError,
    UnsupportedKernelError,
    kernel_d1,
    kernel_d2,
    kernel_eval,
)
from .quasi import (
    DividedDifferences,
    ExtrapolationWarning,
    GridOrderError,
    GridSizeError,
    NodeGrid,
    NonFiniteDataError,
    OutOfDomainError,
    QuasiInterpolant,
    SampleSet,
    build,
)
from .shape import (
    InertiaResult,
    ShapeReport,
    SignClass,
    curvature,
    gram_inertia,
    shape_report,
)

__version__ = "0.1.0"
