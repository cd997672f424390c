import numpy as np
import pytest

from rbfqi import (
    Family,
    KernelSpec,
    NonDifferentiableError,
    UnsupportedKernelError,
    kernel_d1,
    kernel_d2,
    kernel_eval,
)

RTH = lambda c: KernelSpec(Family.RTH, c)
MQ = lambda c: KernelSpec(Family.MQ, c)
ABS = KernelSpec(Family.ABS)

# frozen 50-digit oracle values (x * tanh(x/c) etc. via mpmath)
RTH_AT_20_OVER_198 = 0.077353918551163415239  # c=0.1, x=20/198
RTH_D1_AT_1 = 1.1815684975697909575           # c=1: tanh(1)+sech^2(1)
XI = 1.199678640


class TestConstruction:
    @pytest.mark.parametrize("family", [Family.MQ, Family.RTH])
    @pytest.mark.parametrize("c", [0.0, -1.0, float("nan"), None])
    def test_bad_shape_parameter_rejected(self, family, c):
        with pytest.raises(ValueError):
            KernelSpec(family, c)

    def test_abs_needs_no_shape_parameter(self):
        KernelSpec(Family.ABS)

    def test_string_family_accepted(self):
        assert KernelSpec("mq", 0.5).family is Family.MQ


class TestEval:
    def test_rth_vanishes_at_center(self):
        assert kernel_eval(RTH(0.1), 0.0, 0.0) == 0.0

    def test_mq_equals_c_at_center(self):
        assert kernel_eval(MQ(0.1), 0.0, 0.0) == pytest.approx(0.1)

    def test_rth_against_extended_precision_oracle(self):
        x = 20.0 / 198.0
        assert kernel_eval(RTH(0.1), 0.0, x) == pytest.approx(
            RTH_AT_20_OVER_198, rel=1e-14
        )

    def test_abs_family(self):
        assert kernel_eval(ABS, 1.0, -2.0) == 3.0

    def test_symmetry_about_center(self):
        x = np.linspace(0.01, 50, 500)
        for spec in (RTH(0.3), MQ(0.3), ABS):
            np.testing.assert_array_equal(
                kernel_eval(spec, 0.0, x), kernel_eval(spec, 0.0, -x)
            )

    def test_no_overflow_at_extreme_arguments(self):
        # tanh saturates; sech^2 underflows to 0; nothing overflows
        x = np.array([1e8, 1e150, 1e308])
        with np.errstate(all="raise"):
            v = kernel_eval(RTH(1e-3), 0.0, x)
            d1 = kernel_d1(RTH(1e-3), 0.0, x)
            d2 = kernel_d2(RTH(1e-3), 0.0, x)
        np.testing.assert_allclose(v, x, rtol=1e-15)
        np.testing.assert_allclose(d1, 1.0, rtol=0)
        np.testing.assert_array_equal(d2, 0.0)


class TestFirstDerivative:
    def test_rth_odd_so_zero_at_center(self):
        for c in (0.01, 1.0, 7.3):
            assert kernel_d1(RTH(c), 0.0, 0.0) == 0.0

    def test_mq_limit_is_one(self):
        assert abs(kernel_d1(MQ(1.0), 0.0, 1e3) - 1.0) < 1e-5

    def test_rth_closed_form_at_one(self):
        assert kernel_d1(RTH(1.0), 0.0, 1.0) == pytest.approx(RTH_D1_AT_1, rel=1e-14)

    def test_rth_bounded(self):
        x = np.linspace(-200, 200, 20001)
        for c in (0.01, 0.1, 1.0):
            assert np.max(np.abs(kernel_d1(RTH(c), 0.0, x))) <= 1.5

    def test_abs_center_raises(self):
        with pytest.raises(NonDifferentiableError):
            kernel_d1(ABS, 0.5, 0.5)


class TestSecondDerivative:
    def test_rth_zero_at_c_times_xi(self):
        assert abs(kernel_d2(RTH(1.0), 0.0, XI)) < 1e-8

    def test_mq_at_center(self):
        assert kernel_d2(MQ(1.0), 0.0, 0.0) == pytest.approx(1.0)

    def test_rth_at_center(self):
        assert kernel_d2(RTH(1.0), 0.0, 0.0) == pytest.approx(2.0)

    def test_mq_positive_everywhere(self):
        x = np.linspace(-100, 100, 10001)
        assert np.all(kernel_d2(MQ(0.05), 0.0, x) > 0)

    @pytest.mark.parametrize("c", [0.01, 0.1, 1.0])
    def test_rth_sign_change_at_c_xi(self, c):
        inner = np.linspace(-c * XI * (1 - 1e-6), c * XI * (1 - 1e-6), 101)
        assert np.all(kernel_d2(RTH(c), 0.0, inner) > 0)
        outer = np.concatenate(
            [np.linspace(c * XI * (1 + 1e-6), 10 * c, 100),
             -np.linspace(c * XI * (1 + 1e-6), 10 * c, 100)]
        )
        assert np.all(kernel_d2(RTH(c), 0.0, outer) < 0)

    def test_abs_unsupported(self):
        with pytest.raises(UnsupportedKernelError):
            kernel_d2(ABS, 0.0, 1.0)


def test_rth_pinched_between_zero_and_abs():
    rng = np.random.default_rng(7)
    x = rng.uniform(-100, 100, 100_000)
    c = rng.uniform(1e-6, 10, 100_000)
    v = x * np.tanh(x / c)
    assert np.all(v >= 0)
    assert np.all(v <= np.abs(x))


def test_mq_dominates_abs():
    rng = np.random.default_rng(8)
    x = rng.uniform(-100, 100, 100_000)
    c = rng.uniform(1e-6, 10, 100_000)
    assert np.all(np.abs(x) <= np.hypot(x, c))


@pytest.mark.parametrize("spec", [RTH(0.07), RTH(1.3), MQ(0.07), MQ(1.3)])
def test_derivatives_match_finite_differences(spec):
    rng = np.random.default_rng(11)
    x = rng.uniform(-5, 5, 200)
    step = 1e-5 * np.maximum(1.0, np.abs(x))
    fd1 = (kernel_eval(spec, 0.0, x + step) - kernel_eval(spec, 0.0, x - step)) / (
        2 * step
    )
    d1 = kernel_d1(spec, 0.0, x)
    np.testing.assert_allclose(d1, fd1, rtol=1e-6, atol=1e-8)

    # larger step for the second difference: at step 1e-5 the round-off
    # floor eps*|phi|/step^2 (~5e-6) swamps the truncation error
    step2 = 1e-4 * np.maximum(1.0, np.abs(x))
    fd2 = (
        kernel_eval(spec, 0.0, x + step2)
        - 2 * kernel_eval(spec, 0.0, x)
        + kernel_eval(spec, 0.0, x - step2)
    ) / step2**2
    np.testing.assert_allclose(kernel_d2(spec, 0.0, x), fd2, rtol=1e-4, atol=1e-5)
