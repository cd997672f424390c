import math

import numpy as np
import pytest

from rbfqi import (
    Family,
    abs_error_table,
    abs_linf_error,
    faster_convergence_ratio,
    rate_rc,
    solve_extremum_constants,
)

# reference table: n=100 equispaced points on [-10, 10] inclusive
TABLE_N100 = {
    # c: (mq_error, rth_error)
    0.1:     (4.1127e-02, 2.3656e-02),
    0.05:    (1.1698e-02, 3.4922e-03),
    0.025:   (3.0478e-03, 6.2490e-05),
    0.0125:  (7.7050e-04, 1.9342e-08),
    0.00625: (1.9317e-04, 1.8457e-15),
}
MQ_RATES_N100 = [1.813823944, 1.940421754, 1.983901373, 1.995923901]
RTH_RATES_N100 = [2.759998057, 5.804367034, 11.65767264]  # rows with E >= 1e-10


def test_constants_match_reference():
    k = solve_extremum_constants()
    assert k.t_star == pytest.approx(0.6392322714, abs=1e-9)
    assert k.err_coeff == pytest.approx(0.2784645427, abs=1e-9)
    assert k.xi == pytest.approx(1.199678640, abs=1e-8)


def test_constants_residuals():
    k = solve_extremum_constants()
    assert abs(k.t_star * (np.tanh(k.t_star) + 1) - 1) <= 1e-12
    assert abs(k.xi * np.tanh(k.xi) - 1) <= 1e-12
    assert k.err_coeff == k.t_star * (1 - np.tanh(k.t_star))


class TestAbsLinfError:
    def test_table_values_n100(self):
        grid = np.linspace(-10, 10, 100)
        for c, (mq, rth) in TABLE_N100.items():
            got_mq = abs_linf_error(Family.MQ, c, grid)
            got_rth = abs_linf_error(Family.RTH, c, grid)
            assert got_mq == pytest.approx(mq, rel=0.01)
            if rth >= 1e-13:
                assert got_rth == pytest.approx(rth, rel=0.01)
            else:
                assert got_rth <= 1e-14

    def test_exact_at_origin(self):
        assert abs_linf_error(Family.RTH, 0.3, [0.0]) == 0.0

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            abs_linf_error(Family.RTH, 0.1, [])

    def test_bounded_by_sharp_constants(self):
        grid = np.linspace(-10, 10, 400)
        for c in (0.3, 0.05, 0.004):
            assert abs_linf_error(Family.RTH, c, grid) <= 0.2784645428 * c
            assert abs_linf_error(Family.MQ, c, grid) <= c


class TestRateRc:
    def test_reference_rates(self):
        grid = np.linspace(-10, 10, 100)
        cs = [0.1, 0.05, 0.025, 0.0125, 0.00625]
        errs = [(c, abs_linf_error(Family.MQ, c, grid)) for c in cs]
        rates = rate_rc(errs)
        # the reference rates are printed from slightly rounded errors;
        # full-precision recomputation agrees to ~1e-4
        np.testing.assert_allclose(rates, MQ_RATES_N100, atol=1e-3)

        errs = [(c, abs_linf_error(Family.RTH, c, grid)) for c in cs[:4]]
        rates = rate_rc(errs)
        np.testing.assert_allclose(rates, RTH_RATES_N100, atol=1e-3)

    def test_halving_gives_rate_one(self):
        assert rate_rc([(0.2, 1.0), (0.1, 0.5)]) == [pytest.approx(1.0)]

    def test_nonpositive_error_rejected(self):
        with pytest.raises(ValueError):
            rate_rc([(0.2, 1.0), (0.1, 0.0)])

    def test_increasing_c_rejected(self):
        with pytest.raises(ValueError):
            rate_rc([(0.1, 1.0), (0.2, 0.5)])


class TestFasterConvergenceRatio:
    def test_tiny_at_small_c(self):
        # numerator underflows exponentially; denominator ~ c^2/2
        assert abs(faster_convergence_ratio(1.0, 1e-3)) < 1e-100

    def test_value_at_half(self):
        # frozen extended-precision oracle
        assert faster_convergence_ratio(1.0, 0.5) == pytest.approx(
            -0.30476323222801502126, rel=1e-13
        )
        assert -1 < faster_convergence_ratio(1.0, 0.5) < 0

    def test_magnitude_decreases_with_c(self):
        # c chosen large enough that 1 - tanh(x/c) is representable; at
        # c <= 0.05 the numerator underflows to exactly 0 in doubles.
        mags = [abs(faster_convergence_ratio(1.0, c)) for c in (0.5, 0.4, 0.3)]
        assert mags[0] > mags[1] > mags[2]

    def test_underflows_cleanly_for_tiny_c(self):
        # tanh(20) rounds to 1.0, so the numerator vanishes; the ratio
        # underflows to 0 rather than producing garbage.
        assert faster_convergence_ratio(1.0, 0.05) == 0.0

    def test_degenerate_inputs(self):
        with pytest.raises(ValueError):
            faster_convergence_ratio(0.0, 0.1)
        with pytest.raises(ValueError):
            faster_convergence_ratio(1.0, -0.1)


def test_sharp_bound_random_sampling():
    rng = np.random.default_rng(42)
    x = rng.uniform(-100, 100, 100_000)
    c = rng.uniform(1e-6, 10, 100_000)
    gap = np.abs(x) - x * np.tanh(x / c)
    assert np.all(gap >= 0)
    assert np.all(gap <= 0.2784645428 * c)


def test_rth_gap_dominated_by_mq_gap():
    rng = np.random.default_rng(43)
    x = rng.uniform(-100, 100, 100_000)
    c = rng.uniform(1e-6, 10, 100_000)
    rth_gap = np.abs(x) - x * np.tanh(x / c)
    mq_gap = np.hypot(x, c) - np.abs(x)
    assert np.all(rth_gap <= mq_gap)


def test_maximizer_location():
    k = solve_extremum_constants()
    for c in (0.05, 0.7):
        x = np.linspace(0, 3 * c, 200_001)
        gap = x - x * np.tanh(x / c)
        xmax = x[np.argmax(gap)]
        assert abs(xmax - c * k.t_star) <= x[1] - x[0]


def test_abs_error_table_structure():
    rows = abs_error_table(100, [0.1, 0.05], families=(Family.MQ, Family.RTH))
    assert len(rows) == 4
    assert rows[0].rate_rc is None and rows[2].rate_rc is None
    assert rows[1].rate_rc is not None
    assert {r.family for r in rows} == {Family.MQ, Family.RTH}
    # rate recomputable from the stored errors
    expect = math.log(rows[1].linf_error / rows[0].linf_error) / math.log(0.5)
    assert rows[1].rate_rc == pytest.approx(expect)
