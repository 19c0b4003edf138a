import math

import numpy as np
import pytest

from quadbound.delay_ode import (
    LambdaGrid,
    QIntSpec,
    build_lambda_grid,
    delay_residual,
    grid_to_csv,
    laplace_check,
    q_derivative,
    qint_eval,
    qint_oracle,
)
from quadbound.errors import DomainError, ParameterError
from quadbound.specfun import EULER_GAMMA, eval_special


class TestBuild:
    def test_boundary_segment_is_exact(self, lambda_grid_k2):
        grid = lambda_grid_k2
        n = grid.steps_per_unit
        v = grid.step * np.arange(n + 1)
        dev = np.max(np.abs(grid.values[: n + 1] - grid.boundary_formula(v)))
        assert dev <= 1e-12

    def test_lambda_one_matches_closed_form(self, lambda_grid_k2):
        # At kappa = 2 the boundary is e^(2 gamma) v, so lambda(1) = e^(2 gamma).
        got = lambda_grid_k2.values[lambda_grid_k2.steps_per_unit]
        assert got == pytest.approx(math.exp(2.0 * EULER_GAMMA), rel=1e-12)

    def test_lambda_vanishes_at_zero(self, lambda_grid_k2):
        assert lambda_grid_k2.values[0] == 0.0

    def test_value_for_nonpositive_v(self, lambda_grid_k2):
        assert lambda_grid_k2.value(-3.0) == 0.0
        assert lambda_grid_k2.value(0.0) == 0.0

    def test_value_interpolates(self, lambda_grid_k2):
        grid = lambda_grid_k2
        assert grid.value(0.5) == pytest.approx(float(grid.boundary_formula(0.5)), rel=1e-12)
        i = 5 * grid.steps_per_unit + 7
        assert grid.value(grid.step * i) == grid.values[i]

    def test_value_beyond_range(self, lambda_grid_k2):
        with pytest.raises(DomainError):
            lambda_grid_k2.value(40.0)

    @pytest.mark.parametrize("kappa", [1.5, 2.0, 3.0])
    def test_nonnegative(self, kappa, lambda_grid_k2):
        grid = lambda_grid_k2 if kappa == 2.0 else build_lambda_grid(kappa, 40, 2.0**-10)
        assert float(grid.values.min()) >= -1e-12

    def test_continuity_at_integer_nodes(self, lambda_grid_k2):
        # Cubic extrapolation from the last four nodes left of each integer
        # must land on the grid value at the integer.
        grid = lambda_grid_k2
        n = grid.steps_per_unit
        w = np.array([-1.0, 4.0, -6.0, 4.0])
        for m in range(2, grid.v_max + 1):
            i = m * n
            left = grid.values[i - 4 : i]
            assert abs(float(w @ left) - grid.values[i]) < 1e-9

    def test_parameter_validation(self):
        with pytest.raises(ParameterError):
            build_lambda_grid(1.0, 4, 2.0**-8)
        with pytest.raises(ParameterError):
            build_lambda_grid(6.0, 4, 2.0**-8)
        with pytest.raises(ParameterError):
            build_lambda_grid(2.0, 65, 2.0**-8)
        with pytest.raises(ParameterError):
            build_lambda_grid(2.0, 4, 0.001)
        with pytest.raises(ParameterError):
            build_lambda_grid(2.0, 4, 2.0**-7)

    def test_csv_shape(self):
        grid = build_lambda_grid(2.0, 2, 2.0**-8)
        lines = grid_to_csv(grid).splitlines()
        assert lines[0] == "v,lambda"
        assert len(lines) == 2 + 2 * 256
        assert lines[1] == "0,0"


class TestDelayOde:
    def test_residual_small(self, lambda_grid_k2):
        assert delay_residual(lambda_grid_k2) <= 1e-6

    def test_residual_small_kappa3(self):
        grid = build_lambda_grid(3.0, 8, 2.0**-10)
        assert delay_residual(grid) <= 1e-6


class TestLaplaceIdentity:
    def test_rhs_value_at_t1(self, lambda_grid_k2):
        # rhs = e^(2 Ein(1)) with Ein(1) = 0.79659959... from the series.
        check = laplace_check(lambda_grid_k2, 1.0)
        assert check.rhs == pytest.approx(math.exp(2.0 * eval_special("ein", 1.0)), rel=1e-14)
        assert check.rhs == pytest.approx(4.919462116406713, abs=1e-9)

    def test_rhs_value_at_t2(self, lambda_grid_k2):
        check = laplace_check(lambda_grid_k2, 2.0)
        want = 2.0**-4 * math.exp(2.0 * eval_special("ein", 2.0))
        assert check.rhs == pytest.approx(want, rel=1e-14)

    @pytest.mark.parametrize("t", [1.0, 2.0, 4.0])
    def test_defect_small(self, t, lambda_grid_k2):
        check = laplace_check(lambda_grid_k2, t)
        assert check.defect <= 1e-6 * (1.0 + check.rhs)

    def test_defect_decreases_with_refinement(self, lambda_grid_k2):
        fine = build_lambda_grid(2.0, 40, 2.0**-11)
        assert laplace_check(fine, 2.0).defect < laplace_check(lambda_grid_k2, 2.0).defect

    def test_small_t_rejected(self, lambda_grid_k2):
        with pytest.raises(DomainError):
            laplace_check(lambda_grid_k2, 0.5)


class TestQDerivative:
    SPEC = QIntSpec(kappa=2.0, u=1.0, a=1.0, b=3.0)

    def test_fourth_is_nonnegative(self, lambda_grid_k2):
        for t in (1.0, 1.5, 2.0, 3.0):
            assert q_derivative(self.SPEC, 4, t, lambda_grid_k2) >= 0.0

    def test_fifth_is_nonpositive(self, lambda_grid_k2):
        for t in (1.0, 2.0, 3.0):
            assert q_derivative(self.SPEC, 5, t, lambda_grid_k2) <= 0.0

    def test_fourth_nonincreasing(self, lambda_grid_k2):
        f_at_1 = q_derivative(self.SPEC, 4, 1.0, lambda_grid_k2)
        f_at_15 = q_derivative(self.SPEC, 4, 1.5, lambda_grid_k2)
        assert f_at_1 >= f_at_15

    def test_guards(self, lambda_grid_k2):
        with pytest.raises(ParameterError):
            q_derivative(self.SPEC, 3, 1.0, lambda_grid_k2)
        with pytest.raises(DomainError):
            q_derivative(self.SPEC, 4, 0.5, lambda_grid_k2)
        small = build_lambda_grid(2.0, 4, 2.0**-8)
        with pytest.raises(ParameterError):
            q_derivative(self.SPEC, 4, 1.0, small)
        other = QIntSpec(kappa=1.5, u=1.0, a=1.0, b=3.0)
        with pytest.raises(ParameterError):
            q_derivative(other, 4, 1.0, lambda_grid_k2)


class TestQIntEval:
    def test_certified_bound_holds(self, lambda_grid_k2):
        spec = QIntSpec(kappa=2.0, u=1.0, a=1.0, b=3.0)
        oracle = qint_oracle(spec)
        value, bound = qint_eval(spec, 16, lambda_grid_k2)
        assert abs(value - oracle) <= bound

    def test_bound_scales_like_n4(self, lambda_grid_k2):
        spec = QIntSpec(kappa=2.0, u=1.0, a=1.0, b=3.0)
        _, b8 = qint_eval(spec, 8, lambda_grid_k2)
        _, b16 = qint_eval(spec, 16, lambda_grid_k2)
        assert b8 / b16 >= 15.0

    def test_degenerate_interval(self, lambda_grid_k2):
        value, bound = qint_eval(QIntSpec(2.0, 1.0, 1.0, 1.0), 8, lambda_grid_k2)
        assert (value, bound) == (0.0, 0.0)

    def test_spec_validation(self):
        with pytest.raises(ParameterError):
            QIntSpec(kappa=1.0, u=1.0, a=1.0, b=2.0)
        with pytest.raises(ParameterError):
            QIntSpec(kappa=2.0, u=0.0, a=1.0, b=2.0)
        with pytest.raises(ParameterError):
            QIntSpec(kappa=2.0, u=1.0, a=2.0, b=1.0)
