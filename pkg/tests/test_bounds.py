import math

import pytest

from quadbound.bounds import BoundResult, family_bound, simpson_error_bound, taylor_bound
from quadbound.errors import DomainError, ParameterError
from quadbound.transforms import (
    ARCTAN_OVER_T,
    CIN_KERNEL,
    CIN_OVER_T2,
    EIN_KERNEL,
    SINC,
    SINH_OVER_T,
    TAN_EVEN,
    TaylorKernelSpec,
    tan_even_derivative,
)


class TestTaylorBound:
    def test_examples(self):
        assert taylor_bound(0, 4, 1.0).value == 0.2
        assert taylor_bound(1, 4, 1.0).value == 1.0 / 30.0
        assert taylor_bound(0, 0, 2.5).value == 2.5
        assert taylor_bound(1, 2, 1.0).value == 1.0 / 12.0

    def test_factorial_guard(self):
        with pytest.raises(ParameterError):
            taylor_bound(10, 10, 1.0)

    def test_bad_m(self):
        with pytest.raises(ParameterError):
            taylor_bound(0, 0, 0.0)

    def test_bad_orders(self):
        with pytest.raises(ParameterError):
            taylor_bound(-1, 0, 1.0)
        with pytest.raises(ParameterError):
            taylor_bound(0, 2.5, 1.0)


class TestFamilyBound:
    def test_sinc_fourth(self):
        result = family_bound(SINC, 4)
        assert result.value == 0.2
        assert result.sharp_at == 0.0
        assert result.parity == "even"

    def test_arctan_fourth(self):
        assert family_bound(ARCTAN_OVER_T, 4).value == 4.8

    def test_tan_first_pair_at_zero(self):
        want = 2.0 / (math.pi / 2.0) ** 3
        assert family_bound(TAN_EVEN, 1, 0.0).value == pytest.approx(want, rel=1e-15)
        assert family_bound(TAN_EVEN, 1, 0.0).value == pytest.approx(0.5160245509, abs=1e-9)

    def test_sinh_even_order(self):
        got = family_bound(SINH_OVER_T, 2, 1.0).value
        assert got == pytest.approx(math.cosh(1.0) / 3.0, rel=1e-15)
        assert got == pytest.approx(0.5143602116, abs=1e-9)

    def test_t_independent_families_ignore_t(self):
        assert family_bound(SINC, 3, 12.5).value == family_bound(SINC, 3, 0.0).value

    def test_tan_domain(self):
        with pytest.raises(DomainError):
            family_bound(TAN_EVEN, 1, math.pi / 2)

    def test_consistency_with_taylor_bound(self):
        for k in range(7):
            unit = taylor_bound(0, k, 1.0).value
            assert family_bound(SINC, k).value == unit
            assert family_bound(CIN_KERNEL, k).value == unit
            assert family_bound(EIN_KERNEL, k).value == unit
            assert family_bound(CIN_OVER_T2, k).value == taylor_bound(1, k, 1.0).value


class TestSimpsonErrorBound:
    def test_one_fifth_becomes_x5_over_900(self):
        assert simpson_error_bound(0.2, 5.0, 10) == pytest.approx(5.0**5 / (900.0 * 10**4), rel=1e-15)
        assert simpson_error_bound(0.2, 5.0, 10) == pytest.approx(3.4722e-4, abs=1e-8)

    def test_zero_interval(self):
        assert simpson_error_bound(0.2, 0.0, 10) == 0.0

    def test_unit_interval(self):
        assert simpson_error_bound(0.2, 1.0, 10) == pytest.approx(1.0 / 9e6, rel=1e-15)

    def test_monotone_in_x_and_n(self):
        xs = [1.0, 2.0, 4.0, 8.0]
        values = [simpson_error_bound(0.2, x, 10) for x in xs]
        assert all(b > a for a, b in zip(values, values[1:]))
        ns = [10, 20, 40, 100]
        values = [simpson_error_bound(0.2, 5.0, n) for n in ns]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            simpson_error_bound(0.0, 1.0, 10)
        with pytest.raises(ParameterError):
            simpson_error_bound(0.2, 1.0, 5)
        with pytest.raises(ParameterError):
            simpson_error_bound(0.2, -1.0, 10)


class TestDominationOnBoundSide:
    # Shared property with the transform tests, restated here against the
    # BoundResult values themselves.
    @pytest.mark.parametrize("family", [SINC, CIN_OVER_T2, ARCTAN_OVER_T])
    def test_bound_dominates_samples(self, family, rng):
        from quadbound.transforms import transform_derivative

        spec = TaylorKernelSpec.of(family)
        for k in range(5):
            for t in rng.uniform(-10.0, 10.0, size=50):
                bound = family_bound(family, k, float(t))
                assert abs(transform_derivative(spec, k, float(t))) <= bound.value + 1e-12


class TestTanAsymptoticSharpness:
    def test_ratio_decreases_toward_one(self):
        ratios = []
        for t in (1.2, 1.35, 1.5):
            bound = family_bound(TAN_EVEN, 1, t).value
            actual = tan_even_derivative(1, t)
            ratios.append(bound / actual)
        assert ratios[0] > ratios[1] > ratios[2] > 1.0
        assert ratios[2] - 1.0 < 1e-4


class TestBoundResultMetadata:
    def test_dataclass_fields(self):
        r = BoundResult(value=1.0, sharp_at=0.0, parity="even")
        assert (r.value, r.sharp_at, r.parity) == (1.0, 0.0, "even")

    def test_sharpness_attained_where_declared(self):
        # The metadata drives the equality checks mechanically.
        from quadbound.transforms import transform_derivative

        for family, k in [(SINC, 4), (CIN_KERNEL, 3), (EIN_KERNEL, 2), (CIN_OVER_T2, 6)]:
            result = family_bound(family, k, 0.0)
            assert result.sharp_at is not None
            got = abs(transform_derivative(TaylorKernelSpec.of(family), k, result.sharp_at))
            assert got == pytest.approx(result.value, abs=1e-12)
