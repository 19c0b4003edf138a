import math

import numpy as np
import pytest

from quadbound.analysis import (
    CSV_HEADER,
    FrullaniSpec,
    SimpsonReport,
    UNDEF_THRESHOLD,
    frullani_check,
    locate_error_zero,
    parse_report_csv,
    reports_to_csv,
    round_half_away,
    scan_ratio,
    scan_reports,
    simpson_error,
    simpson_report,
    table1,
)
from quadbound.errors import BracketError, ComputationError, ParameterError
from quadbound.specfun import cin_integrand

# R_n rounded to two decimals at the cells quoted for this experiment.
REFERENCE_CELLS = {
    (1.0, 10): 2.55,
    (2.0, 100): 1.55,
    (5.0, 10): 2.77,
    (5.0, 100): 2.82,
    (7.0, 1000): 11.58,
    (8.0, 100): 11.18,
    (10.0, 1000): 6.15,
}


class TestSimpsonReport:
    @pytest.mark.parametrize(("x", "n"), sorted(REFERENCE_CELLS))
    def test_reference_cells(self, x, n):
        report = simpson_report(x, n)
        assert round_half_away(report.r_n) == pytest.approx(REFERENCE_CELLS[(x, n)], abs=0.0100001)

    @pytest.mark.parametrize(("x", "n"), [(1.0, 10), (5.0, 100), (34.0, 10), (1.0, 1000)])
    def test_invariants(self, x, n):
        r = simpson_report(x, n)
        # e_n is the as-computed difference (the extended-precision parts
        # shift it from the rounded-field difference by < 1 ulp of s_n).
        assert abs(r.e_n - (r.s_n - r.reference)) <= 4e-16 * (1.0 + abs(r.s_n))
        assert r.b_n == x**5 / (900.0 * n**4)
        assert abs(r.e_n) <= r.b_n + 1e-13
        if r.r_n is not None:
            assert abs(r.r_n) >= 1.0 - 1e-9

    def test_parameter_errors(self):
        with pytest.raises(ParameterError):
            simpson_report(0.0, 10)
        with pytest.raises(ParameterError):
            simpson_report(41.0, 10)
        with pytest.raises(ParameterError):
            simpson_report(1.0, 11)
        with pytest.raises(ParameterError):
            simpson_report(1.0, 2**15)

    def test_integrand_stable_at_tiny_argument(self):
        assert float(cin_integrand(1e-12)) == pytest.approx(5e-13, rel=1e-6)


class TestTable1:
    def test_shape_and_order(self):
        rows = table1()
        assert len(rows) == 30
        assert [(r.x, r.n) for r in rows[:4]] == [(1.0, 10), (1.0, 100), (1.0, 1000), (2.0, 10)]

    def test_example_cells(self):
        cells = {(r.x, r.n): r for r in table1()}
        assert round_half_away(cells[(1.0, 10)].r_n) == 2.55
        assert round_half_away(cells[(8.0, 100)].r_n) == 11.18
        assert round_half_away(cells[(10.0, 1000)].r_n) == 6.15

    def test_stability_across_n(self):
        cells = {(r.x, r.n): r for r in table1()}
        for x in range(1, 11):
            assert abs(cells[(float(x), 100)].r_n - cells[(float(x), 1000)].r_n) <= 0.02

    def test_csv_round_trip(self):
        rows = table1()
        again = parse_report_csv(reports_to_csv(rows))
        assert again == rows

    def test_csv_format(self):
        text = reports_to_csv(table1())
        lines = text.splitlines()
        assert lines[0] == CSV_HEADER
        assert len(lines) == 31
        assert lines[1].startswith("1,10,")

    def test_undef_serialization(self):
        row = SimpsonReport(x=1.0, n=10, s_n=0.5, reference=0.5, e_n=0.0, b_n=1.0, r_n=None)
        text = reports_to_csv([row])
        assert text.splitlines()[1].endswith(",undef")
        assert parse_report_csv(text)[0].r_n is None


class TestRoundHalfAway:
    @pytest.mark.parametrize(
        ("value", "want"),
        [(2.555, 2.56), (2.554, 2.55), (-2.555, -2.56), (11.184999, 11.18), (1.005, 1.01)],
    )
    def test_cases(self, value, want):
        assert round_half_away(value) == want


class TestScan:
    def test_defined_and_at_least_one(self):
        points = scan_ratio(10, 0.1, 20.0, 0.1)
        assert len(points) == 200
        ratios = [r for _, r in points]
        assert all(r is not None for r in ratios)
        assert all(abs(r) >= 1.0 for r in ratios)

    def test_envelope_holds_away_from_origin(self):
        # The factor-15 envelope is a property of x >= ~0.17: the actual
        # error scales like x^6 while the bound scales like x^5, so the
        # ratio behaves like 2.4/x as x -> 0 and is ~24 at x = 0.1.
        points = scan_ratio(10, 0.2, 20.0, 0.1)
        assert max(r for _, r in points) <= 15.0
        near_origin = scan_ratio(10, 0.1, 0.15, 0.1)
        assert near_origin[0][1] == pytest.approx(24.015, abs=0.01)

    def test_spike_scan(self):
        points = scan_ratio(10, 30.0, 34.9, 0.001)
        defined = [(x, abs(r)) for x, r in points if r is not None]
        peak_x, peak = max(defined, key=lambda p: p[1])
        assert peak > 100.0
        assert abs(peak_x - 34.858) < 0.01

    def test_zero_start_is_undefined_marker(self):
        points = scan_ratio(10, 0.0, 0.5, 0.1)
        assert points[0] == (0.0, None)

    def test_deterministic_order(self):
        xs = [x for x, _ in scan_ratio(10, 1.0, 2.0, 0.25)]
        assert xs == sorted(xs)
        assert scan_reports(10, 1.0, 2.0, 0.25) == scan_reports(10, 1.0, 2.0, 0.25)

    def test_bad_window(self):
        with pytest.raises(ParameterError):
            scan_ratio(10, 5.0, 1.0, 0.1)
        with pytest.raises(ParameterError):
            scan_ratio(10, 0.0, 41.0, 0.5)


class TestBoundValidity:
    def test_error_never_exceeds_bound(self, rng):
        for _ in range(500):
            x = float(rng.uniform(1e-3, 20.0))
            n = int(2 * rng.integers(1, 129))
            e = simpson_error(x, n)
            b = x**5 / (900.0 * n**4)
            assert abs(e) <= b + 1e-13, (x, n)


class TestLocateErrorZero:
    def test_spike_bracket(self):
        z = locate_error_zero(10, 34.858, 34.859)
        assert z.hi - z.lo <= 1e-6
        assert math.copysign(1.0, z.e_lo) != math.copysign(1.0, z.e_hi)

    def test_endpoint_errors_match_reference_values(self):
        assert simpson_error(34.858, 10) == pytest.approx(1.6504e-4, abs=1e-8)
        assert simpson_error(34.859, 10) == pytest.approx(-9.5463e-5, abs=1e-9)

    def test_no_sign_change_raises(self):
        with pytest.raises(BracketError):
            locate_error_zero(10, 1.0, 2.0)

    def test_bad_bracket(self):
        with pytest.raises(ParameterError):
            locate_error_zero(10, 2.0, 1.0)


class TestFrullani:
    def test_one_two(self):
        result = frullani_check(FrullaniSpec(1.0, 2.0, 1000.0))
        assert result.target == pytest.approx(math.pi / 2, rel=1e-15)
        assert abs(result.truncated - result.target) <= result.tail_bound + 1e-8
        assert abs(result.truncated - result.target) <= 2e-3 + 1e-8

    def test_equal_frequencies(self):
        result = frullani_check(FrullaniSpec(1.5, 1.5, 50.0))
        assert result.target == 0.0
        assert abs(result.truncated) < 1e-10

    def test_swap_negates_target(self):
        forward = frullani_check(FrullaniSpec(1.0, 2.0, 500.0))
        backward = frullani_check(FrullaniSpec(2.0, 1.0, 500.0))
        assert backward.target == -forward.target
        assert backward.truncated == pytest.approx(-forward.truncated, rel=1e-12)

    def test_truncation_guard(self):
        with pytest.raises(ParameterError):
            FrullaniSpec(1.0, 2.0, 0.5)


class TestUndefThreshold:
    def test_threshold_below_table_cells(self):
        # The smallest actual error in the reference table is ~4.3e-16 at
        # (1, 1000); the undefined cutoff has to sit below it.
        assert UNDEF_THRESHOLD < 4e-16
        assert simpson_report(1.0, 1000).r_n is not None
