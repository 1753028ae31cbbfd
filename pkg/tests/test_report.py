import csv
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from boxvar import DomainError, EmitError, PhysicalParams
from boxvar.exact_ho import exact_wavefunction
from boxvar.report import (
    ENERGY_HEADER,
    OVERLAP_HEADER,
    TRACE_HEADER,
    emit_csv,
    emit_plot,
    energy_table,
    overlap_diagnostics,
    peak_ratio,
    wavefunction_traces,
)
from boxvar.variational import solve

PI2 = math.pi**2

# frozen from the Gauss-Legendre path; confirmed to ~1e-16 against an
# adaptive-quadrature integration of the same product
GOLDEN_OVERLAP = {0: 0.9942630879999492, 1: 0.9858310213679504}


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


class TestEnergyTable:
    def test_rows(self):
        rows = energy_table(4)
        assert [r.r for r in rows] == [0, 1, 2, 3, 4]
        assert rows[0].e_star_over_ew == pytest.approx(0.5678618, abs=1e-7)
        assert rows[0].e_exact_over_ew == 0.5
        assert rows[0].ratio == pytest.approx(1.135724, abs=1e-6)
        assert rows[1].e_star_over_ew == pytest.approx(1.6702898, abs=1e-7)
        assert rows[1].e_exact_over_ew == 1.5
        assert rows[4].ratio < 1 < rows[3].ratio

    def test_invariants_dimensional(self, dimensional):
        for row in energy_table(30, dimensional):
            assert row.e_exact_over_ew == row.r + 0.5
            assert row.ratio * row.e_exact_over_ew == pytest.approx(row.e_star_over_ew, rel=1e-13)
            assert (row.e_star_over_ew - row.e_exact_over_ew > 0) == (row.r <= 3)

    def test_units_cancel(self, dimensional):
        for a, b in zip(energy_table(5, dimensional), energy_table(5)):
            assert a.e_star_over_ew == pytest.approx(b.e_star_over_ew, rel=1e-14)
            assert a.e_exact_over_ew == b.e_exact_over_ew

    def test_deterministic(self):
        assert energy_table(10) == energy_table(10)


class TestPeakRatio:
    def test_value(self):
        assert abs(peak_ratio() - 0.9221215996) < 1e-9

    def test_alpha_independent(self):
        assert peak_ratio(PhysicalParams(mass=4.0)) == pytest.approx(peak_ratio(), abs=1e-13)

    def test_two_paths(self):
        a = solve(0).l_star
        pointwise = (1 / math.sqrt(a)) / exact_wavefunction(0, x=0.0)
        assert pointwise == pytest.approx(peak_ratio(), abs=1e-12)


class TestTraces:
    def test_ground(self):
        approx, exact = wavefunction_traces(0, n_points=401)
        assert approx.kind == "approximate" and exact.kind == "exact"
        assert approx.domain_half_width == 6.0
        assert approx.xs[200] == 0.0
        assert approx.values[200] == pytest.approx(0.692629, abs=1e-6)
        assert exact.values[200] == pytest.approx(0.751126, abs=1e-6)
        assert approx.values[200] / exact.values[200] == pytest.approx(0.9221215996, abs=1e-9)

    def test_grid(self):
        approx, exact = wavefunction_traces(3, n_points=51)
        xs = approx.xs
        assert len(xs) == len(approx.values) == len(exact.values) == 51
        assert np.all(np.diff(xs) > 0)
        np.testing.assert_array_equal(xs, -xs[::-1])
        np.testing.assert_array_equal(xs, exact.xs)

    def test_first_excited_zero_at_origin(self):
        approx, exact = wavefunction_traces(1, n_points=11)
        assert approx.values[5] == 0.0 and exact.values[5] == 0.0

    def test_zero_outside_box(self):
        approx, _ = wavefunction_traces(0, n_points=401)
        L = solve(0).l_star
        assert L == pytest.approx(2.08449, abs=1e-5)
        outside = np.abs(approx.xs) > L
        assert outside.any() and np.all(approx.values[outside] == 0.0)

    def test_wide_box_sets_window(self):
        # L* grows with r; past some r it exceeds the 6/sqrt(alpha) window
        r = next(r for r in range(200) if solve(r).l_star > 6.0)
        approx, _ = wavefunction_traces(r, n_points=21)
        L = solve(r).l_star
        assert approx.domain_half_width == L
        assert abs(approx.values[0]) < 1e-12 and abs(approx.values[-1]) < 1e-12

    @pytest.mark.parametrize("n", [2, 4, 1, 0])
    def test_bad_n(self, n):
        with pytest.raises(DomainError):
            wavefunction_traces(0, n_points=n)


class TestOverlaps:
    def test_golden(self):
        rows = overlap_diagnostics(1)
        for row in rows:
            assert row.abs_overlap == pytest.approx(GOLDEN_OVERLAP[row.r], abs=1e-10)
            assert 0.9 < row.abs_overlap <= 1.0

    def test_bounded(self, dimensional):
        for row in overlap_diagnostics(10, dimensional):
            assert 0.0 <= row.abs_overlap <= 1.0 + 1e-10

    def test_units_cancel(self, dimensional):
        for a, b in zip(overlap_diagnostics(5), overlap_diagnostics(5, dimensional)):
            assert a.abs_overlap == pytest.approx(b.abs_overlap, abs=1e-12)


class TestCsv:
    def test_energy(self, tmp_path):
        path = tmp_path / "e.csv"
        emit_csv(energy_table(2), path)
        rows = read_csv(path)
        assert tuple(rows[0]) == ENERGY_HEADER
        assert len(rows) == 4
        assert float(rows[1][1]) == energy_table(0)[0].e_star_over_ew
        assert b"\r" not in path.read_bytes()

    def test_traces(self, tmp_path):
        path = tmp_path / "t.csv"
        traces = wavefunction_traces(0, n_points=5)
        emit_csv(traces, path)
        rows = read_csv(path)
        assert tuple(rows[0]) == TRACE_HEADER
        assert len(rows) == 6 and all(len(r) == 3 for r in rows)
        # 17 significant digits round-trip exactly
        assert [float(r[2]) for r in rows[1:]] == list(traces[1].values)

    def test_overlaps(self, tmp_path):
        path = tmp_path / "o.csv"
        emit_csv(overlap_diagnostics(2), path)
        rows = read_csv(path)
        assert tuple(rows[0]) == OVERLAP_HEADER and len(rows) == 4

    def test_byte_stable(self, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        emit_csv(energy_table(7), a)
        emit_csv(energy_table(7), b)
        assert a.read_bytes() == b.read_bytes()

    def test_io_error(self, tmp_path):
        with pytest.raises(EmitError) as info:
            emit_csv(energy_table(1), tmp_path / "missing" / "e.csv")
        assert "missing" in str(info.value)

    def test_empty(self, tmp_path):
        with pytest.raises(DomainError):
            emit_csv([], tmp_path / "x.csv")


class TestPlot:
    def _series(self, path):
        root = ET.parse(path).getroot()
        ns = "{http://www.w3.org/2000/svg}"
        return root.findall(f"{ns}polyline"), root.findall(f"{ns}text")

    def test_energy_plot(self, tmp_path):
        path = tmp_path / "e.svg"
        emit_plot(energy_table(10), path)
        lines, texts = self._series(path)
        assert len(lines) == 2
        labels = [t.text for t in texts]
        assert "approximate E*_r" in labels and "exact E_r" in labels

    def test_trace_plot(self, tmp_path):
        path = tmp_path / "t.svg"
        traces = wavefunction_traces(0, n_points=101)
        emit_plot(traces, path)
        lines, _ = self._series(path)
        assert len(lines) == 2
        assert all(len(l.get("points").split()) == 101 for l in lines)

    def test_deterministic(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        emit_plot(wavefunction_traces(1, n_points=51), a)
        emit_plot(wavefunction_traces(1, n_points=51), b)
        assert a.read_bytes() == b.read_bytes()

    def test_empty_writes_nothing(self, tmp_path):
        path = tmp_path / "e.svg"
        with pytest.raises(DomainError):
            emit_plot([], path)
        assert not path.exists()

    def test_overlaps_not_plottable(self, tmp_path):
        with pytest.raises(DomainError):
            emit_plot(overlap_diagnostics(1), tmp_path / "o.svg")
