"""Distribution reports: residue densities mod m and the psi/length ratio law."""

import math

import pytest

from modknots.enumeration import ClassRecord, EnumerationParams, enumerate_classes
from modknots.symbols import psi
from modknots.stats import (
    EmptySampleError,
    cauchy_cdf,
    cauchy_cdf_compare,
    convergence_trend,
    density_mod_m,
)

EDGES = (-math.inf, -2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, math.inf)


def test_density_smallest_case():
    report = density_mod_m(5, 3)
    assert report.total == 3
    assert report.counts == (1, 1, 1)
    assert report.densities == (pytest.approx(1 / 3),) * 3
    assert report.max_deviation == pytest.approx(0.0)


def test_density_basic_invariants():
    for m in (2, 3, 5, 7):
        report = density_mod_m(80, m)
        assert report.m == m and report.nu == 80
        assert len(report.counts) == m
        assert sum(report.counts) == report.total
        assert sum(report.densities) == pytest.approx(1.0, abs=1e-12)
        assert report.max_deviation == pytest.approx(
            max(abs(d - 1 / m) for d in report.densities)
        )


def test_density_mirror_symmetry_is_exact():
    """The L/R mirror negates psi and preserves trace, class by class."""
    classes = enumerate_classes(EnumerationParams(trace_bound=120))
    for m in (2, 3, 4, 5, 6):
        report = density_mod_m(120, m, classes=classes)
        for k in range(m):
            assert report.counts[k] == report.counts[(m - k) % m], (m, k)


def test_density_accepts_precomputed_classes():
    classes = enumerate_classes(EnumerationParams(trace_bound=40))
    assert density_mod_m(40, 3, classes=classes) == density_mod_m(40, 3)


def test_density_validation():
    with pytest.raises(ValueError):
        density_mod_m(50, 1)
    with pytest.raises(EmptySampleError):
        density_mod_m(3, 2)


def test_convergence_trend_shape():
    trend = convergence_trend([50, 100, 200], 2)
    assert [nu for nu, _ in trend] == [50, 100, 200]
    for _, dev in trend:
        assert 0.0 <= dev <= 1.0


def test_cauchy_cdf_pointwise():
    assert cauchy_cdf(0.0) == pytest.approx(0.5)
    assert cauchy_cdf(1.0) == pytest.approx(math.atan(math.pi / 3) / math.pi + 0.5)
    for x in (-3.0, -0.7, 0.2, 5.0):
        assert cauchy_cdf(x) + cauchy_cdf(-x) == pytest.approx(1.0, abs=1e-15)
    assert cauchy_cdf(1e9) == pytest.approx(1.0, abs=1e-9)
    assert cauchy_cdf(-1e9) == pytest.approx(0.0, abs=1e-9)


def test_cauchy_report_masses():
    report = cauchy_cdf_compare(7.0, EDGES)
    empirical = sum(b[2] for b in report.bins)
    theoretical = sum(b[3] for b in report.bins)
    assert empirical == pytest.approx(1.0, abs=1e-12)
    assert theoretical == pytest.approx(1.0, abs=1e-12)
    assert 0.0 <= report.ks_distance <= 1.0
    # 2 cosh(7/2) = 33.1, so length < 7 is the same cut as trace <= 33
    assert report.sample_count == len(enumerate_classes(EnumerationParams(trace_bound=34)))


def test_cauchy_report_sample_count_matches_length_cut():
    report = cauchy_cdf_compare(6.0, EDGES)
    classes = enumerate_classes(EnumerationParams(trace_bound=22))
    expected = sum(1 for r in classes if r.spectral.length < 6.0)
    assert report.sample_count == expected


def _psi_ratio(record):
    return psi(record.rep) / record.spectral.length


def test_ks_distance_hand_computed():
    """Two known ratios pin the empirical-CDF bookkeeping exactly."""
    fake = [ClassRecord.from_word("LLR"), ClassRecord.from_word("LRR")]
    ratios = sorted(_psi_ratio(r) for r in fake)
    report = cauchy_cdf_compare(10.0, EDGES, classes=fake)
    assert report.sample_count == 2
    expected = 0.0
    for i, x in enumerate(ratios):
        f = cauchy_cdf(x)
        expected = max(expected, abs((i + 1) / 2 - f), abs(i / 2 - f))
    assert report.ks_distance == pytest.approx(expected, abs=1e-15)


def test_cauchy_empty_sample():
    with pytest.raises(EmptySampleError):
        cauchy_cdf_compare(1.0, EDGES)


def test_cauchy_edge_validation():
    with pytest.raises(ValueError):
        cauchy_cdf_compare(6.0, (0.0,))
    with pytest.raises(ValueError):
        cauchy_cdf_compare(6.0, (1.0, -1.0))
