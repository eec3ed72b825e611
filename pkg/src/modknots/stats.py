"""Distribution laws of the Rademacher symbol at desk scale.

Two empirical laws are reproduced over the finite class lists the
enumerator produces: equidistribution of psi mod m among classes ordered
by trace, and the Cauchy limit law for psi/length with scale 3/pi, whose
CDF is arctan(pi x / 3)/pi + 1/2.  Counting is raw (no smoothing, no
weights) and the sample unit is the conjugacy class, i.e. the knot.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .enumeration import ClassRecord, EnumerationParams, classes_by_length, enumerate_classes
from .symbols import psi_from_word

__all__ = [
    "EmptySampleError",
    "DensityReport",
    "CauchyReport",
    "density_mod_m",
    "cauchy_cdf_compare",
    "convergence_trend",
    "cauchy_cdf",
]


class EmptySampleError(ValueError):
    """No classes below the requested bound; nothing to count."""


@dataclass(frozen=True)
class DensityReport:
    """Counts of psi mod m over classes with trace < nu."""

    m: int
    nu: int
    counts: tuple[int, ...]
    densities: tuple[float, ...]
    max_deviation: float

    @property
    def total(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class CauchyReport:
    """Empirical psi/length distribution against the arctan law."""

    length_bound: float
    sample_count: int
    bins: tuple[tuple[float, float, float, float], ...]  # (a, b, empirical, theoretical)
    ks_distance: float


def cauchy_cdf(x: float) -> float:
    """CDF of the Cauchy law with scale 3/pi: arctan(pi x / 3)/pi + 1/2."""
    return math.atan(math.pi * x / 3.0) / math.pi + 0.5


def _psi_values(classes: Sequence[ClassRecord]) -> list[int]:
    return [psi_from_word(r.necklace) for r in classes]


def density_mod_m(
    nu: int,
    m: int,
    classes: Sequence[ClassRecord] | None = None,
    worker_count: int = 1,
) -> DensityReport:
    """Empirical density of psi mod m over classes with trace < nu.

    `classes` may be passed to reuse an existing enumeration; records with
    trace >= nu are filtered out, so a superset list is fine.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if classes is None:
        classes = enumerate_classes(EnumerationParams(trace_bound=nu, worker_count=worker_count))
    sample = [r for r in classes if r.spectral.trace < nu]
    if not sample:
        raise EmptySampleError(f"no classes with trace < {nu}")
    counts = [0] * m
    for value in _psi_values(sample):
        counts[value % m] += 1
    total = len(sample)
    densities = tuple(k / total for k in counts)
    max_deviation = max(abs(dk - 1.0 / m) for dk in densities)
    return DensityReport(
        m=m,
        nu=nu,
        counts=tuple(counts),
        densities=densities,
        max_deviation=max_deviation,
    )


def cauchy_cdf_compare(
    length_bound: float,
    bin_edges: Sequence[float],
    classes: Sequence[ClassRecord] | None = None,
    worker_count: int = 1,
) -> CauchyReport:
    """Empirical distribution of psi/length below a length bound vs the
    Cauchy law, with the Kolmogorov-Smirnov sup-distance.

    Bins are half-open [a, b) with the final bin closed; pass -inf/inf edges
    to make the theoretical masses integrate to 1.
    """
    edges = [float(e) for e in bin_edges]
    if len(edges) < 2 or any(x >= y for x, y in zip(edges, edges[1:])):
        raise ValueError("bin edges must be strictly increasing, length >= 2")
    if classes is None:
        classes = classes_by_length(length_bound, worker_count=worker_count)
    sample = [r for r in classes if r.spectral.length < length_bound]
    if not sample:
        raise EmptySampleError(f"no classes with length < {length_bound}")

    ratios = sorted(
        psi_from_word(r.necklace) / r.spectral.length for r in sample
    )
    n = len(ratios)

    # One-sample KS: sup over the sample of the CDF gap on either side of
    # each step of the empirical CDF.
    ks = 0.0
    for i, x in enumerate(ratios):
        fx = cauchy_cdf(x)
        ks = max(ks, abs((i + 1) / n - fx), abs(i / n - fx))

    bins = []
    for j, (a, b) in enumerate(zip(edges, edges[1:])):
        last = j == len(edges) - 2
        if last:
            hits = sum(1 for x in ratios if a <= x <= b)
        else:
            hits = sum(1 for x in ratios if a <= x < b)
        theory = (math.atan(math.pi * b / 3.0) - math.atan(math.pi * a / 3.0)) / math.pi
        bins.append((a, b, hits / n, theory))

    return CauchyReport(
        length_bound=length_bound,
        sample_count=n,
        bins=tuple(bins),
        ks_distance=ks,
    )


def convergence_trend(
    nu_list: Sequence[int],
    m: int,
    worker_count: int = 1,
) -> list[tuple[int, float]]:
    """max_deviation of the mod-m density at each nu, one enumeration total.

    Finite-size diagnostic for the equidistribution limit; the deviations
    should trend down as nu grows.
    """
    nus = list(nu_list)
    if any(x >= y for x, y in zip(nus, nus[1:])):
        raise ValueError("nu_list must be strictly increasing")
    classes = enumerate_classes(
        EnumerationParams(trace_bound=max(nus), worker_count=worker_count)
    )
    return [(nu, density_mod_m(nu, m, classes=classes).max_deviation) for nu in nus]
