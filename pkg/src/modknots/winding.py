"""Geometric route to the Rademacher symbol: winding along the geodesic orbit.

A hyperbolic class gamma fixes an axis in the upper half plane; the geodesic
flow g_t = M diag(e^t, e^-t) traverses the corresponding closed orbit in the
unit tangent bundle of the modular orbifold.  The function

    F(z, v) = Delta(z) v^6

is invariant under PSL(2,Z) acting on tangent vectors (Delta has weight 12
and v picks up (cz+d)^-2), and never vanishes, so its continuous argument
along the closed orbit winds an integer number of times around 0.  That
integer is the linking number of the orbit with the trefoil of the
missing fiber, and the engine's third computation of psi.

On the flow-time parametrization used here the deck transformation by gamma
closes the orbit at t = log xi (the flow moves at hyperbolic speed 2, so
this *is* the full geodesic of length 2 log xi, not half of it).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import Mat2, NotHyperbolicError
from .symbols import _q_powers

__all__ = [
    "TangentPoint",
    "OrbitSampling",
    "ResidualTooLargeError",
    "RefinementOverflowError",
    "axis_frame",
    "orbit_samples",
    "winding_psi",
    "SAMPLE_CAP",
]

# Refinement gives up past this many samples on one orbit.
SAMPLE_CAP = 10**7

# Terms of the Delta product; after fundamental-domain reduction Im z is at
# least sqrt(3)/2, so |q| <= 0.0044 and 24 terms leave a tail under 1e-55.
_DEFAULT_TERMS = 24


class ResidualTooLargeError(ArithmeticError):
    """Accumulated winding did not come back to an integer."""


class RefinementOverflowError(RuntimeError):
    """Argument steps stayed too coarse below the sample cap."""


@dataclass(frozen=True)
class TangentPoint:
    """Point of the unit tangent bundle: z in the upper half plane, |v| = 1."""

    z: complex
    v: complex


@dataclass(frozen=True)
class OrbitSampling:
    """Uniform samples of one primitive period of the orbit of gamma."""

    gamma: Mat2
    n_samples: int
    samples: tuple[TangentPoint, ...]
    period: float


def _positive_trace(gamma: Mat2) -> Mat2:
    t = gamma.trace
    if abs(t) <= 2:
        raise NotHyperbolicError(f"|trace| = {abs(t)} <= 2")
    return gamma if t > 0 else -gamma


def axis_frame(gamma: Mat2) -> np.ndarray:
    """Real frame M with M^-1 gamma M = diag(xi, 1/xi), det M = 1.

    Columns are eigenvectors for xi and 1/xi; normalization fixed by
    det = +1 and a positive top-left entry.  gamma with trace < -2 is
    silently replaced by -gamma (same PSL element).
    """
    g = _positive_trace(gamma)
    a, b = g.a, g.b
    t = float(g.trace)
    disc = math.sqrt(t * t - 4.0)
    xi = (t + disc) / 2.0
    xi_inv = 2.0 / (t + disc)
    # b = 0 would force a = d = +-1, trace +-2: impossible here.
    frame = np.array([[b, b], [xi - a, xi_inv - a]], dtype=float)
    det = frame[0, 0] * frame[1, 1] - frame[0, 1] * frame[1, 0]
    if det < 0:
        frame[:, 1] *= -1.0
        det = -det
    frame /= math.sqrt(det)
    if frame[0, 0] < 0:
        frame *= -1.0
    return frame


def orbit_samples(gamma: Mat2, n: int) -> OrbitSampling:
    """n tangent points g_t(i) at t = j * period / n, uniformly spaced over
    one primitive period t in [0, log xi).

    The identification is g = (p q; r s) |-> (z, v) = (g i, i/(r i + s)^2),
    v normalized to unit modulus.  The endpoint t = period reproduces the
    t = 0 point after the deck transformation by gamma.
    """
    if n < 8:
        raise ValueError(f"need at least 8 samples, got {n}")
    g = _positive_trace(gamma)
    frame = axis_frame(g)
    p, q = frame[0]
    r, s = frame[1]
    t = float(g.trace)
    period = math.log((t + math.sqrt(t * t - 4.0)) / 2.0)
    points = []
    for j in range(n):
        e = math.exp(period * j / n)
        # g_t = frame * diag(e, 1/e) = (p e, q/e; r e, s/e)
        den = complex(s / e, r * e)  # (r e) i + s/e
        z = complex(q / e, p * e) / den
        v = 1j / (den * den)
        v /= abs(v)
        points.append(TangentPoint(z=z, v=v))
    return OrbitSampling(gamma=g, n_samples=n, samples=tuple(points), period=period)


_REDUCE_CAP = 10_000


def _reduce_to_fundamental_domain(z: complex, v: complex) -> tuple[complex, complex]:
    """Move z into |Re z| <= 1/2, |z| >= 1 by T and S steps, transporting v.

    v is renormalized to unit modulus after every inversion so that deep
    cusp excursions cannot underflow it; only its argument matters.
    """
    for _ in range(_REDUCE_CAP):
        shift = round(z.real)
        z -= shift
        if z.real * z.real + z.imag * z.imag < 1.0 - 1e-15:
            v /= z * z
            v /= abs(v)
            z = -1.0 / z
        else:
            return z, v
    raise RuntimeError(f"fundamental-domain reduction did not terminate near z = {z}")


def _tracked_arguments(samples, n_terms: int) -> np.ndarray:
    """arg F at each sample, F = Delta(z) v^6 evaluated after reduction."""
    zs = np.empty(len(samples), dtype=complex)
    vs = np.empty(len(samples), dtype=complex)
    for i, pt in enumerate(samples):
        zi, vi = _reduce_to_fundamental_domain(pt.z, pt.v)
        zs[i] = zi
        vs[i] = vi
    qs = np.exp(2j * math.pi * zs)
    powers = qs[:, None] ** np.arange(1, n_terms + 1)[None, :]
    deltas = qs * np.prod(1.0 - powers, axis=1) ** 24
    return np.angle(deltas * vs**6)


def winding_psi(gamma: Mat2, n: int = 64, n_terms: int = _DEFAULT_TERMS) -> int:
    """Winding number of Delta(z) v^6 along the closed orbit of gamma.

    Samples the orbit, unwraps the argument of F sample to sample, and
    doubles the sampling until every wrapped step is below pi/2; the total
    change around the loop is then 2 pi times an integer.  Residuals >= 0.1
    raise ResidualTooLargeError, and refinement past SAMPLE_CAP raises
    RefinementOverflowError.  The result equals psi(gamma); the test suite
    enforces that equality across every examined class.
    """
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    count = max(8, n)
    while True:
        sampling = orbit_samples(gamma, count)
        args = _tracked_arguments(sampling.samples, n_terms)
        steps = np.diff(args, append=args[:1])
        steps = np.mod(steps + math.pi, 2.0 * math.pi) - math.pi
        if np.max(np.abs(steps)) < math.pi / 2.0:
            break
        count *= 2
        if count > SAMPLE_CAP:
            raise RefinementOverflowError(
                f"orbit of {gamma!r} still under-resolved at {count // 2} samples"
            )
    turns = float(np.sum(steps)) / (2.0 * math.pi)
    nearest = round(turns)
    if abs(turns - nearest) >= 0.1:
        raise ResidualTooLargeError(
            f"winding {turns} of {gamma!r} is not close to an integer"
        )
    return int(nearest)
