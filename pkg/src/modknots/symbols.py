"""Dedekind symbol, Rademacher symbol, and the discriminant-form oracle.

Three mutually independent routes to the same integer live here:

* `phi` / `psi`: the exact closed form.  For c != 0,
  phi = (a + d)/c - 12 sgn(c) s(d, |c|) with s the Dedekind sum, and
  phi = b/d when c = 0; then psi = phi - 3 sgn(c (a + d)), sgn(0) = 0.
  Everything is computed with rationals and must reduce to an integer.

* `psi_from_word`: #R - #L of any representative L/R word.  This is the
  combinatorial shadow of the symbol; its agreement with `psi` is checked
  exhaustively by the test suite, never assumed.

* `phi_numeric_oracle`: the floating-point tie-back to the transformation
  law of log Delta under the Moebius action, using the canonical branch
  log Delta(z) = 2 pi i z + 24 sum log(1 - q^n) on the upper half plane
  and the principal branch for the 6 log(-(cz+d)^2) multiplier term.

The Dedekind sum itself is offered twice: a Euclidean recursion via
reciprocity (fast path) and the defining finite sum (`dedekind_sum_naive`),
which serves as the oracle for the fast path.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .core import Mat2

__all__ = [
    "NonIntegerPhiError",
    "BranchResidualError",
    "dedekind_sum",
    "dedekind_sum_naive",
    "phi",
    "psi",
    "psi_from_word",
    "delta_q",
    "log_delta",
    "delta_truncation_epsilon",
    "terms_for_accuracy",
    "phi_numeric_oracle",
]

_TWO_PI_I = 2j * math.pi


class NonIntegerPhiError(ArithmeticError):
    """The closed form for phi failed to reduce to an integer.

    This must never fire; if it does, a convention in the closed form is
    wrong, not the input.
    """


class BranchResidualError(ArithmeticError):
    """Numeric phi did not land near an integer (bad z, too few terms,
    or a branch/convention error)."""


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def dedekind_sum_naive(h: int, k: int) -> Fraction:
    """Defining sum s(h,k) = sum_{i=1}^{k-1} ((i/k)) ((hi/k)), exact.

    ((x)) is the sawtooth x - floor(x) - 1/2 for non-integer x and 0 at
    integers.  O(k) Fraction arithmetic; the reference implementation.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    total = Fraction(0)
    for i in range(1, k):
        hi = (h * i) % k
        if hi == 0:
            continue
        # ((i/k)) = i/k - 1/2 for 0 < i < k
        total += (Fraction(i, k) - Fraction(1, 2)) * (Fraction(hi, k) - Fraction(1, 2))
    return total


def dedekind_sum(h: int, k: int) -> Fraction:
    """Dedekind sum s(h, k), exact, via the reciprocity recursion.

    s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk) for coprime h, k > 0
    turns the computation into a Euclidean descent.  Depends only on
    h mod k; s(-h,k) = -s(h,k) is subsumed by the reduction.  Non-coprime
    arguments (never produced by SL(2,Z) rows) fall back to the naive sum.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    h = h % k
    if h == 0:
        return Fraction(0)
    if math.gcd(h, k) != 1:
        return dedekind_sum_naive(h, k)
    total = Fraction(0)
    sign = 1
    while h > 0:
        total += sign * (Fraction(h * h + k * k + 1, 12 * h * k) - Fraction(1, 4))
        sign = -sign
        h, k = k % h, h
    return total


def phi(m: Mat2) -> int:
    """Dedekind symbol of an SL(2,Z) matrix, exact.

    Raises NonIntegerPhiError if the rational expression fails to reduce to
    an integer, which would signal a broken convention, never valid input.
    """
    a, b, c, d = m.a, m.b, m.c, m.d
    if c == 0:
        value = Fraction(b, d)
    else:
        value = Fraction(a + d, c) - 12 * _sgn(c) * dedekind_sum(d, abs(c))
    if value.denominator != 1:
        raise NonIntegerPhiError(f"phi({m!r}) = {value} is not an integer")
    return int(value)


def psi(m: Mat2) -> int:
    """Rademacher symbol psi = phi - 3 sgn(c (a + d)), a PSL(2,Z) class
    invariant (psi(-m) = psi(m) holds identically in the closed form)."""
    return phi(m) - 3 * _sgn(m.c * (m.a + m.d))


def psi_from_word(word: str) -> int:
    """The word route: #R - #L of any representative of the cyclic class.

    Rotation-invariant by construction.  Equality with `psi` of the word's
    matrix is a theorem about the trefoil fibration; the test suite verifies
    it exhaustively for every class with trace < 50.
    """
    if not word:
        raise ValueError("empty word")
    if set(word) - {"L", "R"}:
        raise ValueError(f"word must be over {{L, R}}: {word!r}")
    return word.count("R") - word.count("L")


def _q_powers(z: complex, n_terms: int) -> np.ndarray:
    q = cmath.exp(_TWO_PI_I * z)
    return q ** np.arange(1, n_terms + 1)


def delta_truncation_epsilon(z: complex, n_terms: int) -> float:
    """Bound on |log tail| of the truncated product.

    With |q| = e^{-2 pi Im z} and |log(1-x)| <= 2|x| for |x| <= 1/2, the
    dropped factors multiply the result by e^{eps} with
    |eps| <= 48 |q|^{N+1} / (1 - |q|); valid once |q|^{N+1} <= 1/2.
    """
    absq = math.exp(-2.0 * math.pi * z.imag)
    return 48.0 * absq ** (n_terms + 1) / (1.0 - absq)


def terms_for_accuracy(z: complex, tol: float = 1e-8) -> int:
    """Smallest term count whose truncation bound is below tol at z."""
    absq = math.exp(-2.0 * math.pi * z.imag)
    if absq == 0.0:
        return 1
    n = math.log(tol * (1.0 - absq) / 48.0) / math.log(absq) - 1.0
    return max(1, math.ceil(n))


def delta_q(z: complex, n_terms: int) -> complex:
    """Truncated discriminant form q prod_{n<=N} (1 - q^n)^24, q = e^{2 pi i z}.

    Requires Im z > 0.  See `delta_truncation_epsilon` for the tail bound;
    near the real axis the true value underflows doubles, so callers that
    need log Delta should use `log_delta` instead.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError(f"Im z must be > 0, got {z}")
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    q = cmath.exp(_TWO_PI_I * z)
    prod = complex(np.prod(1.0 - _q_powers(z, n_terms)))
    return q * prod**24


def log_delta(z: complex, n_terms: int) -> complex:
    """Canonical branch of log Delta on the upper half plane:

        log Delta(z) = 2 pi i z + 24 sum_{n<=N} log(1 - q^n),

    each term principal.  This is the holomorphic branch the transformation
    law of Delta is stated against; it differs from log(delta_q(z)) by the
    2 pi i Z ambiguity that the Dedekind symbol keeps track of.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError(f"Im z must be > 0, got {z}")
    if n_terms < 1:
        raise ValueError(f"n_terms must be >= 1, got {n_terms}")
    tail = complex(np.sum(np.log(1.0 - _q_powers(z, n_terms))))
    return _TWO_PI_I * z + 24.0 * tail


def phi_numeric_oracle(m: Mat2, z: complex, n_terms: int | None = None) -> int:
    """Dedekind symbol straight from the transformation law, numerically.

        phi = (log Delta(gz) - log Delta(z) - [c != 0] 6 log(-(cz+d)^2)) / 2 pi i

    with the canonical branch for log Delta and the principal branch for the
    multiplier.  Rounds to the nearest integer and insists the residual is
    < 0.1; anything larger raises BranchResidualError (bad z, too few terms,
    or a convention error).  n_terms=None sizes the truncation automatically
    from the tail bound at both z and gz.
    """
    z = complex(z)
    if not z.imag > 0:
        raise ValueError(f"Im z must be > 0, got {z}")
    a, b, c, d = m.a, m.b, m.c, m.d
    gz = (a * z + b) / (c * z + d)
    if n_terms is None:
        n_terms = max(terms_for_accuracy(z), terms_for_accuracy(gz))
    value = log_delta(gz, n_terms) - log_delta(z, n_terms)
    if c != 0:
        u = -((c * z + d) ** 2)
        if u.real < 0 and abs(u.imag) <= 1e-12 * abs(u.real):
            raise BranchResidualError(
                f"-(cz+d)^2 = {u} sits on the branch cut; pick a different z"
            )
        value -= 6.0 * cmath.log(u)
    value /= _TWO_PI_I
    nearest = round(value.real)
    residual = abs(value - nearest)
    if residual >= 0.1:
        raise BranchResidualError(
            f"numeric phi residual {residual:.3g} at z = {z} (value {value})"
        )
    return int(nearest)
