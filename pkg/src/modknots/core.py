"""Exact SL(2,Z) matrix algebra and the L/R coding of conjugacy classes.

A hyperbolic conjugacy class of PSL(2,Z) with trace > 2 is encoded by a
cyclic word over the two-letter alphabet {L, R}, where

    L = (1 0; 1 1),   R = (1 1; 0 1).

Words are plain Python strings.  The canonical representative of a cyclic
word is its lexicographically least rotation (L < R); a class is primitive
exactly when that word is aperiodic, i.e. a Lyndon word.  All integer
arithmetic uses Python's native arbitrary-precision ints: traces grow
exponentially with word length, so no fixed-width type is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Mat2",
    "SpectralData",
    "IDENTITY",
    "GEN_L",
    "GEN_R",
    "NotHyperbolicError",
    "AllSameLetterError",
    "PeriodicWordError",
    "word_to_matrix",
    "least_rotation",
    "is_aperiodic",
    "is_canonical",
    "canonical_necklace",
    "mirror_word",
    "spectral",
    "conjugate",
]


class NotHyperbolicError(ValueError):
    """Raised when an operation requires |trace| > 2 and the matrix fails it."""


class AllSameLetterError(ValueError):
    """Word is L^n or R^n: a parabolic power, not a hyperbolic class."""


class PeriodicWordError(ValueError):
    """Word is a proper power of a shorter cyclic word: not primitive."""


@dataclass(frozen=True)
class Mat2:
    """Integer 2x2 matrix (a b; c d) with determinant 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant != 1: {self!r}")

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


IDENTITY = Mat2(1, 0, 0, 1)
GEN_L = Mat2(1, 0, 1, 1)
GEN_R = Mat2(1, 1, 0, 1)

_GEN = {"L": GEN_L, "R": GEN_R}


def _check_word(word: str) -> None:
    if not word:
        raise ValueError("empty word")
    if set(word) - {"L", "R"}:
        raise ValueError(f"word must be over {{L, R}}: {word!r}")


def word_to_matrix(word: str) -> Mat2:
    """Ordered product of generator matrices, left to right.

    All entries of the result are >= 0, and appending a letter never
    decreases any entry (hence never the trace), which is what makes
    trace-based pruning of word prefixes sound.
    """
    _check_word(word)
    a, b, c, d = 1, 0, 0, 1
    for ch in word:
        if ch == "L":
            a, b, c, d = a + b, b, c + d, d
        else:
            a, b, c, d = a, a + b, c, c + d
    return Mat2(a, b, c, d)


def least_rotation(word: str) -> str:
    """Lexicographically least rotation of ``word`` (Booth's algorithm)."""
    _check_word(word)
    s = word + word
    n = len(word)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k : k + n]


def is_aperiodic(word: str) -> bool:
    """True unless ``word`` is a proper power of a shorter word."""
    _check_word(word)
    return (word + word).find(word, 1) == len(word)


def is_canonical(word: str) -> bool:
    """True iff ``word`` is the canonical representative of a primitive class.

    Equivalent to being a Lyndon word of length >= 2 over L < R: aperiodic
    and strictly least among its rotations.  Linear time, no allocations;
    this is the hot check inside the class enumerator.
    """
    n = len(word)
    if n < 2 or word[-1] != "R":
        return False
    i, j = 0, 1
    while j < n and word[i] <= word[j]:
        i = 0 if word[i] < word[j] else i + 1
        j += 1
    return j == n and i == 0


def canonical_necklace(word: str) -> str:
    """Canonical rotation of a primitive cyclic word.

    Raises AllSameLetterError for L^n / R^n (parabolic, no hyperbolic class)
    and PeriodicWordError for proper powers (non-primitive class).
    Idempotent and invariant under rotation of the input.
    """
    _check_word(word)
    if word.count(word[0]) == len(word):
        raise AllSameLetterError(f"word uses a single letter: {word!r}")
    if not is_aperiodic(word):
        raise PeriodicWordError(f"word is a proper power: {word!r}")
    return least_rotation(word)


def mirror_word(word: str) -> str:
    """Swap L and R.  The mirror class has equal trace and negated symbol."""
    _check_word(word)
    return word.translate(str.maketrans("LR", "RL"))


@dataclass(frozen=True)
class SpectralData:
    """Trace, larger eigenvalue and geodesic length of a hyperbolic matrix.

    xi = (|trace| + sqrt(trace^2 - 4)) / 2  > 1,
    length = 2 ln xi  (the hyperbolic length of the closed geodesic).
    """

    trace: int
    xi: float
    length: float


# Above this the sqrt correction to xi is below one double ulp anyway,
# and trace*trace would no longer fit in a float.
_BIG_TRACE = 10**15


def spectral(m: Mat2) -> SpectralData:
    """Spectral data of a hyperbolic matrix; NotHyperbolicError if |tr| <= 2."""
    t = abs(m.trace)
    if t <= 2:
        raise NotHyperbolicError(f"|trace| = {t} <= 2")
    if t < _BIG_TRACE:
        xi = (t + math.sqrt(t * t - 4)) / 2
        length = 2.0 * math.log(xi)
    else:
        xi = float(t)
        length = 2.0 * math.log(t)
    return SpectralData(trace=m.trace, xi=xi, length=length)


def conjugate(m: Mat2, p: Mat2) -> Mat2:
    """Exact conjugation p * m * p^-1."""
    return p * m * p.inverse()
