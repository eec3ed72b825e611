"""Enumeration of primitive hyperbolic PSL(2,Z) conjugacy classes by trace.

The engine is an output-sensitive depth-first search over L/R words rooted
at "L": appending a letter never decreases the trace of the partial product
(entries stay nonnegative), so any prefix whose trace already reached the
bound can be pruned, and any word longer than bound - 2 is dead weight since
a word with both letters satisfies trace >= length + 1.  A word is kept iff
it is the canonical (Lyndon) representative of its rotation class, which
yields each primitive class exactly once.

`brute_force_classes` is the independent oracle: exhaustive generation of
every word up to the length bound with no pruning, deduplicated through
`canonical_necklace`.  `are_conjugate_oracle` is a bounded conjugator
search used to confirm distinctness of same-trace classes at small scale.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import (
    GEN_L,
    GEN_R,
    Mat2,
    NotHyperbolicError,
    SpectralData,
    canonical_necklace,
    is_canonical,
    spectral,
    word_to_matrix,
    AllSameLetterError,
    PeriodicWordError,
)

__all__ = [
    "ClassRecord",
    "EnumerationParams",
    "OracleBoundExceededError",
    "enumerate_classes",
    "brute_force_classes",
    "classes_by_length",
    "are_conjugate_oracle",
    "MIN_GEODESIC_LENGTH",
]

log = logging.getLogger(__name__)

# Length of the shortest closed geodesic, 2 ln((3 + sqrt 5)/2), trace 3.
MIN_GEODESIC_LENGTH = 2.0 * math.log((3.0 + math.sqrt(5.0)) / 2.0)

# DFS subtrees are split off at this word length when running on several
# workers; at depth 12 there are at most 2^11 subtree roots, plenty for
# load balancing while keeping the inline prefix walk negligible.
_SPLIT_DEPTH = 12


class OracleBoundExceededError(ValueError):
    """Brute-force oracle asked to enumerate past its exponential guard."""


@dataclass(frozen=True)
class ClassRecord:
    """One primitive hyperbolic class: canonical word, representative, spectrum."""

    necklace: str
    rep: Mat2
    spectral: SpectralData

    @classmethod
    def from_word(cls, word: str) -> "ClassRecord":
        """Build the record for any representative word of a primitive class."""
        necklace = canonical_necklace(word)
        rep = word_to_matrix(necklace)
        return cls(necklace=necklace, rep=rep, spectral=spectral(rep))


@dataclass(frozen=True)
class EnumerationParams:
    trace_bound: int
    worker_count: int = 1

    def __post_init__(self):
        if self.trace_bound < 3:
            raise ValueError(f"trace_bound must be >= 3, got {self.trace_bound}")
        if self.worker_count < 1:
            raise ValueError(f"worker_count must be >= 1, got {self.worker_count}")


def _dfs(word: str, a: int, b: int, c: int, d: int, nu: int, max_len: int) -> list:
    """Collect canonical words with trace < nu in the subtree rooted at word.

    The root must already satisfy trace < nu.  Children are pushed only while
    their trace stays below nu and their length at most max_len = nu - 2.
    """
    found = []
    stack = [(word, a, b, c, d)]
    while stack:
        w, a, b, c, d = stack.pop()
        if is_canonical(w):
            found.append((w, a, b, c, d))
        if len(w) >= max_len:
            continue
        # w * L and w * R, trace checked before descending
        if a + b + d < nu:
            stack.append((w + "L", a + b, b, c + d, d))
        if a + c + d < nu:
            stack.append((w + "R", a, a + b, c, c + d))
    return found


def _subtree_task(args: tuple) -> list:
    word, a, b, c, d, nu = args
    return _dfs(word, a, b, c, d, nu, nu - 2)


def _build_records(found: list) -> list[ClassRecord]:
    found.sort(key=lambda item: (item[1] + item[4], item[0]))
    records = []
    for w, a, b, c, d in found:
        rep = Mat2(a, b, c, d)
        records.append(ClassRecord(necklace=w, rep=rep, spectral=spectral(rep)))
    return records


def enumerate_classes(params: EnumerationParams) -> list[ClassRecord]:
    """All primitive hyperbolic classes with 2 < trace < trace_bound.

    Output is sorted by (trace, necklace) and is byte-identical regardless
    of worker_count.  An empty result for trace_bound <= 3 is legal (the
    minimal hyperbolic trace is 3) and merely logged.
    """
    nu = params.trace_bound
    if nu <= 3:
        log.warning("trace bound %d admits no hyperbolic class (minimum trace is 3)", nu)
        return []
    max_len = nu - 2

    if params.worker_count == 1 or max_len <= _SPLIT_DEPTH:
        return _build_records(_dfs("L", 1, 0, 1, 1, nu, max_len))

    # Walk the prefix tree inline up to the split depth, keeping any
    # canonical word found on the way; ship the depth-_SPLIT_DEPTH frontier
    # to the pool.  Final sort makes the merge order immaterial.
    found = []
    roots = []
    stack = [("L", 1, 0, 1, 1)]
    while stack:
        w, a, b, c, d = stack.pop()
        if len(w) == _SPLIT_DEPTH:
            roots.append((w, a, b, c, d, nu))
            continue
        if is_canonical(w):
            found.append((w, a, b, c, d))
        if len(w) >= max_len:
            continue
        if a + b + d < nu:
            stack.append((w + "L", a + b, b, c + d, d))
        if a + c + d < nu:
            stack.append((w + "R", a, a + b, c, c + d))

    chunk = max(1, len(roots) // (params.worker_count * 16))
    with ProcessPoolExecutor(max_workers=params.worker_count) as pool:
        for part in pool.map(_subtree_task, roots, chunksize=chunk):
            found.extend(part)
    return _build_records(found)


def brute_force_classes(trace_bound: int, *, guard: int = 24) -> list[ClassRecord]:
    """Exhaustive oracle: every word of length <= trace_bound - 2, no pruning.

    Canonicalizes and deduplicates through `canonical_necklace`, filters
    trace < trace_bound, and sorts like `enumerate_classes`.  Guarded
    against exponential blowup; raise the guard consciously if needed.
    """
    if trace_bound > guard:
        raise OracleBoundExceededError(
            f"trace_bound {trace_bound} exceeds oracle guard {guard}"
        )
    if trace_bound < 3:
        return []
    max_len = trace_bound - 2
    seen = set()
    found = []
    if max_len >= 1:
        stack = [("L", 1, 0, 1, 1), ("R", 1, 1, 0, 1)]
        while stack:
            w, a, b, c, d = stack.pop()
            if a + d < trace_bound and "L" in w and "R" in w:
                try:
                    necklace = canonical_necklace(w)
                except (AllSameLetterError, PeriodicWordError):
                    necklace = None
                if necklace is not None and necklace not in seen:
                    seen.add(necklace)
                    rep = word_to_matrix(necklace)
                    found.append((necklace, *rep.entries()))
            if len(w) < max_len:
                stack.append((w + "L", a + b, b, c + d, d))
                stack.append((w + "R", a, a + b, c, c + d))
    return _build_records(found)


def classes_by_length(length_bound: float, worker_count: int = 1) -> list[ClassRecord]:
    """All primitive classes with geodesic length < length_bound.

    trace = xi + 1/xi = 2 cosh(length/2) is monotone in length, so the
    length bound converts to the trace bound 2 cosh(length_bound/2); the
    exact length cut is then applied record by record.  Sorted by
    (length, necklace), which coincides with the (trace, necklace) order.
    """
    if length_bound < MIN_GEODESIC_LENGTH:
        return []
    nu = int(math.floor(2.0 * math.cosh(length_bound / 2.0))) + 1
    records = enumerate_classes(EnumerationParams(trace_bound=max(nu, 3), worker_count=worker_count))
    kept = [r for r in records if r.spectral.length < length_bound]
    kept.sort(key=lambda r: (r.spectral.length, r.necklace))
    return kept


_CONJ_GENS = (GEN_L, GEN_R, GEN_L.inverse(), GEN_R.inverse())
_CONJ_INVERSE_OF = (2, 3, 0, 1)


def are_conjugate_oracle(m1: Mat2, m2: Mat2, depth: int) -> bool:
    """Bounded conjugacy search: is p * m1 * p^-1 = +-m2 for some word p
    of length <= depth in L, R and their inverses?

    A True is a certificate; False only means no conjugator was found
    within the bound (semi-decision).  Conjugacy is taken at the PSL(2,Z)
    level, hence the sign tolerance.
    """
    for m in (m1, m2):
        if abs(m.trace) <= 2:
            raise NotHyperbolicError(f"|trace| = {abs(m.trace)} <= 2")
    targets = {m2.entries(), (-m2).entries()}

    def matches(p: Mat2) -> bool:
        return (p * m1 * p.inverse()).entries() in targets

    if matches(Mat2(1, 0, 0, 1)):
        return True
    level = [(Mat2(1, 0, 0, 1), -1)]
    visited = {(1, 0, 0, 1)}
    for _ in range(depth):
        nxt = []
        for p, last in level:
            for gi, g in enumerate(_CONJ_GENS):
                if last != -1 and gi == _CONJ_INVERSE_OF[last]:
                    continue
                q = p * g
                key = q.entries()
                if key in visited:
                    continue
                visited.add(key)
                if matches(q):
                    return True
                nxt.append((q, gi))
        level = nxt
    return False
