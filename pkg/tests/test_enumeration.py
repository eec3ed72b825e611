"""Class enumeration: pruned search vs brute force, ordering, length cuts."""

import math

import pytest

from modknots.core import is_aperiodic, is_canonical, word_to_matrix
from modknots.enumeration import (
    MIN_GEODESIC_LENGTH,
    ClassRecord,
    EnumerationParams,
    OracleBoundExceededError,
    are_conjugate_oracle,
    brute_force_classes,
    classes_by_length,
    enumerate_classes,
)


def necklaces(records):
    return [r.necklace for r in records]


def test_smallest_bounds():
    assert necklaces(enumerate_classes(EnumerationParams(trace_bound=4))) == ["LR"]
    assert necklaces(enumerate_classes(EnumerationParams(trace_bound=5))) == [
        "LR",
        "LLR",
        "LRR",
    ]
    assert necklaces(enumerate_classes(EnumerationParams(trace_bound=6))) == [
        "LR",
        "LLR",
        "LRR",
        "LLLR",
        "LRRR",
    ]


def test_no_classes_below_trace_three():
    assert enumerate_classes(EnumerationParams(trace_bound=3)) == []


def test_params_validation():
    with pytest.raises(ValueError):
        EnumerationParams(trace_bound=2)
    with pytest.raises(ValueError):
        EnumerationParams(trace_bound=10, worker_count=0)


def test_matches_brute_force():
    for nu in range(4, 15):
        fast = enumerate_classes(EnumerationParams(trace_bound=nu))
        slow = brute_force_classes(nu)
        assert fast == slow, f"mismatch at trace_bound {nu}"


def test_brute_force_guard():
    with pytest.raises(OracleBoundExceededError):
        brute_force_classes(40)
    # raising the guard consciously is allowed
    assert brute_force_classes(25, guard=25)


def test_record_invariants():
    records = enumerate_classes(EnumerationParams(trace_bound=40))
    prev_key = None
    for r in records:
        assert is_canonical(r.necklace)
        assert is_aperiodic(r.necklace)
        assert word_to_matrix(r.necklace) == r.rep
        assert r.rep.a * r.rep.d - r.rep.b * r.rep.c == 1
        assert 2 < r.spectral.trace < 40
        key = (r.spectral.trace, r.necklace)
        if prev_key is not None:
            assert prev_key < key, "output must be sorted by (trace, necklace)"
        prev_key = key


def test_every_class_appears_exactly_once():
    records = enumerate_classes(EnumerationParams(trace_bound=30))
    seen = necklaces(records)
    assert len(seen) == len(set(seen))


def test_worker_count_does_not_change_output():
    base = enumerate_classes(EnumerationParams(trace_bound=60))
    for workers in (2, 3):
        assert enumerate_classes(EnumerationParams(trace_bound=60, worker_count=workers)) == base


def test_from_word_constructor():
    rec = ClassRecord.from_word("RLL")
    assert rec.necklace == "LLR"
    assert rec.rep == word_to_matrix("LLR")
    assert rec.spectral.trace == 4


def test_classes_by_length():
    bound = 6.0
    records = classes_by_length(bound)
    assert records, "length 6 admits dozens of classes"
    assert all(r.spectral.length < bound for r in records)
    # matches the trace-bounded enumeration filtered by exact length
    nu = int(math.floor(2.0 * math.cosh(bound / 2.0))) + 1
    expected = [
        r for r in enumerate_classes(EnumerationParams(trace_bound=nu))
        if r.spectral.length < bound
    ]
    assert sorted(necklaces(records)) == sorted(necklaces(expected))
    lengths = [r.spectral.length for r in records]
    assert lengths == sorted(lengths)


def test_classes_by_length_below_minimum():
    assert classes_by_length(1.0) == []
    assert classes_by_length(MIN_GEODESIC_LENGTH) == []
    # just past the smallest closed geodesic: exactly the trace 3 class
    assert necklaces(classes_by_length(MIN_GEODESIC_LENGTH + 1e-9)) == ["LR"]


def test_conjugacy_oracle_accepts_rotations():
    m1 = word_to_matrix("LLRLR")
    m2 = word_to_matrix("LRLLR")  # cyclic rotation, conjugate by a prefix
    assert are_conjugate_oracle(m1, m2, depth=6)


def test_conjugacy_oracle_accepts_projective_sign():
    m = word_to_matrix("LRR")
    assert are_conjugate_oracle(m, -m, depth=2)


def test_conjugacy_oracle_rejects_distinct_classes():
    # same trace, different necklaces: genuinely non-conjugate
    m1 = word_to_matrix("LLLRR")
    m2 = word_to_matrix("LLRRR")
    assert m1.trace == m2.trace
    assert not are_conjugate_oracle(m1, m2, depth=7)


def test_distinct_necklaces_at_equal_trace_are_not_conjugate():
    records = [r for r in enumerate_classes(EnumerationParams(trace_bound=9))]
    for i, r1 in enumerate(records):
        for r2 in records[i + 1:]:
            if r1.spectral.trace != r2.spectral.trace:
                continue
            assert not are_conjugate_oracle(r1.rep, r2.rep, depth=5)
