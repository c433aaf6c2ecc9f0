import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from indpoly.gf2 import Gf2Matrix
from indpoly.matroid import BinaryMatroid, MatroidError


def random_matroid(rng, p=3, q=3):
    rows = [[rng.randint(0, 1) for _ in range(q)] for _ in range(p)]
    return BinaryMatroid.from_matrix(Gf2Matrix.from_entries(rows, num_cols=q))


matrix_entries = st.lists(
    st.lists(st.integers(0, 1), min_size=3, max_size=3),
    min_size=2, max_size=3)


def test_labels_and_errors():
    m = BinaryMatroid.from_matrix(Gf2Matrix.identity(2))
    assert m.elements == ("e1", "e2", "e3", "e4")
    assert m.index_of("e3") == 2
    with pytest.raises(MatroidError):
        m.index_of("nope")
    with pytest.raises(MatroidError):
        BinaryMatroid.from_matrix(Gf2Matrix.identity(2), ["x", "x", "y", "z"])


@given(matrix_entries)
def test_rank_is_monotone_and_submodular(rows):
    m = BinaryMatroid.from_matrix(
        Gf2Matrix.from_entries(rows, num_cols=len(rows[0])))
    elems = list(m.elements)
    subsets = [set(c) for r in range(len(elems) + 1)
               for c in itertools.combinations(elems, r)]
    for a in subsets:
        for b in subsets:
            ra, rb = m.rank_of(a), m.rank_of(b)
            if a <= b:
                assert ra <= rb
            assert (m.rank_of(a | b) + m.rank_of(a & b) <= ra + rb)


def test_dual_rank_relation():
    rng = random.Random(7)
    for _ in range(10):
        m = random_matroid(rng, 3, 4)
        d = m.dual()
        assert set(d.elements) == set(m.elements)
        assert d.dual().columns == m.columns
        full = m.rank()
        ground = set(m.elements)
        for r in range(len(ground) + 1):
            for s in itertools.combinations(sorted(ground), r):
                s = set(s)
                assert d.rank_of(s) == len(s) + m.rank_of(ground - s) - full


def test_minor_rank_formula():
    rng = random.Random(11)
    for _ in range(20):
        m = random_matroid(rng, 3, 4)
        elems = list(m.elements)
        rng.shuffle(elems)
        contract = []
        for e in elems[:2]:
            if m.is_independent(contract + [e]):
                contract.append(e)
        delete = [e for e in elems[2:3] if e not in contract]
        sub = m.minor(delete, contract)
        rc = m.rank_of(contract)
        for r in range(len(sub.elements) + 1):
            for s in itertools.combinations(sub.elements, r):
                assert sub.rank_of(s) == m.rank_of(set(s) | set(contract)) - rc


def test_minor_errors():
    m = BinaryMatroid.from_matrix(Gf2Matrix.from_entries([[1, 1]]))
    with pytest.raises(MatroidError):
        m.minor(["e1"], ["e1"])
    with pytest.raises(MatroidError):
        m.minor([], ["e2", "e3"])  # parallel pair is dependent


def test_greedy_matches_enumeration():
    rng = random.Random(3)
    for _ in range(25):
        m = random_matroid(rng, 3, 3)
        weights = {e: rng.randint(-5, 5) for e in m.elements}
        _, got = m.greedy_max(weights)
        best = max(sum(weights[e] for e in s)
                   for s in m.independent_sets(10))
        assert got == best


def test_independent_sets_order_and_cap():
    m = BinaryMatroid.from_matrix(Gf2Matrix.identity(2))
    sets = m.independent_sets(10)
    assert sets[0] == frozenset()
    assert len(sets) == len(set(sets))
    for s in sets:
        assert m.is_independent(s)
    with pytest.raises(MatroidError):
        m.independent_sets(cap=2)


def test_loops_and_coloops():
    # A's zero column is a loop; identity element of a zero row is a coloop.
    m = BinaryMatroid.from_matrix(
        Gf2Matrix.from_entries([[0, 1], [0, 0]]))
    assert m.rank_of(["e3"]) == 0          # loop
    assert all(m.is_independent({"e2"} | set(s))
               for s in m.independent_sets(10) if "e2" not in s)
