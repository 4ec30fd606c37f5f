import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcldpc.bounds import bound_eq2
from qcldpc.matrix import WeightMatrix
from qcldpc.wm_enum import REFERENCE_COUNTS, canonicalize_wm, enumerate_wm


def brute_classes(J, L, col_sum, row_sum, max_entry):
    """Classes by full row-and-column permutation search over all candidate matrices."""
    rows = [t for t in itertools.product(range(max_entry + 1), repeat=L) if sum(t) == row_sum]
    found = set()
    for M in itertools.product(rows, repeat=J):
        if any(sum(col) != col_sum for col in zip(*M)):
            continue
        found.add(
            min(
                tuple(tuple(row[c] for c in cp) for row in rp)
                for rp in itertools.permutations(M)
                for cp in itertools.permutations(range(L))
            )
        )
    return found


@pytest.mark.parametrize("key", [(3, 4, 3, 4, 1), (3, 4, 3, 4, 2), (3, 4, 3, 4, 3), (2, 4, 2, 2, 2), (3, 5, 3, 5, 2)])
def test_enumeration_matches_brute_force(key):
    got = {c.canonical.entries for c in enumerate_wm(*key)}
    assert got == brute_classes(*key)


def test_two_valued_classes():
    classes = enumerate_wm(3, 4, 3, 4, 2)
    assert len(classes) == REFERENCE_COUNTS[(3, 4, 3, 4, 2)] == 5
    assert sorted(c.bound for c in classes) == [24, 28, 30, 32, 32]


def test_three_valued_classes():
    classes = enumerate_wm(3, 4, 3, 4, 3)
    # one class more than the reference list: [[3,1,0,0],[0,2,2,0],[0,0,1,3]]
    assert len(classes) == 9
    assert {38, 40, 54} <= {c.bound for c in classes}
    extra = canonicalize_wm(WeightMatrix.from_rows([[3, 1, 0, 0], [0, 2, 2, 0], [0, 0, 1, 3]]))
    assert WeightMatrix.from_rows([[0, 0, 1, 3], [0, 2, 2, 0], [3, 1, 0, 0]]) == extra
    assert {c.canonical: c.bound for c in classes}[extra] == 48


def test_five_column_top_bound():
    classes = enumerate_wm(3, 5, 3, 5, 2)
    assert classes[0].bound == 28
    top = [c.canonical for c in classes if c.bound == 28]
    assert WeightMatrix.from_rows([[0, 0, 1, 2, 2], [1, 1, 1, 1, 1], [2, 2, 1, 0, 0]]) in top


def test_all_ones_is_the_only_monomial_class():
    classes = enumerate_wm(3, 4, 3, 4, 1)
    assert len(classes) == 1
    assert classes[0].canonical.entries == ((1,) * 4,) * 3 and classes[0].bound == 24


def test_inconsistent_sums_give_nothing():
    assert enumerate_wm(3, 4, 3, 3, 2) == []
    assert enumerate_wm(3, 4, 3, 4, 0) == []


def test_size_guard():
    with pytest.raises(ValueError):
        enumerate_wm(7, 7, 1, 1, 1)
    with pytest.raises(ValueError):
        canonicalize_wm(WeightMatrix.from_rows([[1] * 9]))


def test_sorted_by_bound_then_form():
    classes = enumerate_wm(3, 4, 3, 4, 3)
    keys = [(-c.bound, c.canonical.entries) for c in classes]
    assert keys == sorted(keys)
    assert all(c.bound == bound_eq2(c.canonical).value for c in classes)


def test_no_bound_without_enough_columns():
    classes = enumerate_wm(2, 2, 1, 1, 1)
    assert [c.bound for c in classes] == [float("inf")]


matrices = st.integers(1, 4).flatmap(
    lambda J: st.integers(1, 5).flatmap(
        lambda L: st.lists(st.lists(st.integers(0, 3), min_size=L, max_size=L), min_size=J, max_size=J)
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_canonical_form_is_permutation_invariant(rows, rnd):
    A = WeightMatrix.from_rows(rows)
    rp = list(range(A.J))
    cp = list(range(A.L))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    B = WeightMatrix.from_rows([[rows[j][i] for i in cp] for j in rp])
    cA = canonicalize_wm(A)
    assert canonicalize_wm(B) == cA
    assert canonicalize_wm(cA) == cA
    assert sorted(cA.row_sums()) == sorted(A.row_sums())


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_canonical_form_is_lexicographic_minimum(rows):
    A = WeightMatrix.from_rows(rows)
    if A.J * A.L > 12:
        return
    best = min(
        tuple(tuple(row[c] for c in cp) for row in rp)
        for rp in itertools.permutations(A.entries)
        for cp in itertools.permutations(range(A.L))
    )
    assert canonicalize_wm(A).entries == best
