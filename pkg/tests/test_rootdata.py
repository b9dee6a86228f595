from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from uqglmn.rootdata import (
    Branch,
    IndefiniteDegreeSign,
    IndexOutOfRange,
    NotStrictlyOrdered,
    Superdim,
    bilinear,
    cartan_pairing,
    classify,
    d_sign,
    degree_sign,
    lex_compare,
    parity_index,
    positive_roots,
    root_parity,
    simple_root_coords,
    weight_of,
)

DIMS = [Superdim(M, N) for M in range(1, 5) for N in range(1, 5) if M != N and M + N <= 6]
dims = st.sampled_from(DIMS)


def test_superdim_rejects_equal_and_empty():
    for M, N in [(2, 2), (0, 3), (3, 0)]:
        with pytest.raises(ValueError):
            Superdim(M, N)
    assert Superdim(2, 3).n == 5


def test_parity_and_signs():
    assert parity_index(Superdim(2, 1), 1) == 0
    assert parity_index(Superdim(2, 1), 3) == 1
    assert parity_index(Superdim(1, 2), 2) == 1
    assert d_sign(Superdim(2, 1), 2) == 1
    assert d_sign(Superdim(2, 1), 3) == -1
    assert d_sign(Superdim(1, 3), 1) == 1
    with pytest.raises(IndexOutOfRange):
        parity_index(Superdim(2, 1), 4)


def test_root_parity():
    assert root_parity(Superdim(2, 1), (1, 3)) == 1
    assert root_parity(Superdim(2, 1), (1, 2)) == 0
    assert root_parity(Superdim(2, 3), (3, 4)) == 0
    with pytest.raises(IndexOutOfRange):
        root_parity(Superdim(2, 1), (2, 2))


def test_bilinear_examples():
    assert bilinear(Superdim(2, 1), (1, 2), (2, 3)) == -1
    assert bilinear(Superdim(2, 3), (2, 3), (2, 3)) == 0
    assert bilinear(Superdim(2, 3), (1, 2), (3, 4)) == 0


def test_cartan_pairing_examples():
    assert cartan_pairing(Superdim(2, 1), (1, 3), (1, 0, 0)) == 1
    assert cartan_pairing(Superdim(2, 3), (2, 4), (0, 1, 0, -1, 0)) == 2
    assert cartan_pairing(Superdim(2, 1), (1, 2), (0, 0, 0)) == 0


def test_lex_order():
    assert lex_compare((1, 5), (2, 3)) == -1
    assert lex_compare((2, 3), (2, 4)) == -1
    assert lex_compare((1, 4), (1, 4)) == 0


def test_classify_examples():
    d = Superdim(2, 3)
    assert classify(d, (1, 2), (1, 3)) is Branch.I
    assert classify(d, (1, 4), (2, 3)) is Branch.II
    assert classify(d, (1, 3), (2, 4)) is Branch.IV
    assert classify(d, (1, 2), (2, 3)) is Branch.V
    assert classify(d, (1, 2), (3, 4)) is Branch.VI
    assert classify(d, (1, 3), (2, 3)) is Branch.III
    with pytest.raises(NotStrictlyOrdered):
        classify(d, (2, 3), (1, 2))


def test_weights():
    d = Superdim(2, 1)
    assert weight_of(d, (1, 3), "E") == (1, 0, -1)
    assert weight_of(d, (1, 3), "F") == (-1, 0, 1)


def _table_branch(r, s):
    # direct transcription of the interval patterns, independent of classify
    (i, j), (m, n) = r, s
    if i == m:
        return Branch.I
    if n < j:
        return Branch.II
    if n == j:
        return Branch.III
    if m < j < n:
        return Branch.IV
    if m == j:
        return Branch.V
    return Branch.VI


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_classification_exhaustive(dim):
    roots = positive_roots(dim)
    counts = {b: 0 for b in Branch}
    for r, s in combinations(roots, 2):
        b = classify(dim, r, s)
        counts[b] += 1
        (i, j), (m, n) = r, s
        preds = {
            Branch.I: i == m,
            Branch.II: i < m and n < j,
            Branch.III: i < m and n == j,
            Branch.IV: i < m < j < n,
            Branch.V: m == j,
            Branch.VI: j < m,
        }
        assert [k for k, v in preds.items() if v] == [b]
        assert b is _table_branch(r, s)
    from math import comb

    n = dim.n
    assert counts[Branch.I] == counts[Branch.III] == counts[Branch.V] == comb(n, 3)
    assert counts[Branch.II] == counts[Branch.IV] == counts[Branch.VI] == comb(n, 4)


@pytest.mark.parametrize("dim", DIMS, ids=str)
def test_table_values(dim):
    par = lambda k: parity_index(dim, k)
    sgn = lambda e: -1 if e % 2 else 1
    for r, s in combinations(positive_roots(dim), 2):
        (i, j), (m, n) = r, s
        b = classify(dim, r, s)
        form = {
            Branch.I: sgn(par(i)),
            Branch.II: 0,
            Branch.III: sgn(par(j)),
            Branch.IV: 0,
            Branch.V: -sgn(par(j)),
            Branch.VI: 0,
        }[b]
        assert bilinear(dim, r, s) == form
        assert bilinear(dim, r, s) == bilinear(dim, s, r)
        pcol = {
            Branch.I: par(i) + par(j),
            Branch.II: par(m) + par(n),
            Branch.III: par(m) + par(j),
            Branch.IV: par(m) + par(j),
            Branch.V: 0,
            Branch.VI: 0,
        }[b] % 2
        assert root_parity(dim, r) * root_parity(dim, s) == pcol


@given(dims, st.data())
def test_cartan_pairing_additive(dim, data):
    i = data.draw(st.integers(1, dim.n - 1))
    j = data.draw(st.integers(i + 1, dim.n))
    c = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=dim.n, max_size=dim.n)))
    assert cartan_pairing(dim, (i, j), c) == sum(cartan_pairing(dim, (k, k + 1), c) for k in range(i, j))


@given(dims, st.data())
def test_weight_sum_vanishes(dim, data):
    i = data.draw(st.integers(1, dim.n - 1))
    j = data.draw(st.integers(i + 1, dim.n))
    e, f = weight_of(dim, (i, j), "E"), weight_of(dim, (i, j), "F")
    assert all(a + b == 0 for a, b in zip(e, f))
    assert degree_sign(e) == 1 and degree_sign(f) == -1
    assert simple_root_coords(e) == tuple(1 if i <= k < j else 0 for k in range(1, dim.n))


def test_degree_sign_indefinite():
    with pytest.raises(IndefiniteDegreeSign):
        degree_sign((1, -2, 1))
    with pytest.raises(IndefiniteDegreeSign):
        degree_sign((0, 0, 0))
