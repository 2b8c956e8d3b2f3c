import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import vector_span
from qmatroids.cdc import (ConstantDimensionCode, _all_distinct, cdc_to_paving, gabidulin_code,
                           grassmann_independent_check, greedy_partial_spread, has_min_distance,
                           lifted_mrd, min_subspace_distance_cdc)
from qmatroids.errors import InvalidCollection, QMatroidError, ShapeError
from qmatroids.lattice import enumerate_grassmannian, subspace_from_rows
from qmatroids.qmatroid import check_axioms, derived_structure


def literal_distance(q, n, a, b):
    sa, sb = vector_span(q, n, a.basis), vector_span(q, n, b.basis)
    inter = len(sa & sb)
    d = next(i for i in range(n + 1) if q**i == inter)
    return 2 * (a.dim - d)


@pytest.mark.parametrize("q,n,k,d", [(2, 4, 2, 4), (2, 5, 2, 4), (2, 6, 3, 4), (2, 6, 3, 6),
                                     (3, 4, 2, 4), (3, 5, 2, 4), (2, 7, 3, 4)])
def test_lifted_mrd_size_and_distance(q, n, k, d):
    code = lifted_mrd(q, n, k, d)
    assert len(code) == q ** ((n - k) * (k - d // 2 + 1))
    if len(code) <= 300:
        words = code.codewords
        dist = min(literal_distance(q, n, a, b) for a, b in itertools.combinations(words, 2))
        assert dist == d == min_subspace_distance_cdc(code)
    assert has_min_distance(code, d)
    if d + 2 <= 2 * k:
        assert not has_min_distance(code, d + 2)


@st.composite
def random_codes(draw):
    q, n, k = draw(st.sampled_from([(2, 4, 2), (2, 5, 2), (2, 6, 3), (3, 4, 2), (2, 5, 3)]))
    pool = enumerate_grassmannian(q, n, k)
    picks = draw(st.lists(st.integers(0, len(pool) - 1), min_size=2, max_size=12, unique=True))
    return ConstantDimensionCode.from_subspaces([pool[i] for i in picks])


@settings(max_examples=80)
@given(random_codes(), st.integers(1, 7))
def test_collision_check_matches_pairwise(code, d):
    literal = min(literal_distance(code.q, code.n, a, b)
                  for a, b in itertools.combinations(code.codewords, 2))
    assert has_min_distance(code, d) == (literal >= d)
    assert min_subspace_distance_cdc(code) == literal


def test_all_distinct_against_python_sets():
    rng = np.random.default_rng(0)
    for base, width in [(2, 5), (3, 30), (2, 100), (5, 40)]:
        rows = rng.integers(0, base, size=(200, width))
        expect = len({tuple(r) for r in rows.tolist()}) == len(rows)
        assert _all_distinct(rows, base) == expect
        dup = np.vstack([rows, rows[:1]])
        assert not _all_distinct(dup, base)


def test_gabidulin_generator_shape():
    g = gabidulin_code(2, 4, 3, 2)
    f = g.field
    assert g.k == 2 and g.n == 3
    # row i is row 0 raised to q^i entrywise
    assert g.rows[1] == tuple(f.pow(x, 2) for x in g.rows[0])
    with pytest.raises(QMatroidError):
        gabidulin_code(2, 2, 3, 1)
    with pytest.raises(QMatroidError):
        gabidulin_code(4, 2, 2, 1)


def test_lifted_mrd_parameter_errors():
    with pytest.raises(QMatroidError):
        lifted_mrd(2, 4, 3, 4)  # 2k > n
    with pytest.raises(QMatroidError):
        lifted_mrd(2, 6, 3, 5)
    with pytest.raises(QMatroidError):
        lifted_mrd(2, 6, 3, 2)
    with pytest.raises(QMatroidError):
        lifted_mrd(2, 6, 2, 6)  # d > 2k


def test_lifted_codewords_have_identity_prefix():
    code = lifted_mrd(3, 5, 2, 4)
    assert (code.bases[:, :, :2] == np.eye(2, dtype=np.int64)).all()
    assert code[0].dim == 2 and len(list(code)) == len(code)


def test_code_container_validation():
    a = subspace_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], q=2, n=4)
    b = subspace_from_rows([[1, 0, 0, 0]], q=2, n=4)
    with pytest.raises(QMatroidError):
        ConstantDimensionCode.from_subspaces([a, a])
    with pytest.raises(QMatroidError):
        ConstantDimensionCode.from_subspaces([a, b])
    with pytest.raises(QMatroidError):
        ConstantDimensionCode.from_subspaces([])
    with pytest.raises(ShapeError):
        ConstantDimensionCode(2, 4, 2, [[[1, 0, 0]]])
    assert len(ConstantDimensionCode.from_subspaces([], q=2, n=4, k=2)) == 0
    with pytest.raises(QMatroidError):
        min_subspace_distance_cdc(ConstantDimensionCode.from_subspaces([a]))


def test_spread_and_paving_bridge():
    spread = greedy_partial_spread(2, 4, 2)
    assert len(spread) == 5
    # a spread partitions the nonzero vectors of F_2^4
    covered = [v for s in spread for v in vector_span(2, 4, s.basis) if any(v)]
    assert len(covered) == len(set(covered)) == 15
    code = ConstantDimensionCode.from_subspaces(spread)
    assert min_subspace_distance_cdc(code) == 4
    assert grassmann_independent_check(spread, 2)
    t = cdc_to_paving(code)
    assert check_axioms(t).ok and set(t.non_bases()) == set(spread)
    assert derived_structure(t).is_paving


def test_cdc_to_paving_rejects_small_distance():
    a = subspace_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], q=2, n=4)
    c = subspace_from_rows([[1, 0, 0, 0], [0, 0, 1, 0]], q=2, n=4)
    assert not grassmann_independent_check([a, c], 2)
    with pytest.raises(InvalidCollection):
        cdc_to_paving(ConstantDimensionCode.from_subspaces([a, c]))


def test_subsets_of_lifted_code_give_distinct_pavings():
    words = lifted_mrd(2, 4, 2, 4).codewords
    assert len(words) == 4
    tables = set()
    for r in range(len(words) + 1):
        for sub in itertools.combinations(words, r):
            tables.add(cdc_to_paving(ConstantDimensionCode.from_subspaces(sub, q=2, n=4, k=2)))
    assert len(tables) == 16


def test_random_partial_spreads_are_independent():
    rng = random.Random(3)
    pool = enumerate_grassmannian(2, 5, 2)
    for _ in range(5):
        rng.shuffle(pool)
        chosen = []
        for s in pool:
            if all((s & c).dim == 0 for c in chosen):
                chosen.append(s)
        assert grassmann_independent_check(chosen, 2)
        assert has_min_distance(ConstantDimensionCode.from_subspaces(chosen), 4)
