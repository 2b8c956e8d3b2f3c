import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import VectorLattice, generator_ranks, vector_span
from qmatroids.cdc import gabidulin_code
from qmatroids.codes import (GeneratorMatrix, RankMetricCode, dual_code, is_mrd, min_rank_distance,
                             qmatroid_from_generator, random_generator, rank_weight,
                             search_representation)
from qmatroids.errors import QMatroidError, ShapeError
from qmatroids.field import field_make, primitive_element
from qmatroids.lattice import lattice_index, subspace_from_rows
from qmatroids.linalg import Matrix
from qmatroids.qmatroid import (check_axioms, derived_structure, dualize, paving_from_collection,
                                uniform)

_LATTICES = {}


def vlat(q, n):
    if (q, n) not in _LATTICES:
        _LATTICES[q, n] = VectorLattice(lattice_index(q, n))
    return _LATTICES[q, n]


def two_planes_generator():
    f = field_make(2, 4)
    a = primitive_element(f).value
    return GeneratorMatrix(2, 4, [[1, a, 0, 0], [0, 0, 1, f.pow(a, 2)]], 4)


def two_planes_paving():
    a = subspace_from_rows([[1, 0, 0, 0], [0, 1, 0, 0]], q=2, n=4)
    b = subspace_from_rows([[0, 0, 1, 0], [0, 0, 0, 1]], q=2, n=4)
    return paving_from_collection([a, b], 2)


def test_two_planes_generator_represents_paving_example():
    t = qmatroid_from_generator(two_planes_generator())
    assert t == two_planes_paving()
    assert len(t.bases()) == 33
    g = two_planes_generator()
    assert list(t.ranks) == generator_ranks(2, 4, g.rows, 4, vlat(2, 4))


@settings(max_examples=40)
@given(st.sampled_from([(2, 2, 1), (2, 2, 2), (2, 3, 1), (2, 3, 2), (3, 2, 1), (3, 2, 2)]),
       st.integers(0, 10_000))
def test_generator_ranks_match_span_oracle(qnm, seed):
    q, n, m = qnm
    rng = random.Random(seed)
    k = rng.randint(0, n)
    g = random_generator(q, m, k, n, rng)
    t = qmatroid_from_generator(g)
    assert list(t.ranks) == generator_ranks(q, m, g.rows, n, vlat(q, n))


def test_representation_depends_only_on_row_space():
    g = two_planes_generator()
    f = g.field
    # replace row 1 by row 1 + alpha * row 2, and scale row 2
    a = primitive_element(f).value
    r1 = tuple(f.add(x, f.mul(a, y)) for x, y in zip(*g.rows))
    r2 = tuple(f.mul(f.exp(5), y) for y in g.rows[1])
    h = GeneratorMatrix(2, 4, [r1, r2], 4)
    assert qmatroid_from_generator(h) == qmatroid_from_generator(g)
    assert RankMetricCode.from_generator(h) == RankMetricCode.from_generator(g)


def brute_rank_weight(v, q, m):
    f = field_make(q, m)
    size = len(vector_span(q, m, [f.digits(x) for x in v]))
    return next(d for d in range(m + 1) if q**d == size)


@given(st.sampled_from([(2, 3), (2, 4), (3, 2)]), st.data())
def test_rank_weight(qm, data):
    q, m = qm
    f = field_make(q, m)
    v = data.draw(st.lists(st.integers(0, f.order - 1), min_size=1, max_size=5))
    assert rank_weight(v, q, m) == brute_rank_weight(v, q, m)


def brute_min_distance(code):
    return min(rank_weight(c, code.q, code.m) for c in code.codewords() if any(c))


@pytest.mark.parametrize("m,n,k", [(2, 2, 1), (3, 3, 1), (3, 3, 2), (4, 3, 2), (4, 4, 2), (3, 2, 1)])
def test_gabidulin_is_mrd(m, n, k):
    code = RankMetricCode.from_generator(gabidulin_code(2, m, n, k))
    d = min_rank_distance(code)
    assert d == n - k + 1 == brute_min_distance(code)
    assert is_mrd(code)
    # an MRD code of dimension k represents the uniform q-matroid U_{k,n}
    assert qmatroid_from_generator(code.generator) == uniform(2, n, k)


def test_non_mrd_code():
    g = GeneratorMatrix(2, 2, [[1, 1, 0]], 3)
    code = RankMetricCode.from_generator(g)
    assert min_rank_distance(code) == 1 == brute_min_distance(code)
    assert not is_mrd(code)


@pytest.mark.parametrize("seed", range(12))
def test_dual_code_represents_dual_qmatroid(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    k = rng.randint(0, n)
    g = random_generator(2, rng.randint(1, 3), k, n, rng)
    code = RankMetricCode.from_generator(g)
    dual = dual_code(code)
    assert dual.k == n - k
    assert qmatroid_from_generator(dual.generator) == dualize(qmatroid_from_generator(g))
    assert dual_code(dual) == code


def loop_space_generator(q, n, k):
    """Rank-1 generator with loop space <e_1..e_k>: (0^k, 1, b, .., b^(n-k-1)) over F_{q^(n-k)}."""
    f = field_make(q, n - k)
    b = primitive_element(f).value
    return GeneratorMatrix(q, n - k, [[0] * k + [f.pow(b, i) for i in range(n - k)]], n)


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (2, 4), (3, 3)])
def test_rank1_loop_space_representations(q, n):
    for k in range(n):
        t = qmatroid_from_generator(loop_space_generator(q, n, k))
        s = derived_structure(t)
        expected = subspace_from_rows([[int(i == j) for j in range(n)] for i in range(k)], q=q, n=n)
        assert t.rank == 1 and s.loop_space == expected


def test_rank1_generator_over_too_small_field_fails():
    # over F_{q^k} with n - k > k the entries 1, a, .., a^(n-k-1) are dependent,
    # so the loop space is larger than <e_1..e_k>; here k = 1, a = 1
    g = GeneratorMatrix(2, 1, [[0, 1, 1, 1]], 4)
    s = derived_structure(qmatroid_from_generator(g))
    assert s.loop_space.dim > 1


def test_search_finds_two_planes_generator():
    g = search_representation(two_planes_paving(), 4)
    assert g is not None and g.m == 4
    assert qmatroid_from_generator(g) == two_planes_paving()
    assert g == two_planes_generator()


def test_search_on_small_cases():
    assert search_representation(uniform(2, 3, 0), 1).k == 0
    g = search_representation(uniform(2, 3, 1), 3)
    assert g.m == 3 and qmatroid_from_generator(g) == uniform(2, 3, 1)
    assert search_representation(uniform(2, 3, 1), 2) is None
    g = search_representation(uniform(2, 2, 2), 1)
    assert g.m == 1


def test_generator_validation():
    with pytest.raises(QMatroidError):
        GeneratorMatrix(4, 1, [[1, 0]], 2)  # ground field must be prime
    with pytest.raises(QMatroidError):
        GeneratorMatrix(2, 2, [[1, 1], [1, 1]], 2)
    with pytest.raises(ShapeError):
        GeneratorMatrix(2, 2, [[1, 4]], 2)
    with pytest.raises(ShapeError):
        GeneratorMatrix(2, 2, [[1, 1, 0]], 2)
    m = Matrix(field_make(2, 3), [[1, 3, 5]])
    assert GeneratorMatrix.from_matrix(2, m).rows == ((1, 3, 5),)
    assert GeneratorMatrix(2, 1, (), 3).k == 0


def test_random_generator_is_seeded():
    a = random_generator(3, 2, 2, 3, seed=11)
    b = random_generator(3, 2, 2, 3, seed=11)
    assert a == b and a.k == 2 and check_axioms(qmatroid_from_generator(a)).ok
