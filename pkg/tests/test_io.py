import json

import pytest
from hypothesis import given, strategies as st

from qmatroids import load_fixture
from qmatroids.cdc import ConstantDimensionCode, lifted_mrd
from qmatroids.codes import random_generator, search_representation
from qmatroids.errors import QMatroidError
from qmatroids.field import field_make
from qmatroids.io import (FORMAT_TAG, SearchResult, SweepReport, dumps, field_from_descriptor,
                          from_json, loads, to_json)
from qmatroids.lattice import enumerate_grassmannian, lattice_index
from qmatroids.linalg import Matrix
from qmatroids.qmatroid import RankTable, check_axioms, uniform
from qmatroids.zeropattern import ZeroPattern, det_system, sweep_patterns

FIELDS = [(2, 1), (2, 4), (3, 2), (5, 1), (11, 2), (13, 1)]


def roundtrip(obj):
    text = dumps(obj)
    back = loads(text)
    assert dumps(back) == text
    assert text.endswith("\n") and "\n" not in text[:-1]
    assert json.loads(text)["format"] == FORMAT_TAG
    return back


@given(st.sampled_from(FIELDS), st.integers(0, 10**6))
def test_element_roundtrip(pe, v):
    f = field_make(*pe)
    x = f(v % f.order)
    assert roundtrip(x) == x


@given(st.sampled_from(FIELDS), st.integers(1, 4), st.integers(1, 4), st.randoms())
def test_matrix_roundtrip(pe, r, c, rnd):
    f = field_make(*pe)
    m = Matrix(f, [[rnd.randrange(f.order) for _ in range(c)] for _ in range(r)], c)
    back = roundtrip(m)
    assert back.rows == m.rows and back.field == f


@given(st.sampled_from([(2, 3), (2, 4), (3, 2), (5, 2)]), st.data())
def test_subspace_roundtrip(qn, data):
    idx = lattice_index(*qn)
    s = idx[data.draw(st.integers(0, len(idx) - 1))]
    assert roundtrip(s) == s


@given(st.sampled_from([(2, 2, 2, 3), (2, 3, 2, 4), (3, 2, 1, 3), (2, 4, 1, 4)]),
       st.integers(0, 10**6))
def test_generator_roundtrip(params, seed):
    q, m, k, n = params
    g = random_generator(q, m, k, n, seed=seed)
    assert roundtrip(g) == g


def test_qmatroid_cdc_search_roundtrip():
    t = uniform(2, 4, 2)
    assert roundtrip(t) == t
    code = lifted_mrd(2, 4, 2, 4)
    back = roundtrip(code)
    assert (back.bases == code.bases).all()
    empty = ConstantDimensionCode(2, 4, 2, [])
    assert len(roundtrip(empty)) == 0
    hit = SearchResult(search_representation(uniform(2, 3, 1), 3), 3)
    assert roundtrip(hit) == hit and hit.found and hit.m == 3
    miss = SearchResult(None, 2)
    back = roundtrip(miss)
    assert back == miss and not back.found and back.m is None


def test_sweep_pattern_check_roundtrip():
    pats = sweep_patterns(det_system(2, 2, 1), 1)
    rep = SweepReport(2, 2, 1, 1, len(pats), 7, pats)
    assert roundtrip(rep) == rep and rep.within_bound
    assert roundtrip(SweepReport(2, 2, 1, 1, 4, 7)) == SweepReport(2, 2, 1, 1, 4, 7)
    p = ZeroPattern("0**0")
    assert roundtrip(p) == p
    ok = check_axioms(uniform(2, 3, 1))
    assert roundtrip(ok) == ok
    bad = RankTable(2, 3, [0] + [1] * 7 + [1] * 7 + [3])
    report = check_axioms(bad)
    assert not report.ok
    assert roundtrip(report) == report


def test_field_descriptor_format():
    d = to_json(field_make(2, 4)(2))
    assert d["field"] == {"p": 2, "e": 4, "modulus": [1, 1, 0, 0, 1]}
    assert d["value"] == "0100"
    wide = to_json(field_make(11, 2)(11 * 3 + 10))
    assert wide["value"] == "10.3"
    with pytest.raises(QMatroidError):
        field_from_descriptor({"p": 2, "e": 4, "modulus": [1, 0, 0, 1, 1]})


def test_rejects_bad_documents():
    with pytest.raises(QMatroidError):
        from_json({"format": "qml-v0", "type": "pattern", "pattern": "0"})
    with pytest.raises(QMatroidError):
        from_json({"format": FORMAT_TAG, "type": "nonsense"})
    d = to_json(uniform(2, 2, 1))
    d["ordering"] = "other"
    with pytest.raises(QMatroidError):
        from_json(d)
    s = to_json(enumerate_grassmannian(2, 3, 2)[0])
    s["basis"] = list(reversed(s["basis"]))
    with pytest.raises(QMatroidError):
        from_json(s)
    with pytest.raises(TypeError):
        to_json(object())


def test_fixtures_load():
    assert load_fixture("uniform_2_4.json") == uniform(2, 4, 2)
    assert len(load_fixture("spread_f2_4.json")) == 5
    g = load_fixture("two_planes_generator.json")
    assert (g.q, g.m, g.n) == (2, 4, 4)
    for name in ["two_planes_code.json", "two_planes_paving.json", "uniform_2_4.json",
                 "spread_f2_4.json", "two_planes_generator.json"]:
        raw = load_fixture(name, raw=True)
        assert dumps(from_json(raw)) == dumps(raw)
