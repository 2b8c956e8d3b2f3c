import csv
import io
import json
import subprocess
import sys

import pytest

from qmatroids import load_fixture
from qmatroids.cli import VERBS, run
from qmatroids.fixtures import fixture_path
from qmatroids.io import dumps, loads
from qmatroids.qmatroid import dualize, uniform


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def ok(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return out


def fx(name):
    return str(fixture_path(name))


def test_qbinom():
    assert ok("qbinom", "-n", 4, "-k", 2, "-q", 2) == "35\n"


def test_check_uniform_fixture():
    assert json.loads(ok("check", "--in", fx("uniform_2_4.json")))["verdict"] == "pass"


def test_search_rep_two_planes():
    doc = json.loads(ok("search-rep", "--in", fx("two_planes_paving.json"), "--m-max", 4))
    assert doc["found"] and doc["m"] == 4 and doc["m_max"] == 4
    g = loads(json.dumps(doc["generator"]))
    from qmatroids.codes import qmatroid_from_generator
    assert qmatroid_from_generator(g) == load_fixture("two_planes_paving.json")


def test_paving_matches_from_generator():
    a = ok("paving", "--in", fx("two_planes_code.json"))
    b = ok("from-generator", "--in", fx("two_planes_generator.json"))
    assert a == b
    st = json.loads(ok("structure", "--in", fx("two_planes_paving.json")))
    assert len(st["bases"]) == 33 and st["is_paving"] and st["rank"] == 2


def test_dual_and_uniform(tmp_path):
    p = tmp_path / "u.json"
    assert ok("uniform", "-q", 2, "-n", 4, "-k", 1, "--out", p) == ""
    assert loads(p.read_text()) == uniform(2, 4, 1)
    assert loads(ok("dual", "--in", p)) == dualize(uniform(2, 4, 1)) == uniform(2, 4, 3)


def test_enumerate_subspaces_json_and_csv():
    doc = json.loads(ok("enumerate-subspaces", "-q", 2, "-n", 3))
    assert doc["count"] == 16
    rows = list(csv.reader(io.StringIO(ok("enumerate-subspaces", "-q", 2, "-n", 4, "-k", 2,
                                          "--format", "csv"))))
    assert rows[0] == ["index", "dim", "basis"] and len(rows) == 36


def test_from_generator_seeded_is_reproducible():
    a = ok("from-generator", "-q", 2, "-m", 3, "-k", 2, "-n", 4, "--seed", 7)
    assert a == ok("from-generator", "-q", 2, "-m", 3, "-k", 2, "-n", 4, "--seed", 7)
    code, _, err = call("from-generator", "-q", 2, "-m", 3, "-k", 2, "-n", 4)
    assert code == 2 and "--seed" in err


def test_cdc_verbs(tmp_path):
    p = tmp_path / "c.json"
    ok("lifted-mrd", "-q", 2, "-n", 6, "-k", 3, "--d", 4, "--out", p)
    code = loads(p.read_text())
    assert len(code) == 64
    assert json.loads(ok("cdc-distance", "--in", p))["min_distance"] >= 4
    assert json.loads(ok("cdc-distance", "--in", p, "--d", 4))["holds"] is True
    assert json.loads(ok("cdc-distance", "--in", p, "--d", 6))["holds"] is False
    t = loads(ok("cdc-to-paving", "--in", p))
    assert t.rank == 3


def test_cdc_to_paving_rejects_close_code(tmp_path):
    from qmatroids.cdc import ConstantDimensionCode
    from qmatroids.lattice import enumerate_grassmannian
    lines = enumerate_grassmannian(2, 3, 2)[:2]
    p = tmp_path / "bad.json"
    p.write_text(dumps(ConstantDimensionCode.from_subspaces(lines)))
    code, out, err = call("cdc-to-paving", "--in", p)
    assert code == 1 and out == "" and "distance" in err


def test_zero_sweep_and_pattern_of(tmp_path):
    doc = json.loads(ok("zero-sweep", "-q", 2, "-n", 2, "-k", 1, "-m", 1, "--list"))
    assert doc["count"] == 4 and doc["bound"] == 7 and len(doc["patterns"]) == 4
    threaded = json.loads(ok("zero-sweep", "-q", 2, "-n", 3, "-k", 1, "-m", 2, "--threads", 4))
    assert threaded == json.loads(ok("zero-sweep", "-q", 2, "-n", 3, "-k", 1, "-m", 2))
    pat = json.loads(ok("pattern-of", "--in", fx("two_planes_paving.json")))["pattern"]
    assert pat.count("0") == 2 and len(pat) == 35


def test_bounds_table():
    doc = json.loads(ok("bounds-table", "-q", 2, "--n-from", 4, "--n-to", 40))
    assert doc["crossover"] == load_fixture("bounds_crossover.json", raw=True)["n0"]["q2_corrected"]
    assert len(doc["rows"]) == 37
    text = ok("bounds-table", "-q", 2, "--n-from", 4, "--n-to", 10, "--format", "csv")
    assert text.splitlines()[0] == "n,log2_lower_N,log2_upper_R,gap"
    printed = json.loads(ok("bounds-table", "-q", 2, "--n-from", 10, "--n-to", 10, "--printed"))
    assert printed["rows"][0]["log2_upper_R"] == \
        load_fixture("bounds_crossover.json", raw=True)["upper_R_all_10_2_printed"]


def test_rank1_census_and_enumerate():
    doc = json.loads(ok("rank1-census", "-q", 2, "-n", 3, "--m-max", 3))
    assert doc["count"] == doc["formula"] == doc["representable"] == 15
    doc = json.loads(ok("enumerate-qmatroids", "-q", 2, "-n", 2, "-k", 2))
    assert doc["count"] == len(doc["ranks"])
    text = ok("enumerate-qmatroids", "-q", 2, "-n", 2, "-k", 1, "--format", "csv")
    assert text.startswith("index,rank,ranks\n")


def test_exit_codes():
    assert call("no-such-verb")[0] == 2
    assert call("qbinom", "-n", 4)[0] == 2
    assert call("qbinom", "-n", 4, "-k", 2, "-q", 2, "--bogus")[0] == 2
    assert call("uniform", "-q", 2, "-n", 3, "-k", 1, "--format", "csv")[0] == 2
    assert call("zero-sweep", "-q", 2, "-n", 2, "-k", 1, "-m", 1, "--threads", 0)[0] == 2
    assert call("uniform", "-q", 6, "-n", 3, "-k", 1)[0] == 1
    assert call("uniform", "-q", 2, "-n", 3, "-k", 5)[0] == 1
    assert call("check", "--in", "/nonexistent/file.json")[0] == 1
    assert call("dual", "--in", fx("two_planes_generator.json"))[0] == 1


def test_bad_json_input(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    code, _, err = call("check", "--in", p)
    assert code == 1 and "not valid JSON" in err


def test_check_failing_table(tmp_path):
    from qmatroids.qmatroid import RankTable
    p = tmp_path / "bad.json"
    p.write_text(dumps(RankTable(2, 2, [1, 1, 1, 1, 1])))
    doc = json.loads(ok("check", "--in", p))
    assert doc["verdict"] == "fail" and doc["axiom"] == 1
    assert call("structure", "--in", p)[0] == 1


@pytest.mark.parametrize("argv", [
    ["qbinom", "-n", 6, "-k", 3, "-q", 3],
    ["enumerate-subspaces", "-q", 3, "-n", 2],
    ["uniform", "-q", 3, "-n", 3, "-k", 2],
    ["paving", "--in", "@two_planes_code.json"],
    ["check", "--in", "@two_planes_paving.json"],
    ["dual", "--in", "@two_planes_paving.json"],
    ["structure", "--in", "@uniform_2_4.json"],
    ["from-generator", "--in", "@two_planes_generator.json"],
    ["search-rep", "--in", "@uniform_2_4.json", "--m-max", 4],
    ["lifted-mrd", "-q", 3, "-n", 4, "-k", 2, "--d", 4],
    ["cdc-distance", "--in", "@spread_f2_4.json"],
    ["cdc-to-paving", "--in", "@spread_f2_4.json"],
    ["zero-sweep", "-q", 2, "-n", 2, "-k", 1, "-m", 2, "--list"],
    ["pattern-of", "--in", "@uniform_2_4.json"],
    ["bounds-table", "-q", 3, "--n-from", 4, "--n-to", 12],
    ["rank1-census", "-q", 2, "-n", 2],
    ["enumerate-qmatroids", "-q", 2, "-n", 2, "-k", 1],
])
def test_every_verb_is_deterministic(argv):
    argv = [fx(a[1:]) if isinstance(a, str) and a.startswith("@") else a for a in argv]
    first = ok(*argv)
    assert first and first == ok(*argv)


def test_verb_coverage():
    assert set(VERBS) == {
        "qbinom", "enumerate-subspaces", "uniform", "paving", "check", "dual", "structure",
        "from-generator", "search-rep", "lifted-mrd", "cdc-distance", "cdc-to-paving",
        "zero-sweep", "pattern-of", "bounds-table", "rank1-census", "enumerate-qmatroids"}


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qmatroids", "qbinom", "-n", "4", "-k", "2",
                        "-q", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "35\n"
    r = subprocess.run([sys.executable, "-m", "qmatroids"], capture_output=True, text=True)
    assert r.returncode == 2 and r.stdout == ""
