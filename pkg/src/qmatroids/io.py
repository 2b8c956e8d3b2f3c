"""JSON serialization for every domain type, tagged ``"format": "qml-v1"``.

Field elements are written as base-p digit strings, low degree first, and
every matrix carries the descriptor {p, e, modulus} of its field.  Output is
canonical (sorted keys, fixed separators), so serialize -> parse -> serialize
reproduces the same bytes.
"""

from __future__ import annotations

import json

from .cdc import ConstantDimensionCode
from .codes import GeneratorMatrix
from .errors import QMatroidError
from .field import FieldElement, FieldSpec, field_make, gf
from .lattice import Subspace
from .linalg import Matrix
from .qmatroid import ORDERING_TAG, AxiomReport, RankTable
from .zeropattern import ZeroPattern

__all__ = [
    "FORMAT_TAG",
    "SearchResult",
    "SweepReport",
    "dumps",
    "loads",
    "to_json",
    "from_json",
    "field_from_descriptor",
]

FORMAT_TAG = "qml-v1"


class SearchResult:
    """Outcome of a representation search: a generator, or nothing found."""

    def __init__(self, generator: GeneratorMatrix | None, m_max: int | None = None):
        self.generator = generator
        self.m_max = m_max

    @property
    def found(self) -> bool:
        return self.generator is not None

    @property
    def m(self):
        return self.generator.m if self.generator is not None else None

    def __eq__(self, other):
        return isinstance(other, SearchResult) and (self.generator, self.m_max) == (
            other.generator, other.m_max)


class SweepReport:
    def __init__(self, q, n, k, m, count, bound, patterns=None):
        self.q, self.n, self.k, self.m = q, n, k, m
        self.count, self.bound = count, bound
        self.patterns = None if patterns is None else sorted(patterns)

    @property
    def within_bound(self) -> bool:
        return self.count <= self.bound

    def __eq__(self, other):
        return isinstance(other, SweepReport) and vars(self) == vars(other)


def field_from_descriptor(d: dict) -> FieldSpec:
    f = field_make(int(d["p"]), int(d["e"]))
    if list(d.get("modulus", [])) != list(f.modulus):
        raise QMatroidError(
            f"modulus {d.get('modulus')} differs from the deterministic choice {list(f.modulus)}"
        )
    return f


def _rows_out(f: FieldSpec, rows):
    return [[f.format(int(x)) for x in r] for r in rows]


def _rows_in(f: FieldSpec, rows):
    return tuple(tuple(f.parse(x) for x in r) for r in rows)


def _header(kind: str) -> dict:
    return {"format": FORMAT_TAG, "type": kind}


def to_json(obj) -> dict:
    """Plain JSON-ready dict for a domain object."""
    if isinstance(obj, FieldElement):
        return {**_header("element"), "field": obj.field.descriptor(),
                "value": obj.field.format(obj.value)}
    if isinstance(obj, Matrix):
        f = obj.field
        return {**_header("matrix"), "field": f.descriptor(), "ncols": obj.ncols,
                "rows": _rows_out(f, obj.rows)}
    if isinstance(obj, Subspace):
        return {**_header("subspace"), "q": obj.q, "n": obj.n, "field": obj.field.descriptor(),
                "basis": _rows_out(obj.field, obj.basis)}
    if isinstance(obj, RankTable):
        return {**_header("qmatroid"), "q": obj.q, "n": obj.n, "ordering": ORDERING_TAG,
                "ranks": list(obj.ranks)}
    if isinstance(obj, GeneratorMatrix):
        f = obj.field
        return {**_header("generator"), "q": obj.q, "m": obj.m, "n": obj.n,
                "field": f.descriptor(), "rows": _rows_out(f, obj.rows)}
    if isinstance(obj, ConstantDimensionCode):
        f = gf(obj.q)
        return {**_header("cdc"), "q": obj.q, "n": obj.n, "k": obj.k, "field": f.descriptor(),
                "codewords": [_rows_out(f, b) for b in obj.bases.tolist()]}
    if isinstance(obj, SearchResult):
        out = {**_header("search-result"), "found": obj.found, "m": obj.m, "m_max": obj.m_max}
        if obj.found:
            out["generator"] = to_json(obj.generator)
        return out
    if isinstance(obj, SweepReport):
        out = {**_header("sweep-report"), "q": obj.q, "n": obj.n, "k": obj.k, "m": obj.m,
               "count": obj.count, "bound": obj.bound}
        if obj.patterns is not None:
            out["patterns"] = list(obj.patterns)
        return out
    if isinstance(obj, AxiomReport):
        out = {**_header("check"), "verdict": obj.verdict}
        if not obj.ok:
            out["axiom"] = obj.axiom
            out["witness"] = [to_json(s) for s in obj.witness]
        return out
    if isinstance(obj, ZeroPattern):
        return {**_header("pattern"), "pattern": str(obj)}
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def from_json(d: dict):
    """Inverse of :func:`to_json`."""
    if d.get("format") != FORMAT_TAG:
        raise QMatroidError(f"unsupported format tag {d.get('format')!r}, expected {FORMAT_TAG!r}")
    kind = d.get("type")
    if kind == "element":
        f = field_from_descriptor(d["field"])
        return f(f.parse(d["value"]))
    if kind == "matrix":
        f = field_from_descriptor(d["field"])
        return Matrix(f, _rows_in(f, d["rows"]), d["ncols"])
    if kind == "subspace":
        f = field_from_descriptor(d["field"])
        s = Subspace.from_rows(_rows_in(f, d["basis"]), d["q"], d["n"])
        if s.basis != _rows_in(f, d["basis"]):
            raise QMatroidError("subspace basis is not in canonical form")
        return s
    if kind == "qmatroid":
        if d.get("ordering") != ORDERING_TAG:
            raise QMatroidError(f"unknown subspace ordering {d.get('ordering')!r}")
        return RankTable(d["q"], d["n"], d["ranks"])
    if kind == "generator":
        f = field_from_descriptor(d["field"])
        if (f.p, f.e) != (d["q"], d["m"]):
            raise QMatroidError("generator field does not match q and m")
        return GeneratorMatrix(d["q"], d["m"], _rows_in(f, d["rows"]), d["n"])
    if kind == "cdc":
        f = field_from_descriptor(d["field"])
        return ConstantDimensionCode(d["q"], d["n"], d["k"],
                                     [_rows_in(f, b) for b in d["codewords"]])
    if kind == "search-result":
        g = from_json(d["generator"]) if d["found"] else None
        return SearchResult(g, d.get("m_max"))
    if kind == "sweep-report":
        return SweepReport(d["q"], d["n"], d["k"], d["m"], d["count"], d["bound"],
                           d.get("patterns"))
    if kind == "pattern":
        return ZeroPattern(d["pattern"])
    if kind == "check":
        if d["verdict"] == "pass":
            return AxiomReport(True)
        return AxiomReport(False, d["axiom"], tuple(from_json(w) for w in d["witness"]))
    raise QMatroidError(f"unknown document type {kind!r}")


def dumps(obj) -> str:
    data = obj if isinstance(obj, dict) else to_json(obj)
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    return from_json(json.loads(text))
