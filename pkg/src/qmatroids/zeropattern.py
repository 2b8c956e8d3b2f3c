"""Zero patterns of the determinant system det(G Y_U^T), U a k-subspace.

For a point u in F_{q^m}^{kn}, reshaped row-major into a k x n matrix G, the
zero pattern records for each k-subspace U of F_q^n (canonical order) whether
det(G Y_U^T) vanishes ("0") or not ("*").  The polynomials are never
expanded symbolically; every pattern is an evaluation.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .codes import GeneratorMatrix, _require_prime, qmatroid_from_generator
from .errors import QMatroidError, ShapeError, SizeLimitError
from .field import field_make
from .lattice import enumerate_grassmannian, gaussian_binomial
from .linalg import det_rows, rank_rows
from .qmatroid import RankTable

__all__ = [
    "ZeroPattern",
    "DetSystem",
    "det_system",
    "evaluate_pattern",
    "sweep_patterns",
    "sweep_representable",
    "pattern_census",
    "pattern_of_qmatroid",
    "zero_pattern_bound",
    "zero_pattern_bound_linear",
    "pattern_bound_for",
    "SWEEP_CEILING",
]

SWEEP_CEILING = 10**8  # points x polynomials per sweep


class ZeroPattern(str):
    """A string over {"0", "*"}; position i refers to the i-th k-subspace."""

    def __new__(cls, symbols):
        s = str.__new__(cls, symbols)
        if set(s) - {"0", "*"}:
            raise QMatroidError(f"zero pattern has symbols outside {{0,*}}: {symbols!r}")
        return s

    @property
    def zeros(self) -> list[int]:
        return [i for i, c in enumerate(self) if c == "0"]


@dataclass(frozen=True)
class DetSystem:
    q: int
    n: int
    k: int
    matrices: tuple  # canonical bases Y_U, in canonical order

    def __len__(self):
        return len(self.matrices)

    @property
    def variables(self) -> int:
        return self.k * self.n


def det_system(q: int, n: int, k: int) -> DetSystem:
    if not 1 <= k <= n:
        raise QMatroidError(f"need 1 <= k <= n, got k={k}, n={n}")
    return DetSystem(q, n, k, tuple(s.basis for s in enumerate_grassmannian(q, n, k)))


def _pattern_string(bits) -> ZeroPattern:
    return ZeroPattern("".join("*" if b else "0" for b in bits))


def evaluate_pattern(sys: DetSystem, u, m: int = 1) -> ZeroPattern:
    """Zero pattern of the system at u in F_{q^m}^{kn}."""
    _require_prime(sys.q)
    u = [int(x) for x in u]
    if len(u) != sys.variables:
        raise ShapeError(f"point must have {sys.variables} coordinates, got {len(u)}")
    f = field_make(sys.q, m)
    k, n = sys.k, sys.n
    g = [u[i * n:(i + 1) * n] for i in range(k)]
    bits = []
    for y in sys.matrices:
        prod = [[_dot(f, gi, yr) for yr in y] for gi in g]
        bits.append(det_rows(f, prod) != 0)
    return _pattern_string(bits)


def _dot(f, a, b):
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = f.add(s, f.mul(x, y))
    return s


def _batch_patterns(sys: DetSystem, f, points: np.ndarray) -> np.ndarray:
    """Boolean (B, M) array of nonvanishing determinants for a batch of points."""
    add, mul, neg = f.add_table, f.mul_table, f.neg_table
    k, n = sys.k, sys.n
    g = points.reshape(len(points), k, n)
    perms = list(itertools.permutations(range(k)))
    signs = [_perm_sign(p) for p in perms]
    out = np.empty((len(points), len(sys)), dtype=bool)
    for idx, y in enumerate(sys.matrices):
        # entry (i, r) of G Y^T for every point
        ent = {}
        for i in range(k):
            for r in range(k):
                acc = np.zeros(len(points), dtype=np.int64)
                for j, c in enumerate(y[r]):
                    if c:
                        acc = add[acc, mul[c, g[:, i, j]]]
                ent[i, r] = acc
        det = np.zeros(len(points), dtype=np.int64)
        for p, sgn in zip(perms, signs):
            term = ent[0, p[0]]
            for i in range(1, k):
                term = mul[term, ent[i, p[i]]]
            det = add[det, term if sgn > 0 else neg[term]]
        out[:, idx] = det != 0
    return out


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _points(order: int, nvars: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    cols = [(idx // order**j) % order for j in range(nvars)]
    return np.stack(cols, axis=1) if cols else np.zeros((len(idx), 0), dtype=np.int64)


def sweep_patterns(sys: DetSystem, m: int = 1, workers: int = 1,
                   batch: int = 1 << 14) -> set[ZeroPattern]:
    """Every distinct zero pattern attained over F_{q^m}^{kn}.

    Over a finite field this is a lower bound on the count over the algebraic
    closure, and it can only grow with m.  Batches of points are independent,
    so ``workers > 1`` evaluates them on a thread pool; the result is a set
    and does not depend on scheduling.
    """
    _require_prime(sys.q)
    f = field_make(sys.q, m)
    total = f.order ** sys.variables
    if total * len(sys) > SWEEP_CEILING:
        raise SizeLimitError(
            f"{total} points x {len(sys)} polynomials exceed the sweep ceiling {SWEEP_CEILING}"
        )

    def run(start):
        pts = _points(f.order, sys.variables, start, min(total, start + batch))
        packed = np.packbits(_batch_patterns(sys, f, pts), axis=1)
        return {bytes(row) for row in np.unique(packed, axis=0)}

    starts = range(0, total, batch)
    found: set[bytes] = set()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            for part in pool.map(run, starts):
                found |= part
    else:
        for start in starts:
            found |= run(start)
    width = len(sys)
    return {
        _pattern_string(np.unpackbits(np.frombuffer(b, dtype=np.uint8))[:width])
        for b in found
    }


def sweep_representable(q: int, n: int, k: int, m: int) -> set[RankTable]:
    """q-matroids represented by the full-rank k x n matrices over F_{q^m}.

    Independent of the pattern machinery: each matrix goes through the
    rank-table construction directly.
    """
    f = field_make(q, m)
    out = set()
    for flat in itertools.product(range(f.order), repeat=k * n):
        rows = [flat[i * n:(i + 1) * n] for i in range(k)]
        if rank_rows(f, rows, n) == k:
            out.add(qmatroid_from_generator(GeneratorMatrix(q, m, rows, n), check=False))
    return out


def pattern_census(q: int, n: int, k: int, m: int) -> dict:
    """Compare representable tables with attained patterns over F_{q^m}.

    A point whose G has full rank gives a nonzero pattern (some k x k minor
    is a coordinate-subspace determinant), and a point with a nonzero pattern
    has full rank.  So the target-form patterns are the nonzero ones, and the
    all-zero pattern (at u = 0) is attained but never a target.
    """
    patterns = sweep_patterns(det_system(q, n, k), m)
    tables = sweep_representable(q, n, k, m)
    target = {p for p in patterns if "*" in p}
    return {
        "representable": len(tables),
        "target_patterns": len(target),
        "patterns": len(patterns),
        "table_patterns_match": {pattern_of_qmatroid(t) for t in tables} == target,
    }


def pattern_of_qmatroid(t: RankTable) -> ZeroPattern:
    """Target pattern: "0" at non-bases, "*" at bases, over the k-subspaces."""
    k = t.rank
    if k == 0:
        raise QMatroidError("rank-0 q-matroid: the determinant system needs k >= 1")
    idx = t.index
    return _pattern_string(t.ranks[i] == k for i in idx.by_dim[k])


def zero_pattern_bound(M: int, d: int, s: int) -> int:
    """binom(M d, s): pattern bound for M polynomials of degree <= d >= 2 in s variables."""
    if d < 1:
        raise QMatroidError("degree must be >= 1")
    if not 0 <= s <= M:
        raise QMatroidError(f"bound requires M >= s >= 0, got M={M}, s={s}")
    return math.comb(M * d, s)


def zero_pattern_bound_linear(M: int, s: int) -> int:
    """sum_{j<=s} binom(M, j): pattern bound for linear polynomials."""
    if not 0 <= s <= M:
        raise QMatroidError(f"bound requires M >= s >= 0, got M={M}, s={s}")
    return sum(math.comb(M, j) for j in range(s + 1))


def pattern_bound_for(q: int, n: int, k: int) -> int:
    """The applicable pattern bound for the determinant system of (q, n, k)."""
    M = gaussian_binomial(n, k, q)
    if k == 1:
        return zero_pattern_bound_linear(M, n)
    return zero_pattern_bound(M, k, k * n)
