"""q-matroids as rank tables over the subspace lattice of F_q^n.

A :class:`RankTable` stores one rank per subspace, indexed in canonical
lattice order (see :mod:`qmatroids.lattice`).  :func:`check_axioms` tests
the three rank axioms: boundedness, monotonicity, and submodularity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidCollection, InvalidRankTable, QMatroidError, ShapeError
from .lattice import LatticeIndex, Subspace, lattice_index

__all__ = [
    "RankTable",
    "AxiomReport",
    "Structure",
    "check_axioms",
    "uniform",
    "paving_from_collection",
    "dualize",
    "derived_structure",
    "enumerate_qmatroids",
    "ORDERING_TAG",
]

ORDERING_TAG = "canonical-v1"


@dataclass(frozen=True)
class RankTable:
    """A rank value for every subspace of F_q^n, in canonical order."""

    q: int
    n: int
    ranks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        if len(self.ranks) != len(self.index):
            raise ShapeError(
                f"rank table has {len(self.ranks)} entries, L(F_{self.q}^{self.n}) "
                f"has {len(self.index)}"
            )

    @property
    def index(self) -> LatticeIndex:
        return lattice_index(self.q, self.n)

    @property
    def rank(self) -> int:
        """rho(E)."""
        return self.ranks[-1]

    def __call__(self, v: Subspace) -> int:
        return self.ranks[self.index.index(v)]

    def subspaces_with(self, predicate):
        idx = self.index
        return [idx[i] for i, r in enumerate(self.ranks) if predicate(r, idx.dims[i])]

    def bases(self) -> list[Subspace]:
        k = self.rank
        return self.subspaces_with(lambda r, d: d == k and r == k)

    def non_bases(self) -> list[Subspace]:
        k = self.rank
        return self.subspaces_with(lambda r, d: d == k and r < k)


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`check_axioms`.

    ``witness`` is the subspace (axiom 1) or pair of subspaces (axioms 2 and 3)
    at which the first violation in canonical order occurs.
    """

    ok: bool
    axiom: int | None = None
    witness: tuple = ()

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def __bool__(self):
        return self.ok


def axiom_holds(t: RankTable, axiom: int, witness) -> bool:
    """Evaluate one axiom on one witness, from scratch (no lattice tables)."""
    if axiom == 1:
        (v,) = witness
        return 0 <= t(v) <= v.dim
    x, y = witness
    if axiom == 2:
        return not x.issubspace(y) or t(x) <= t(y)
    return t(x & y) + t(x + y) <= t(x) + t(y)


def check_axioms(t: RankTable) -> AxiomReport:
    idx = t.index
    r = t.ranks
    for i, d in enumerate(idx.dims):
        if not 0 <= r[i] <= d:
            return AxiomReport(False, 1, (idx[i],))
    # monotonicity along covering pairs implies it for all comparable pairs
    for v, hs in enumerate(idx.hyperplanes):
        for h in hs:
            if r[h] > r[v]:
                return AxiomReport(False, 2, (idx[h], idx[v]))
    pairs = idx.pair_table
    if len(pairs):
        ra = np.asarray(r, dtype=np.int64)
        x, y, m, j = pairs.T
        bad = np.flatnonzero(ra[m] + ra[j] > ra[x] + ra[y])
        if len(bad):
            b = bad[0]
            return AxiomReport(False, 3, (idx[int(x[b])], idx[int(y[b])]))
    return AxiomReport(True)


def _validated(t: RankTable, check: bool) -> RankTable:
    if check:
        report = check_axioms(t)
        if not report.ok:
            raise InvalidRankTable(f"axiom {report.axiom} fails at {report.witness}", report)
    return t


def uniform(q: int, n: int, k: int, check: bool = True) -> RankTable:
    """U_{k,n}: rho(V) = min(k, dim V)."""
    if not 0 <= k <= n:
        raise QMatroidError(f"need 0 <= k <= n, got k={k}, n={n}")
    idx = lattice_index(q, n)
    return _validated(RankTable(q, n, [min(k, d) for d in idx.dims]), check)


def paving_from_collection(subspaces, k: int, q: int | None = None, n: int | None = None,
                           check: bool = True) -> RankTable:
    """Paving q-matroid of rank k whose rank-(k-1) circuits are ``subspaces``.

    Every member must be k-dimensional and distinct members must meet in
    dimension at most k - 2.  ``q`` and ``n`` are only needed when the
    collection is empty.
    """
    subspaces = list(subspaces)
    if subspaces:
        q, n = subspaces[0].q, subspaces[0].n
    if q is None or n is None:
        raise QMatroidError("q and n are required for an empty collection")
    if not 1 <= k <= n - 1:
        raise QMatroidError(f"need 1 <= k <= n - 1, got k={k}, n={n}")
    for s in subspaces:
        if (s.q, s.n) != (q, n):
            raise ShapeError("collection mixes ambient spaces")
        if s.dim != k:
            raise InvalidCollection(f"{s} is not {k}-dimensional")
    for a, b in itertools.combinations(subspaces, 2):
        if (a & b).dim > k - 2:
            raise InvalidCollection(
                f"members meet in dimension {(a & b).dim} > {k - 2}", pair=(a, b)
            )
    idx = lattice_index(q, n)
    members = {idx.index(s) for s in subspaces}
    ranks = [k - 1 if i in members else min(d, k) for i, d in enumerate(idx.dims)]
    return _validated(RankTable(q, n, ranks), check)


def dualize(t: RankTable, check: bool = True) -> RankTable:
    """rho*(V) = dim V + rho(V^perp) - rho(E)."""
    _validated(t, check)
    idx = t.index
    r, top = t.ranks, t.rank
    ranks = [d + r[p] - top for d, p in zip(idx.dims, idx.perp)]
    return _validated(RankTable(t.q, t.n, ranks), check)


@dataclass
class Structure:
    rank: int
    independents: list = field(default_factory=list)
    bases: list = field(default_factory=list)
    circuits: list = field(default_factory=list)
    loops: list = field(default_factory=list)
    loop_space: Subspace | None = None
    is_paving: bool = True


def derived_structure(t: RankTable) -> Structure:
    idx = t.index
    r, dims = t.ranks, idx.dims
    top = t.rank
    indep = [r[i] == dims[i] for i in range(len(idx))]
    # independence is downward closed, so checking hyperplanes suffices
    circuits = [
        i for i in range(len(idx))
        if not indep[i] and all(indep[h] for h in idx.hyperplanes[i])
    ]
    loops = [i for i in idx.by_dim[1] if r[i] == 0] if t.n else []
    loop_space = idx[0]
    for i in loops:
        loop_space = loop_space + idx[i]
    return Structure(
        rank=top,
        independents=[idx[i] for i in range(len(idx)) if indep[i]],
        bases=[idx[i] for i in range(len(idx)) if indep[i] and r[i] == top],
        circuits=[idx[i] for i in circuits],
        loops=[idx[i] for i in loops],
        loop_space=loop_space,
        is_paving=all(dims[c] >= top for c in circuits),
    )


def enumerate_qmatroids(q: int, n: int, k_max: int) -> list[RankTable]:
    """Every q-matroid on F_q^n of rank at most ``k_max``, sorted by ranks.

    Backtracking in canonical lattice order.  When subspace V is reached all
    of its proper subspaces have ranks, so its feasible values are bounded
    below by its hyperplanes (monotonicity) and above by each hyperplane
    plus one and by every incomparable pair whose join is V (submodularity).
    Every axiom instance is thereby checked exactly once, at its join.
    """
    if k_max < 0:
        raise QMatroidError("k_max must be >= 0")
    idx = lattice_index(q, n)
    size = len(idx)
    dims = idx.dims
    hyper = idx.hyperplanes
    by_join: list[list[tuple[int, int, int]]] = [[] for _ in range(size)]
    for x, y, m, j in idx.pair_table.tolist():
        by_join[j].append((x, y, m))

    ranks = [0] * size
    out = []

    def bounds(v):
        hs = hyper[v]
        if not hs:
            return 0, 0
        lo = max(ranks[h] for h in hs)
        hi = min(min(ranks[h] for h in hs) + 1, dims[v], k_max)
        for x, y, m in by_join[v]:
            b = ranks[x] + ranks[y] - ranks[m]
            if b < hi:
                hi = b
        return lo, hi

    # iterative DFS: stack of (position, next candidate, upper bound)
    stack = []
    lo, hi = bounds(0)
    stack.append([0, lo, hi])
    while stack:
        frame = stack[-1]
        v, val, hi = frame
        if val > hi:
            stack.pop()
            continue
        frame[1] = val + 1
        ranks[v] = val
        if v == size - 1:
            out.append(RankTable(q, n, ranks))
            continue
        lo2, hi2 = bounds(v + 1)
        stack.append([v + 1, lo2, hi2])
    out.sort(key=lambda t: t.ranks)
    return out
