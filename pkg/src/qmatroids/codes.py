"""Rank-metric codes over F_{q^m} and the q-matroids they represent.

The ground field F_q is restricted to prime q here.  F_{q^m} is then
``field_make(q, m)`` and the elements 0..q-1 of F_q are the constant
polynomials, so a matrix over F_q is also, unchanged, a matrix over F_{q^m}.
"""

from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass

from .errors import QMatroidError, ShapeError, SizeLimitError
from .field import FieldSpec, field_make, is_prime
from .lattice import gaussian_binomial, iter_grassmannian, lattice_index
from .linalg import Matrix, det_rows, kernel_rows, rank_rows, rref_rows
from .qmatroid import RankTable, _validated

__all__ = [
    "GeneratorMatrix",
    "RankMetricCode",
    "qmatroid_from_generator",
    "rank_weight",
    "min_rank_distance",
    "is_mrd",
    "dual_code",
    "search_representation",
    "random_generator",
    "ENUMERATION_CEILING",
]

ENUMERATION_CEILING = 10**7


def _require_prime(q):
    if not is_prime(q):
        raise QMatroidError(f"ground field order {q} must be prime for rank-metric codes")


@dataclass(frozen=True)
class GeneratorMatrix:
    """A full-rank k x n matrix over F_{q^m}.

    ``k = 0`` is allowed and stands for the zero code.
    """

    q: int
    m: int
    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        _require_prime(self.q)
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        f = self.field
        if any(len(r) != self.n for r in rows):
            raise ShapeError(f"generator rows must have {self.n} entries")
        if any(not 0 <= x < f.order for r in rows for x in r):
            raise ShapeError(f"entries must lie in F_{f.order}")
        if len(rows) > self.n or rank_rows(f, rows, self.n) != len(rows):
            raise QMatroidError("generator matrix is not of full row rank")

    @classmethod
    def from_matrix(cls, q: int, mat: Matrix) -> "GeneratorMatrix":
        p, m = mat.field.p, mat.field.e
        if p != q or mat.field != field_make(q, m):
            raise QMatroidError("matrix must be over the deterministic F_{q^m}")
        return cls(q, m, mat.rows, mat.ncols)

    @property
    def field(self) -> FieldSpec:
        return field_make(self.q, self.m)

    @property
    def k(self) -> int:
        return len(self.rows)

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.rows, self.n)


@dataclass(frozen=True)
class RankMetricCode:
    """Row space of a generator matrix, kept in canonical (RREF) form."""

    generator: GeneratorMatrix

    @classmethod
    def from_generator(cls, g: GeneratorMatrix) -> "RankMetricCode":
        reduced, piv = rref_rows(g.field, g.rows, g.n)
        return cls(GeneratorMatrix(g.q, g.m, reduced[: len(piv)], g.n))

    @property
    def q(self):
        return self.generator.q

    @property
    def m(self):
        return self.generator.m

    @property
    def n(self):
        return self.generator.n

    @property
    def k(self):
        return self.generator.k

    def codewords(self):
        g = self.generator
        f = g.field
        for coeffs in itertools.product(range(f.order), repeat=g.k):
            yield _combine(f, coeffs, g.rows, g.n)


def _combine(f, coeffs, rows, n):
    v = [0] * n
    for c, row in zip(coeffs, rows):
        if c:
            for j, x in enumerate(row):
                if x:
                    v[j] = f.add(v[j], f.mul(c, x))
    return tuple(v)


def _ranks_for(g: GeneratorMatrix, subspaces):
    f = g.field
    ranks = []
    for s in subspaces:
        # G Y^T: row i, column r is <G_i, Y_r>
        prod = [
            [_dot(f, gi, y) for y in s.basis] for gi in g.rows
        ]
        ranks.append(rank_rows(f, prod, s.dim) if s.dim and g.k else 0)
    return ranks


def _dot(f, a, b):
    s = 0
    for x, y in zip(a, b):
        if x and y:
            s = f.add(s, f.mul(x, y))
    return s


def qmatroid_from_generator(g: GeneratorMatrix, check: bool = True) -> RankTable:
    """rho(V) = rank of G Y_V^T over F_{q^m}, for every subspace V of F_q^n."""
    idx = lattice_index(g.q, g.n)
    return _validated(RankTable(g.q, g.n, _ranks_for(g, idx.subspaces)), check)


def rank_weight(v, q: int, m: int) -> int:
    """dim over F_q of the span of the coordinates of v in F_{q^m}^n."""
    _require_prime(q)
    f = field_make(q, m)
    vecs = [f.digits(int(x)) for x in v]
    return rank_rows(field_make(q, 1), vecs, m)


def min_rank_distance(code: RankMetricCode) -> int:
    """Minimum rank weight over the nonzero codewords.

    Rank weight is invariant under F_{q^m}-scaling, so only codewords whose
    first nonzero message coefficient is 1 are visited.
    """
    g = code.generator
    if g.k == 0:
        raise QMatroidError("the zero code has no minimum distance")
    f = g.field
    if f.order**g.k > ENUMERATION_CEILING:
        raise SizeLimitError(f"{f.order ** g.k} codewords exceed {ENUMERATION_CEILING}")
    best = g.n + 1
    for lead in range(g.k):
        for tail in itertools.product(range(f.order), repeat=g.k - lead - 1):
            coeffs = (0,) * lead + (1,) + tail
            w = rank_weight(_combine(f, coeffs, g.rows, g.n), g.q, g.m)
            if w < best:
                best = w
    return best


def is_mrd(code: RankMetricCode) -> bool:
    """Whether k = n - d + 1 (equality in the Singleton-like bound)."""
    return code.k == code.n - min_rank_distance(code) + 1


def dual_code(code: RankMetricCode) -> RankMetricCode:
    g = code.generator
    ker = kernel_rows(g.field, g.rows, g.n) if g.k else tuple(
        tuple(int(i == j) for j in range(g.n)) for i in range(g.n)
    )
    return RankMetricCode.from_generator(GeneratorMatrix(g.q, g.m, ker, g.n))


def random_generator(q: int, m: int, k: int, n: int, seed=None) -> GeneratorMatrix:
    """A uniformly random full-rank k x n generator over F_{q^m}."""
    rng = seed if isinstance(seed, _random.Random) else _random.Random(seed)
    f = field_make(q, m)
    while True:
        rows = [tuple(rng.randrange(f.order) for _ in range(n)) for _ in range(k)]
        if rank_rows(f, rows, n) == k:
            return GeneratorMatrix(q, m, rows, n)


def search_representation(t: RankTable, m_max: int) -> GeneratorMatrix | None:
    """First generator (canonical order) over F_{q^m}, m <= m_max, representing t.

    For each m the candidates are the canonical bases of the k-subspaces of
    F_{q^m}^n, since the represented q-matroid depends only on the row space.
    A candidate is rejected at the first k-subspace whose basis/non-basis
    status disagrees with t (non-bases are tried first); survivors are
    compared on the full table.  ``None`` means no representation with
    m <= m_max exists, not that t is non-representable.
    """
    _require_prime(t.q)
    q, n, k = t.q, t.n, t.rank
    if k == 0:
        return GeneratorMatrix(q, 1, (), n)
    for m in range(1, m_max + 1):
        size = gaussian_binomial(n, k, q**m)
        if size > ENUMERATION_CEILING:
            raise SizeLimitError(
                f"[{n} choose {k}]_{q ** m} = {size} candidates exceed {ENUMERATION_CEILING}"
            )
    idx = t.index
    ks = idx.by_dim[k]
    nonbases = [idx[i] for i in ks if t.ranks[i] < k]
    bases = [idx[i] for i in ks if t.ranks[i] == k]
    tests = [(s.basis, False) for s in nonbases] + [(s.basis, True) for s in bases]
    for m in range(1, m_max + 1):
        f = field_make(q, m)
        for flat in iter_grassmannian(q**m, n, k):
            rows = tuple(flat[i * n:(i + 1) * n] for i in range(k))
            if _matches(f, rows, tests):
                g = GeneratorMatrix(q, m, rows, n)
                if qmatroid_from_generator(g, check=False) == t:
                    return g
    return None


def _matches(f, rows, tests) -> bool:
    add, mul = f.add, f.mul
    cols = list(zip(*rows))
    for ybasis, want in tests:
        prod = []
        for y in ybasis:
            col = [0] * len(rows)
            for j, c in enumerate(y):
                if c:
                    gj = cols[j]
                    if c == 1:
                        col = [add(a, b) for a, b in zip(col, gj)]
                    else:
                        col = [add(a, mul(c, b)) for a, b in zip(col, gj)]
            prod.append(col)
        # prod is (G Y^T)^T; its determinant is the same
        if (det_rows(f, prod) != 0) != want:
            return False
    return True
