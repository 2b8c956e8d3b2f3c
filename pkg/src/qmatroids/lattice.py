"""Subspaces of F_q^n and the full subspace lattice.

A :class:`Subspace` is stored by its canonical basis: the reduced row echelon
form of any spanning matrix with the zero rows dropped.  Two subspaces are
equal exactly when their canonical bases are.

Subspaces are totally ordered by dimension, then lexicographically by the
flattened canonical basis (entries compared as element codes).  Everything
indexed by subspace -- rank tables, zero patterns, determinant systems --
uses this order.
"""

from __future__ import annotations

import functools
import heapq
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import QMatroidError, ShapeError, SizeLimitError
from .field import FieldSpec, gf
from .linalg import Matrix, kernel_rows, matmul_rows, rank_rows, rref_rows

__all__ = [
    "Subspace",
    "LatticeIndex",
    "lattice_index",
    "gaussian_binomial",
    "lattice_size",
    "enumerate_grassmannian",
    "iter_grassmannian",
    "subspace_from_rows",
    "subspace_sum",
    "intersect",
    "ortho_complement",
    "subspace_distance",
    "zero_space",
    "full_space",
    "LATTICE_CEILING",
]

LATTICE_CEILING = 100_000
# incomparable pairs materialized by LatticeIndex.pair_table
PAIR_CEILING = 20_000_000


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """The q-binomial coefficient [n choose k]_q, exactly."""
    if q < 2:
        raise QMatroidError("q must be >= 2")
    if not 0 <= k <= n:
        raise QMatroidError(f"need 0 <= k <= n, got n={n}, k={k}")
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def lattice_size(q: int, n: int) -> int:
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def _canonical(field: FieldSpec, rows, n: int) -> tuple[tuple[int, ...], ...]:
    reduced, pivots = rref_rows(field, rows, n)
    return reduced[: len(pivots)]


@dataclass(frozen=True)
class Subspace:
    """A subspace of F_q^n given by its canonical (RREF) basis."""

    q: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows, q: int, n: int) -> "Subspace":
        rows = [tuple(int(x) for x in r) for r in rows]
        if any(len(r) != n for r in rows):
            raise ShapeError(f"rows must have {n} entries")
        return cls(q, n, _canonical(gf(q), rows, n))

    @property
    def field(self) -> FieldSpec:
        return gf(self.q)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> tuple[int, int]:
        return self.q, self.n

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.n)

    def sort_key(self):
        return (len(self.basis), tuple(itertools.chain.from_iterable(self.basis)))

    def __lt__(self, other: "Subspace"):
        """Canonical order (not containment; see :meth:`issubspace`)."""
        _same_ambient(self, other)
        return self.sort_key() < other.sort_key()

    def contains_vector(self, v) -> bool:
        return rank_rows(self.field, self.basis + (tuple(v),), self.n) == self.dim

    def issubspace(self, other: "Subspace") -> bool:
        """True when self is contained in other."""
        _same_ambient(self, other)
        if self.dim > other.dim:
            return False
        return rank_rows(self.field, other.basis + self.basis, self.n) == other.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)

    def perp(self) -> "Subspace":
        return ortho_complement(self)

    def vectors(self):
        """All q**dim vectors of the subspace."""
        f = self.field
        vecs = [(0,) * self.n]
        for b in self.basis:
            vecs = [
                tuple(f.add(x, f.mul(c, y)) for x, y in zip(v, b))
                for v in vecs
                for c in range(self.q)
            ]
        return vecs

    def __repr__(self):
        f = self.field
        rows = ", ".join("[" + " ".join(f.format(x) for x in r) + "]" for r in self.basis)
        return f"Subspace(q={self.q}, n={self.n}, dim={self.dim}, basis=[{rows}])"


def _same_ambient(v: Subspace, w: Subspace):
    if (v.q, v.n) != (w.q, w.n):
        raise ShapeError(f"ambient mismatch: F_{v.q}^{v.n} vs F_{w.q}^{w.n}")


def subspace_from_rows(m, q: int | None = None, n: int | None = None) -> Subspace:
    """Row space of ``m`` (a :class:`Matrix` or a sequence of rows)."""
    if isinstance(m, Matrix):
        if q is not None and m.field.order != q:
            raise ShapeError("matrix field does not match q")
        if n is not None and m.ncols != n:
            raise ShapeError(f"matrix has {m.ncols} columns, expected {n}")
        return Subspace(m.field.order, m.ncols, _canonical(m.field, m.rows, m.ncols))
    if q is None or n is None:
        raise ShapeError("q and n are required for raw rows")
    return Subspace.from_rows(m, q, n)


def zero_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, ())


def full_space(q: int, n: int) -> Subspace:
    return Subspace(q, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def subspace_sum(v: Subspace, w: Subspace) -> Subspace:
    _same_ambient(v, w)
    return Subspace(v.q, v.n, _canonical(v.field, v.basis + w.basis, v.n))


def ortho_complement(v: Subspace) -> Subspace:
    """Orthogonal complement under the standard dot product."""
    f = v.field
    return Subspace(v.q, v.n, _canonical(f, kernel_rows(f, v.basis, v.n), v.n))


def intersect(v: Subspace, w: Subspace) -> Subspace:
    """V meet W as the common solutions of the two complement systems."""
    _same_ambient(v, w)
    f = v.field
    eqs = kernel_rows(f, v.basis, v.n) + kernel_rows(f, w.basis, w.n)
    return Subspace(v.q, v.n, _canonical(f, kernel_rows(f, eqs, v.n), v.n))


def subspace_distance(v: Subspace, w: Subspace) -> int:
    """dim V + dim W - 2 dim(V meet W)."""
    _same_ambient(v, w)
    s = rank_rows(v.field, v.basis + w.basis, v.n)
    # dim(V meet W) = dim V + dim W - dim(V + W)
    return 2 * s - v.dim - w.dim


# -- Grassmannians -------------------------------------------------------------

def _profile_iter(q: int, n: int, k: int, pivots):
    """Canonical bases with the given pivot columns, in lexicographic order."""
    pivset = set(pivots)
    template = [[0] * n for _ in range(k)]
    free = []
    for i, pc in enumerate(pivots):
        template[i][pc] = 1
        free.extend((i, c) for c in range(pc + 1, n) if c not in pivset)
    flat_base = [x for row in template for x in row]
    free_flat = [i * n + c for i, c in free]
    for values in itertools.product(range(q), repeat=len(free)):
        flat = flat_base[:]
        for pos, x in zip(free_flat, values):
            flat[pos] = x
        yield tuple(flat)


def _check_range(n, k):
    if not 0 <= k <= n:
        raise QMatroidError(f"need 0 <= k <= n, got n={n}, k={k}")


def iter_grassmannian(q: int, n: int, k: int):
    """Lazily yield the flattened canonical bases of all k-subspaces, in order.

    Each pivot profile is enumerated in lexicographic order; the profiles are
    merged, so the output is globally sorted without materializing it.
    """
    _check_range(n, k)
    gf(q)
    streams = [_profile_iter(q, n, k, pv) for pv in itertools.combinations(range(n), k)]
    return heapq.merge(*streams)


def _unflatten(flat, k, n):
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(k))


def enumerate_grassmannian(q: int, n: int, k: int) -> list[Subspace]:
    """All k-dimensional subspaces of F_q^n in canonical order."""
    return [Subspace(q, n, _unflatten(flat, k, n)) for flat in iter_grassmannian(q, n, k)]


# -- the full lattice ---------------------------------------------------------------

class LatticeIndex:
    """All subspaces of F_q^n in canonical order, with lattice operations by id.

    Each subspace also carries its set of vectors as a bitmask (bit ``j`` for
    the vector with base-q digits ``j``), which makes meets a bitwise AND.
    Joins go through complements: V + W = (V^perp meet W^perp)^perp.
    """

    def __init__(self, q: int, n: int):
        size = lattice_size(q, n)
        if size > LATTICE_CEILING:
            raise SizeLimitError(
                f"L(F_{q}^{n}) has {size} subspaces, above the ceiling {LATTICE_CEILING}"
            )
        self.q = q
        self.n = n
        self.field = gf(q)
        self.subspaces: list[Subspace] = []
        for k in range(n + 1):
            self.subspaces.extend(enumerate_grassmannian(q, n, k))
        self.ids = {s.basis: i for i, s in enumerate(self.subspaces)}
        self.dims = [s.dim for s in self.subspaces]
        self.masks = [self._mask(s) for s in self.subspaces]
        self.mask_ids = {m: i for i, m in enumerate(self.masks)}
        self.perp = [self.ids[ortho_complement(s).basis] for s in self.subspaces]
        self.by_dim = [
            [i for i, d in enumerate(self.dims) if d == k] for k in range(n + 1)
        ]

    def _mask(self, s: Subspace) -> int:
        q = self.q
        weights = [q**j for j in range(self.n)]
        m = 0
        for v in s.vectors():
            m |= 1 << sum(x * w for x, w in zip(v, weights))
        return m

    def __len__(self):
        return len(self.subspaces)

    def __getitem__(self, i) -> Subspace:
        return self.subspaces[i]

    def __iter__(self):
        return iter(self.subspaces)

    def index(self, s: Subspace) -> int:
        if (s.q, s.n) != (self.q, self.n):
            raise ShapeError("subspace from a different ambient space")
        return self.ids[s.basis]

    @property
    def zero(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.subspaces) - 1

    def meet(self, i: int, j: int) -> int:
        return self.mask_ids[self.masks[i] & self.masks[j]]

    def join(self, i: int, j: int) -> int:
        p = self.perp
        return p[self.meet(p[i], p[j])]

    def leq(self, i: int, j: int) -> bool:
        return self.masks[i] & self.masks[j] == self.masks[i]

    @functools.cached_property
    def hyperplanes(self) -> list[list[int]]:
        """For every subspace, the ids of its codimension-1 subspaces (sorted)."""
        f = self.field
        small = {d: enumerate_grassmannian(self.q, d, d - 1) for d in range(1, self.n + 1)}
        out = []
        for s in self.subspaces:
            if s.dim == 0:
                out.append([])
                continue
            hs = []
            for c in small[s.dim]:
                # product of two canonical bases is canonical
                rows = matmul_rows(f, c.basis, s.basis, s.dim, self.n)
                hs.append(self.ids[rows])
            out.append(sorted(hs))
        return out

    @functools.cached_property
    def covers(self) -> list[list[int]]:
        """For every subspace, the ids of the subspaces covering it."""
        up = [[] for _ in self.subspaces]
        for v, hs in enumerate(self.hyperplanes):
            for h in hs:
                up[h].append(v)
        return up

    @functools.cached_property
    def pair_table(self) -> np.ndarray:
        """Incomparable pairs x < y as rows (x, y, meet, join), sorted by (x, y)."""
        size = len(self)
        npairs = size * (size - 1) // 2
        if npairs > PAIR_CEILING:
            raise SizeLimitError(f"{npairs} pairs in L(F_{self.q}^{self.n}) exceed {PAIR_CEILING}")
        if self.q**self.n <= 64:
            return self._pair_table_numpy()
        return self._pair_table_python()

    def _pair_table_python(self) -> np.ndarray:
        size = len(self)
        rows = []
        masks, join = self.masks, self.join
        for x in range(size):
            mx = masks[x]
            for y in range(x + 1, size):
                a = mx & masks[y]
                if a != mx and a != masks[y]:
                    rows.append((x, y, self.mask_ids[a], join(x, y)))
        return np.array(rows, dtype=np.int64).reshape(-1, 4)

    def _pair_table_numpy(self) -> np.ndarray:
        masks = np.array(self.masks, dtype=np.uint64)
        order = np.argsort(masks)
        sorted_masks = masks[order]
        perp = np.array(self.perp, dtype=np.int64)
        perp_masks = masks[perp]

        def lookup(m):
            return order[np.searchsorted(sorted_masks, m)]

        chunks = []
        for x in range(len(self) - 1):
            ys = np.arange(x + 1, len(self))
            a = masks[x] & masks[ys]
            keep = (a != masks[x]) & (a != masks[ys])
            ys, a = ys[keep], a[keep]
            if not len(ys):
                continue
            meet = lookup(a)
            join = perp[lookup(perp_masks[x] & perp_masks[ys])]
            chunks.append(np.stack([np.full(len(ys), x), ys, meet, join], axis=1))
        if not chunks:
            return np.zeros((0, 4), dtype=np.int64)
        return np.concatenate(chunks).astype(np.int64)


@functools.lru_cache(maxsize=16)
def lattice_index(q: int, n: int) -> LatticeIndex:
    """Build-once, read-only index of L(F_q^n)."""
    return LatticeIndex(q, n)
