"""Constant dimension codes, lifted Gabidulin codes, and the paving bridge."""

from __future__ import annotations

import itertools

import numpy as np

from .codes import GeneratorMatrix, RankMetricCode
from .errors import InvalidCollection, QMatroidError, ShapeError
from .field import field_make, gf, is_prime
from .lattice import Subspace, enumerate_grassmannian, intersect, subspace_distance
from .qmatroid import RankTable, paving_from_collection

__all__ = [
    "ConstantDimensionCode",
    "min_subspace_distance_cdc",
    "has_min_distance",
    "gabidulin_code",
    "lifted_mrd",
    "cdc_to_paving",
    "grassmann_independent_check",
    "greedy_partial_spread",
]


def _pack_keys(rows: np.ndarray, base: int) -> list[np.ndarray]:
    """Pack rows of base-``base`` digits into int64 chunk columns (equal rows <=> equal chunks)."""
    width = rows.shape[1]
    per = 1
    while base ** (per + 1) < 2**62:
        per += 1
    return [
        rows[:, i:i + per] @ (base ** np.arange(min(per, width - i), dtype=np.int64))
        for i in range(0, width, per)
    ]


def _keys_distinct(chunks: list[np.ndarray]) -> bool:
    if not chunks or len(chunks[0]) < 2:
        return True
    order = np.lexsort(chunks[::-1])
    same = np.ones(len(order) - 1, dtype=bool)
    for c in chunks:
        sc = c[order]
        same &= sc[1:] == sc[:-1]
    return not same.any()


def _all_distinct(rows: np.ndarray, base: int) -> bool:
    """Whether the rows of a 2-D array of digits in [0, base) are pairwise distinct."""
    if len(rows) < 2:
        return True
    return _keys_distinct(_pack_keys(rows, base))


class ConstantDimensionCode:
    """Distinct k-dimensional subspaces of F_q^n.

    Codewords are stored as an (N, k, n) integer array of canonical bases;
    :class:`Subspace` objects are created on access.
    """

    def __init__(self, q: int, n: int, k: int, bases):
        arr = np.asarray(bases, dtype=np.int64)
        if arr.size == 0:
            arr = arr.reshape(0, k, n)
        if arr.ndim != 3 or arr.shape[1:] != (k, n):
            raise ShapeError(f"codeword bases must have shape (N, {k}, {n})")
        if not _all_distinct(arr.reshape(len(arr), k * n), q):
            raise QMatroidError("codewords must be distinct")
        self.q, self.n, self.k = q, n, k
        self.bases = arr

    @classmethod
    def from_subspaces(cls, subspaces, q=None, n=None, k=None) -> "ConstantDimensionCode":
        subspaces = list(subspaces)
        if subspaces:
            q, n, k = subspaces[0].q, subspaces[0].n, subspaces[0].dim
        if q is None or n is None or k is None:
            raise QMatroidError("q, n and k are required for an empty code")
        for s in subspaces:
            if (s.q, s.n) != (q, n):
                raise ShapeError("codewords from different ambient spaces")
            if s.dim != k:
                raise QMatroidError(f"codeword {s} is not {k}-dimensional")
        return cls(q, n, k, [s.basis for s in subspaces])

    def __len__(self):
        return len(self.bases)

    def __getitem__(self, i) -> Subspace:
        return Subspace(self.q, self.n, tuple(map(tuple, self.bases[i].tolist())))

    def __iter__(self):
        return (self[i] for i in range(len(self)))

    @property
    def codewords(self) -> list[Subspace]:
        return list(self)


def min_subspace_distance_cdc(code: ConstantDimensionCode) -> int:
    """Exact minimum of d_S over all pairs of distinct codewords."""
    if len(code) < 2:
        raise QMatroidError("minimum distance needs at least two codewords")
    words = code.codewords
    return min(subspace_distance(a, b) for a, b in itertools.combinations(words, 2))


def has_min_distance(code: ConstantDimensionCode, d: int) -> bool:
    """Whether every pair of distinct codewords is at subspace distance >= d.

    For k-dimensional codewords, d_S(V, W) >= d means dim(V meet W) <= k - d/2,
    i.e. no t-dimensional subspace with t = k - d/2 + 1 lies in two codewords.
    Each codeword's t-subspaces are rowspan(C B) for C running over the
    canonical t x k bases; C B is again canonical and distinct C give distinct
    subspaces, so the test is that all the C B, over every C and every
    codeword, are pairwise different.  That is one sort of packed keys.
    """
    k, q = code.k, code.q
    if d <= 0:
        return True
    if d % 2:
        d += 1
    t = k - d // 2 + 1
    if t <= 0:
        return len(code) <= 1
    f = gf(q)
    bases = code.bases
    N, n = len(bases), code.n
    if f.e == 1:
        # (k, N*n) layout so each C B is one float matmul; exact for these sizes
        stacked = bases.transpose(1, 0, 2).reshape(k, -1).astype(np.float32)
    keys = []
    for c in enumerate_grassmannian(q, k, t):
        cm = np.array(c.basis, dtype=np.int64)  # t x k
        if f.e == 1:
            prod = (cm.astype(np.float32) @ stacked).astype(np.int16)
            prod %= q
            prod = prod.reshape(t, N, n).transpose(1, 0, 2).astype(np.int64)
        else:
            add, mul = f.add_table, f.mul_table
            prod = np.zeros((N, t, n), dtype=np.int64)
            for i in range(t):
                for j in range(k):
                    if cm[i, j]:
                        prod[:, i, :] = add[prod[:, i, :], mul[cm[i, j], bases[:, j, :]]]
        keys.append(_pack_keys(prod.reshape(N, -1), q))
    merged = [np.concatenate(cols) for cols in zip(*keys)]
    return _keys_distinct(merged)


def gabidulin_code(q: int, m: int, n: int, k: int) -> GeneratorMatrix:
    """Gabidulin generator G[i][j] = g_j^(q^i) with g_j = alpha^j.

    alpha is the deterministic primitive element of F_{q^m}; the g_j are
    F_q-linearly independent, so the code is MRD with distance n - k + 1.
    """
    if not is_prime(q):
        raise QMatroidError("q must be prime")
    if not 1 <= k <= n <= m:
        raise QMatroidError(f"need 1 <= k <= n <= m, got k={k}, n={n}, m={m}")
    f = field_make(q, m)
    points = [f.exp(j) for j in range(n)]
    rows = [[f.pow(g, q**i) for g in points] for i in range(k)]
    return GeneratorMatrix(q, m, rows, n)


def _expand_basis(g: GeneratorMatrix) -> np.ndarray:
    """F_q-basis of the code as k_vec x m matrices, shape (m*k', n', m)."""
    f = g.field
    coords = f.power_coordinates
    out = []
    for row in g.rows:
        for a in range(g.m):
            scale = f.exp(a)
            word = [f.mul(scale, x) for x in row]
            out.append([coords[x] for x in word])
    return np.array(out, dtype=np.int64)


def lifted_mrd(q: int, n: int, k: int, d: int) -> ConstantDimensionCode:
    """Lifted Gabidulin code: rowspan([I_k | M]) for every codeword matrix M.

    The Gabidulin code over F_{q^(n-k)} has length k, dimension k - d/2 + 1
    and rank distance d/2.  Codewords are expanded coordinate-wise in the
    power basis into k x (n-k) matrices over F_q.  The result has
    q^((n-k)(k-d/2+1)) codewords at pairwise subspace distance >= d.
    """
    if not is_prime(q):
        raise QMatroidError("q must be prime")
    if 2 * k > n:
        raise QMatroidError(f"need 2k <= n, got k={k}, n={n}")
    if d % 2 or not 4 <= d <= 2 * k:
        raise QMatroidError(f"need d even with 4 <= d <= 2k, got d={d}")
    g = gabidulin_code(q, n - k, k, k - d // 2 + 1)
    basis = _expand_basis(g).reshape(-1, k * (n - k))  # F_q-basis, dim (n-k)(k-d/2+1)
    dim = len(basis)
    # all F_q-combinations of the basis, first basis vector varying slowest
    coeffs = np.indices((q,) * dim, dtype=np.int64).reshape(dim, -1).T
    mats = (coeffs @ basis) % q
    mats = mats.reshape(-1, k, n - k)
    eye = np.broadcast_to(np.eye(k, dtype=np.int64), (len(mats), k, k))
    return ConstantDimensionCode(q, n, k, np.concatenate([eye, mats], axis=2))


def grassmann_independent_check(subspaces, k: int) -> bool:
    """No two members meet in dimension k - 1 (independent in J_q(n, k))."""
    subspaces = list(subspaces)
    for s in subspaces:
        if s.dim != k:
            raise ShapeError(f"{s} is not {k}-dimensional")
    return all(intersect(a, b).dim <= k - 2 for a, b in itertools.combinations(subspaces, 2))


def cdc_to_paving(code: ConstantDimensionCode, check: bool = True) -> RankTable:
    """Paving q-matroid of rank k with the codewords as rank-(k-1) circuits."""
    if len(code) >= 2 and min_subspace_distance_cdc(code) < 4:
        raise InvalidCollection("constant dimension code has minimum distance < 4")
    return paving_from_collection(code.codewords, code.k, code.q, code.n, check=check)


def greedy_partial_spread(q: int, n: int, k: int) -> list[Subspace]:
    """Greedy pick, in canonical order, of k-spaces meeting pairwise in {0}."""
    chosen = []
    for s in enumerate_grassmannian(q, n, k):
        if all(intersect(s, c).dim == 0 for c in chosen):
            chosen.append(s)
    return chosen
