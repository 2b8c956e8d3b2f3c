"""Dense matrices over finite fields: RREF, rank, kernel, determinant.

Matrices are tuples of row tuples of integer element codes (see
:mod:`qmatroids.field`).  The functions ending in ``_rows`` work on raw rows
and are what the enumeration kernels call; :class:`Matrix` bundles rows with
their field for the public API.  Over F_2 the eliminations run on
bit-packed rows.
"""

from __future__ import annotations

from .errors import ShapeError
from .field import FieldElement, FieldSpec

__all__ = [
    "Matrix",
    "rref_rows",
    "rank_rows",
    "kernel_rows",
    "det_rows",
    "matmul_rows",
    "rref",
    "rank",
    "kernel_basis",
    "det",
    "mat_mul",
    "transpose",
]


def _pack(rows):
    return [sum(1 << j for j, x in enumerate(r) if x) for r in rows]


def _rref_gf2(rows, ncols):
    work = _pack(rows)
    pivots = []
    r = 0
    nrows = len(work)
    for c in range(ncols):
        if r == nrows:
            break
        bit = 1 << c
        for i in range(r, nrows):
            if work[i] & bit:
                break
        else:
            continue
        work[r], work[i] = work[i], work[r]
        pr = work[r]
        for i in range(nrows):
            if i != r and work[i] & bit:
                work[i] ^= pr
        pivots.append(c)
        r += 1
    out = tuple(tuple((w >> j) & 1 for j in range(ncols)) for w in work)
    return out, pivots


def _rank_gf2(rows):
    basis = {}  # leading bit -> vector
    for w in _pack(rows):
        while w:
            h = w.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = w
                break
            w ^= b
    return len(basis)


def rref_rows(field: FieldSpec, rows, ncols: int):
    """Reduced row echelon form and pivot columns.  Zero rows are kept."""
    if field.order == 2:
        return _rref_gf2(rows, ncols)
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots = []
    r = 0
    add, mul, neg, inv = field.add, field.mul, field.neg, field.inv
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r, nrows):
            if work[i][c]:
                break
        else:
            continue
        work[r], work[i] = work[i], work[r]
        pr = work[r]
        s = inv(pr[c])
        if s != 1:
            pr[:] = [mul(s, x) for x in pr]
        for i in range(nrows):
            if i != r:
                f = work[i][c]
                if f:
                    nf = neg(f)
                    row = work[i]
                    work[i] = [add(x, mul(nf, y)) if y else x for x, y in zip(row, pr)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work), pivots


def rank_rows(field: FieldSpec, rows, ncols: int) -> int:
    if field.order == 2:
        return _rank_gf2(rows)
    return len(rref_rows(field, rows, ncols)[1])


def kernel_rows(field: FieldSpec, rows, ncols: int):
    """Basis of {x : M x^T = 0}, one row per free column of the RREF."""
    reduced, pivots = rref_rows(field, rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(reduced[i][f])
        out.append(tuple(v))
    return tuple(out)


def det_rows(field: FieldSpec, rows) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ShapeError("determinant of a non-square matrix")
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    mul, sub = field.mul, field.sub
    if n == 2:
        (a, b), (c, d) = rows
        return sub(mul(a, d), mul(b, c))
    work = [list(r) for r in rows]
    add, neg, inv = field.add, field.neg, field.inv
    result = 1
    for c in range(n):
        for i in range(c, n):
            if work[i][c]:
                break
        else:
            return 0
        if i != c:
            work[c], work[i] = work[i], work[c]
            result = neg(result)
        pr = work[c]
        result = mul(result, pr[c])
        s = inv(pr[c])
        for i in range(c + 1, n):
            f = work[i][c]
            if f:
                nf = neg(mul(f, s))
                work[i] = [add(x, mul(nf, y)) for x, y in zip(work[i], pr)]
    return result


def matmul_rows(field: FieldSpec, a, b, inner: int | None = None, ncols: int | None = None):
    if inner is None:
        inner = len(b)
    if any(len(r) != inner for r in a) or len(b) != inner:
        raise ShapeError("non-conformable matrices")
    if ncols is None:
        ncols = len(b[0]) if b else 0
    cols = list(zip(*b)) if b else [()] * ncols
    add, mul = field.add, field.mul
    out = []
    for r in a:
        row = []
        for col in cols:
            s = 0
            for x, y in zip(r, col):
                if x and y:
                    s = add(s, mul(x, y))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


class Matrix:
    """An immutable rows x cols matrix over a finite field."""

    __slots__ = ("field", "rows", "ncols")

    def __init__(self, field: FieldSpec, rows, ncols: int | None = None):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ShapeError("column count required for an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ShapeError("ragged matrix")
            if any(not 0 <= x < field.order for x in r):
                raise ShapeError(f"entry outside F_{field.order}")
        self.field = field
        self.rows = rows
        self.ncols = ncols

    @classmethod
    def identity(cls, field, k):
        return cls(field, [[int(i == j) for j in range(k)] for i in range(k)], k)

    @classmethod
    def zeros(cls, field, r, c):
        return cls(field, [[0] * c for _ in range(r)], c)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ncols, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.format(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols} over F_{self.field.order}: [{body}])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    @property
    def T(self) -> "Matrix":
        return transpose(self)

    def rref(self):
        return rref(self)

    def rank(self) -> int:
        return rank(self)

    def kernel(self) -> "Matrix":
        return kernel_basis(self)

    def det(self) -> FieldElement:
        return det(self)


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    reduced, pivots = rref_rows(m.field, m.rows, m.ncols)
    return Matrix(m.field, reduced, m.ncols), pivots


def rank(m: Matrix) -> int:
    return rank_rows(m.field, m.rows, m.ncols)


def kernel_basis(m: Matrix) -> Matrix:
    return Matrix(m.field, kernel_rows(m.field, m.rows, m.ncols), m.ncols)


def det(m: Matrix) -> FieldElement:
    if m.nrows != m.ncols:
        raise ShapeError("determinant of a non-square matrix")
    return FieldElement(m.field, det_rows(m.field, m.rows))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.field != b.field:
        raise ShapeError("matrices over different fields")
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    return Matrix(a.field, matmul_rows(a.field, a.rows, b.rows, a.ncols, b.ncols), b.ncols)


def transpose(m: Matrix) -> Matrix:
    rows = tuple(zip(*m.rows)) if m.rows else ((),) * m.ncols
    return Matrix(m.field, rows, m.nrows)
