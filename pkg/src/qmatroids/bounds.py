"""Counting bounds for q-matroids, evaluated exactly or in log2 space.

The lower bound on the number of q-matroids is doubly exponential, so it is
carried as its exact integer base-2 exponent.  Upper bounds on the number of
representable q-matroids are carried as log2 values at high precision
(mpmath, 60 significant digits).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import QMatroidError
from .lattice import gaussian_binomial

__all__ = [
    "LogValue",
    "BoundRow",
    "Sandwich",
    "lower_bound_N",
    "lower_bound_N_all",
    "upper_bound_R_rank1",
    "upper_bound_R_rank_k",
    "upper_bound_R_uniform",
    "upper_bound_R_all",
    "asymptotic_table",
    "crossover",
    "table_csv",
    "table_json",
    "qbinom_sandwich",
    "rank1_census_formula",
    "SANDWICH_CONSTANT",
]

DPS = 60
SANDWICH_CONSTANT = Fraction(111, 32)

_ctx = mpmath.mp.clone()
_ctx.dps = DPS
LOG2_E = _ctx.log(_ctx.e, 2)
LOG2_SANDWICH = _ctx.log(_ctx.mpf(111) / 32, 2)


@dataclass(frozen=True)
class LogValue:
    """log2 of a positive quantity, as an mpmath real at 60 digits."""

    log2: mpmath.mpf

    def __float__(self):
        return float(self.log2)

    def __lt__(self, other):
        return self.log2 < _log2_of(other)

    def __le__(self, other):
        return self.log2 <= _log2_of(other)

    def __gt__(self, other):
        return self.log2 > _log2_of(other)

    def __ge__(self, other):
        return self.log2 >= _log2_of(other)

    def exceeds(self, count: int) -> bool:
        """Whether the represented quantity is strictly greater than ``count``."""
        return count <= 0 or self.log2 > _ctx.log(count, 2)

    def fixed(self, places: int = 12) -> str:
        return _fixed(self.log2, places)


def _log2_of(x):
    return x.log2 if isinstance(x, LogValue) else _ctx.mpf(x)


def _fixed(x, places: int) -> str:
    # round half away from zero at `places` decimals, exact decimal string
    mag = int(_ctx.log10(abs(x))) if x else 0
    with _ctx.workdps(max(mag, 0) + places + DPS):
        scaled = _ctx.nint(x * 10**places)
    v = int(scaled)
    sign = "-" if v < 0 else ""
    v = abs(v)
    return f"{sign}{v // 10**places}.{v % 10**places:0{places}d}"


def _log2_add(a, b):
    """log2(2^a + 2^b)."""
    hi, lo = (a, b) if a >= b else (b, a)
    return hi + _ctx.log(1 + _ctx.power(2, lo - hi), 2)


def lower_bound_N(n: int, k: int, q: int) -> int:
    """Exponent e with 2^e < N_q(k, n): e = q^((n-k)(k-1))."""
    if n < 4:
        raise QMatroidError(f"need n >= 4, got n={n}")
    if not 2 <= k <= n // 2:
        raise QMatroidError(f"need 2 <= k <= n/2, got k={k}, n={n}")
    if q < 2:
        raise QMatroidError("q must be >= 2")
    return q ** ((n - k) * (k - 1))


def lower_bound_N_all(n: int, q: int) -> int:
    """Exponent of the lower bound on all q-matroids: the k = floor(n/2) case."""
    if n < 4:
        raise QMatroidError(f"need n >= 4, got n={n}")
    return lower_bound_N(n, n // 2, q)


def _rank1_exponent(n: int, q: int):
    # log2 of q^(log_q n + n^2 + n log_q e) = n * q^(n^2) * e^n
    return _ctx.log(n, 2) + n * n * _ctx.log(q, 2) + n * LOG2_E


def upper_bound_R_rank1(n: int, q: int) -> LogValue:
    """log2 of n q^(n^2) e^n + 1, an upper bound on rank-1 representable q-matroids."""
    if n < 2:
        raise QMatroidError(f"need n >= 2, got n={n}")
    return LogValue(_log2_add(_rank1_exponent(n, q), _ctx.mpf(0)))


def upper_bound_R_rank_k(n: int, k: int, q: int) -> LogValue:
    """log2 of (111/32)^(kn) q^(n^2 k^2 - n k^3) e^(kn), for 2 <= k <= n/2."""
    if not 2 <= k <= n // 2:
        raise QMatroidError(f"need 2 <= k <= n/2, got k={k}, n={n} (use the rank-1 bound for k=1)")
    poly = n * n * k * k - n * k**3
    return LogValue(poly * _ctx.log(q, 2) + n * k * (LOG2_E + LOG2_SANDWICH))


def upper_bound_R_uniform(n: int, q: int, printed: bool = False) -> LogValue:
    """Bound valid for every 2 <= k <= n/2: the rank-k bound evaluated at k = n/2.

    The rank-k exponent increases in k on [2, n/2], and at k = n/2 its
    polynomial part is n^4/8.  ``printed=True`` instead uses n^2/4, the form
    in which this bound is sometimes stated; that form does not dominate the
    rank-k bounds and is kept only for comparison.
    """
    if n < 4:
        raise QMatroidError(f"need n >= 4, got n={n}")
    poly = Fraction(n * n, 4) if printed else Fraction(n**4, 8)
    half = _ctx.mpf(n * n) / 2
    return LogValue(
        _ctx.mpf(poly.numerator) / poly.denominator * _ctx.log(q, 2)
        + half * (LOG2_E + LOG2_SANDWICH)
    )


def upper_bound_R_all(n: int, q: int, printed: bool = False,
                      sum_over_k: bool = False) -> LogValue:
    """log2 of 2 (n/2 * U + R1 + 2), an upper bound on all representable q-matroids.

    U is the uniform bound over 2 <= k <= n/2, R1 the rank-1 bound without
    its +1, and the factor 2 accounts for ranks above n/2 by duality.  With
    ``sum_over_k`` the n/2 * U term is replaced by the sum of the individual
    rank-k bounds (tighter; off by default).
    """
    if n < 4:
        raise QMatroidError(f"need n >= 4, got n={n}")
    if sum_over_k:
        middle = None
        for k in range(2, n // 2 + 1):
            term = upper_bound_R_rank_k(n, k, q).log2
            middle = term if middle is None else _log2_add(middle, term)
    else:
        middle = upper_bound_R_uniform(n, q, printed).log2 + _ctx.log(_ctx.mpf(n) / 2, 2)
    total = _log2_add(_log2_add(middle, _rank1_exponent(n, q)), _ctx.mpf(1))
    return LogValue(total + 1)


@dataclass(frozen=True)
class BoundRow:
    n: int
    log2_lower_N: int
    log2_upper_R: LogValue

    @property
    def gap(self):
        """log2_lower_N - log2_upper_R, at enough precision for the exact integer."""
        with _ctx.workdps(len(str(self.log2_lower_N)) + DPS):
            return _ctx.mpf(self.log2_lower_N) - self.log2_upper_R.log2

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "log2_lower_N": str(self.log2_lower_N),
            "log2_upper_R": _fixed(self.log2_upper_R.log2, 12),
            "gap": _fixed(self.gap, 12),
        }


def asymptotic_table(q: int, n_from: int, n_to: int, printed: bool = False,
                     sum_over_k: bool = False) -> list[BoundRow]:
    if n_from < 4:
        raise QMatroidError(f"need n_from >= 4, got {n_from}")
    if n_to < n_from:
        raise QMatroidError(f"empty range {n_from}..{n_to}")
    return [
        BoundRow(n, lower_bound_N_all(n, q), upper_bound_R_all(n, q, printed, sum_over_k))
        for n in range(n_from, n_to + 1)
    ]


def crossover(rows: list[BoundRow]) -> int | None:
    """Smallest n from which every later row has a positive, strictly increasing gap."""
    n0 = None
    for i in range(len(rows) - 1, -1, -1):
        ok = rows[i].gap > 0 and (i == len(rows) - 1 or rows[i + 1].gap > rows[i].gap)
        if not ok:
            break
        n0 = rows[i].n
    return n0


TABLE_COLUMNS = ("n", "log2_lower_N", "log2_upper_R", "gap")


def table_csv(rows: list[BoundRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.as_dict())
    return buf.getvalue()


def table_json(rows: list[BoundRow], q: int) -> dict:
    return {"format": "qml-v1", "type": "bounds-table", "q": q,
            "rows": [r.as_dict() for r in rows]}


@dataclass(frozen=True)
class Sandwich:
    lower: int
    value: int
    upper: Fraction

    def holds(self) -> bool:
        return self.lower <= self.value <= self.upper


def qbinom_sandwich(n: int, k: int, q: int) -> Sandwich:
    """q^((n-k)k) <= [n choose k]_q <= 111/32 q^((n-k)k), all exact."""
    if not 0 <= k <= n:
        raise QMatroidError(f"need 0 <= k <= n, got k={k}, n={n}")
    if q < 2:
        raise QMatroidError("q must be >= 2")
    base = q ** ((n - k) * k)
    s = Sandwich(base, gaussian_binomial(n, k, q), SANDWICH_CONSTANT * base)
    if not s.holds():
        raise AssertionError(f"q-binomial sandwich fails at n={n}, k={k}, q={q}")
    return s


def rank1_census_formula(n: int, q: int) -> int:
    """Number of rank-1 q-matroids on F_q^n, all representable: sum_{i<n} [n choose i]_q."""
    return sum(gaussian_binomial(n, i, q) for i in range(n))
