"""Prime-exponent tables for phi(n!) and the least-c divisibility solver."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .primes import sieve_primes
from .valuations import vec_add

_MAX_TABLE_BYTES = 2 * 10**9


class TableExhausted(Exception):
    """The least c for a pair lies beyond the table's n_max."""

    def __init__(self, n_max: int, lower_bound: int):
        self.n_max = n_max
        self.lower_bound = lower_bound
        super().__init__(
            f"least c exceeds table n_max={n_max} (c >= {lower_bound}); "
            "rebuild with a larger table"
        )


@dataclass(frozen=True)
class PairResult:
    """Least c with phi(a!) * phi(b!) dividing phi(c!), and the ratio c/(a+b)."""

    a: int
    b: int
    c: int
    r: Fraction


@dataclass(frozen=True)
class PhiFactorialTable:
    """Cumulative exponent arrays: prefix[q][n] is the exponent of q in phi(n!).

    Built from the recurrence phi(n!) = w(n) * phi((n-1)!) where w(n) = n - 1
    for prime n and w(n) = n otherwise (every prime factor of a composite n
    already divides (n-1)!, so the totient picks up the full factor n).
    """

    n_max: int
    primes: np.ndarray  # primes <= n_max, ascending int64
    prefix: dict        # q -> int32 array of length n_max + 1

    def _check_n(self, n: int) -> None:
        if not 0 <= n <= self.n_max:
            raise ValueError(f"n={n} outside table range [0, {self.n_max}]")

    def valuation(self, q: int, n: int) -> int:
        """Exponent of the prime q in phi(n!)."""
        self._check_n(n)
        if q in self.prefix:
            return int(self.prefix[q][n])
        if q > self.n_max:
            return 0  # q can divide neither p nor p - 1 for any p <= n
        raise ValueError(f"q={q} is not a prime")

    def exponent_vec(self, n: int) -> dict:
        """Full factorization of phi(n!) as an exponent vector."""
        self._check_n(n)
        cut = int(np.searchsorted(self.primes, n, side="right"))
        out = {}
        for q in self.primes[:cut].tolist():
            e = int(self.prefix[q][n])
            if e:
                out[q] = e
        return out

    def value(self, n: int) -> int:
        """phi(n!) as an exact integer (grows fast; keep n modest)."""
        out = 1
        for q, e in self.exponent_vec(n).items():
            out *= q**e
        return out


def build_table(n_max: int, max_bytes: int = _MAX_TABLE_BYTES) -> PhiFactorialTable:
    """Tabulate the exponent of every prime q <= n_max in phi(n!) for n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max == 1:
        return PhiFactorialTable(1, np.empty(0, dtype=np.int64), {})
    pt = sieve_primes(n_max)
    est = 4 * (n_max + 1) * len(pt.primes)
    if est > max_bytes:
        raise ValueError(
            f"table for n_max={n_max} needs ~{est} bytes (> {max_bytes}); "
            "raise max_bytes to proceed"
        )
    w = np.arange(n_max + 1, dtype=np.int64)
    w[pt.flags] -= 1
    w[0] = w[1] = 1
    prefix = {}
    for q in pt.primes.tolist():
        f = np.zeros(n_max + 1, dtype=np.int32)
        qi = q
        while qi <= n_max:
            f[qi::qi] += 1
            qi *= q
        prefix[q] = np.cumsum(f[w], dtype=np.int32)
    return PhiFactorialTable(n_max=n_max, primes=pt.primes, prefix=prefix)


def table_size_for_pairs(n: int) -> int:
    """n_max comfortably above the observed ceiling c <= s + s/8 for s = 2n."""
    return (18 * n + 7) // 8 + 64


def table_for_pairs(n: int, max_bytes: int = _MAX_TABLE_BYTES) -> PhiFactorialTable:
    """Table sized so that every pair with a, b <= n solves without exhaustion."""
    return build_table(table_size_for_pairs(n), max_bytes=max_bytes)


def _check_pair(a: int, b: int, table: PhiFactorialTable) -> None:
    if a < 1 or b < 1:
        raise ValueError("a and b must be >= 1")
    if max(a, b) > table.n_max:
        raise ValueError(f"pair ({a}, {b}) exceeds table range n_max={table.n_max}")


def solve_pair(a: int, b: int, table: PhiFactorialTable) -> PairResult:
    """Least c with phi(a!) * phi(b!) | phi(c!), by per-prime binary search."""
    _check_pair(a, b, table)
    cut = int(np.searchsorted(table.primes, max(a, b), side="right"))
    c = 1
    for q in table.primes[:cut].tolist():
        pq = table.prefix[q]
        t = int(pq[a]) + int(pq[b])
        if t == 0:
            continue
        if t > int(pq[-1]):
            raise TableExhausted(table.n_max, table.n_max + 1)
        cq = int(np.searchsorted(pq, t, side="left"))
        if cq > c:
            c = cq
    return PairResult(a=a, b=b, c=c, r=Fraction(c, a + b))


def solve_range(a: int, b_lo: int, b_hi: int, table: PhiFactorialTable) -> np.ndarray:
    """Vector of least c over b in [b_lo, b_hi] for fixed a."""
    _check_pair(a, max(b_lo, 1), table)
    if not 1 <= b_lo <= b_hi <= table.n_max:
        raise ValueError("need 1 <= b_lo <= b_hi <= n_max")
    cut = int(np.searchsorted(table.primes, max(a, b_hi), side="right"))
    cs = np.ones(b_hi - b_lo + 1, dtype=np.int64)
    for q in table.primes[:cut].tolist():
        pq = table.prefix[q]
        t = int(pq[a]) + pq[b_lo: b_hi + 1].astype(np.int64)
        if int(t.max()) > int(pq[-1]):
            raise TableExhausted(table.n_max, table.n_max + 1)
        np.maximum(cs, np.searchsorted(pq, t, side="left"), out=cs)
    return cs


def solve_pair_ascending(a: int, b: int, table: PhiFactorialTable) -> int:
    """Least c by deficit-tracking linear ascent; slow oracle for solve_pair."""
    _check_pair(a, b, table)
    target = vec_add(table.exponent_vec(a), table.exponent_vec(b))
    if not target:
        return 1
    remaining = dict(target)
    for c in range(1, table.n_max + 1):
        for q in [q for q in remaining if table.prefix[q][c] >= remaining[q]]:
            del remaining[q]
        if not remaining:
            return c
    raise TableExhausted(table.n_max, table.n_max + 1)


def pair_ratio(a: int, b: int, table: PhiFactorialTable) -> Fraction:
    """The exact ratio c / (a + b) for the least admissible c."""
    return solve_pair(a, b, table).r


def quotient_valuation(a: int, b: int, c: int, table: PhiFactorialTable) -> dict:
    """Signed exponent vector of phi(c!) / (phi(a!) * phi(b!)).

    Empty means the quotient is exactly 1; any negative entry means the
    divisibility fails at that prime.
    """
    if a < 1 or b < 1 or c < 1:
        raise ValueError("a, b, c must be >= 1")
    hi = max(a, b, c)
    if hi > table.n_max:
        raise ValueError(f"arguments exceed table range n_max={table.n_max}")
    cut = int(np.searchsorted(table.primes, hi, side="right"))
    out = {}
    for q in table.primes[:cut].tolist():
        pq = table.prefix[q]
        e = int(pq[c]) - int(pq[a]) - int(pq[b])
        if e:
            out[q] = e
    return out
