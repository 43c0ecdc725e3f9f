"""Prime generation, deterministic 64-bit primality, factorization, and
exact counts of primes in arithmetic progressions."""

import math
import random
from dataclasses import dataclass

import numpy as np

# Above this bound composites are struck out block by block to keep the
# working set cache-sized; the flags array itself is always O(limit).
_FLAT_SIEVE_LIMIT = 10**7
_SEGMENT = 1 << 20
_SIEVE_GUARD = 2**32

# Strong-pseudoprime witnesses: deterministic for every n < 2^64.
_MR_TIERS = (
    (2_047, (2,)),
    (1_373_653, (2, 3)),
    (3_215_031_751, (2, 3, 5, 7)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (2**64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_TRIAL_BOUND = 1 << 16
_trial_primes = None


@dataclass(frozen=True)
class PrimeTable:
    """All primes <= limit, with O(1) membership for n <= limit.

    Immutable after construction; safe to share across workers.
    """

    limit: int
    primes: np.ndarray  # ascending int64
    flags: np.ndarray   # flags[n] iff n prime

    def is_prime(self, n: int) -> bool:
        if not 0 <= n <= self.limit:
            raise ValueError(f"n={n} outside table range [0, {self.limit}]")
        return bool(self.flags[n])

    def count_below(self, x: int) -> int:
        """Number of primes p < x; requires x <= limit + 1."""
        if x > self.limit + 1:
            raise ValueError(f"x={x} exceeds table limit {self.limit}")
        return int(np.searchsorted(self.primes, x, side="left"))


def sieve_primes(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes up to `limit` inclusive."""
    if limit < 2:
        raise ValueError("sieve limit must be >= 2")
    if limit > _SIEVE_GUARD:
        raise ValueError(f"sieve limit {limit} exceeds guard {_SIEVE_GUARD}")
    flags = np.zeros(limit + 1, dtype=bool)
    flags[2:] = True
    root = math.isqrt(limit)
    if limit <= _FLAT_SIEVE_LIMIT:
        for p in range(2, root + 1):
            if flags[p]:
                flags[p * p:: p] = False
    else:
        base = sieve_primes(root).primes.tolist()
        for lo in range(2, limit + 1, _SEGMENT):
            hi = min(lo + _SEGMENT, limit + 1)
            for p in base:
                start = max(p * p, ((lo + p - 1) // p) * p)
                if start < hi:
                    flags[start:hi:p] = False
    primes = np.flatnonzero(flags).astype(np.int64)
    return PrimeTable(limit=limit, primes=primes, flags=flags)


def _mr_composite_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if witness a proves n composite (n odd, n-1 = d * 2^s)."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test for 0 <= n < 2^64."""
    if n >= 2**64:
        raise ValueError("is_prime is deterministic only below 2^64")
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for bound, witnesses in _MR_TIERS:
        if n < bound:
            break
    return not any(_mr_composite_witness(n, a, d, s) for a in witnesses)


def _small_trial_primes() -> list:
    global _trial_primes
    if _trial_primes is None:
        _trial_primes = sieve_primes(_TRIAL_BOUND).primes.tolist()
    return _trial_primes


def _brent_rho(n: int, rng: random.Random) -> int:
    """Nontrivial factor of odd composite n (Brent's cycle variant)."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            y = ys
            while g == 1:
                y = (y * y + c) % n
                g = math.gcd(abs(x - y), n)
        if g != n:
            return g


def _factor_hard(n: int, out: dict, rng: random.Random) -> None:
    """Split n (no prime factors below the trial bound) into out."""
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _brent_rho(n, rng)
    _factor_hard(d, out, rng)
    _factor_hard(n // d, out, rng)


def factorize(n: int, table: PrimeTable = None) -> dict:
    """Prime factorization of n >= 1 as {prime: exponent}, keys ascending."""
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out = {}
    trial = table.primes.tolist() if table is not None else _small_trial_primes()
    covered = True
    for p in trial:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    else:
        covered = n == 1 or trial[-1] ** 2 > n
    if n > 1:
        if covered or is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            _factor_hard(n, out, random.Random(n))
    return dict(sorted(out.items()))


def count_primes_in_ap(x: int, modulus: int, residue: int, table: PrimeTable) -> int:
    """Number of primes p < x with p == residue (mod modulus)."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if x < 1:
        raise ValueError("x must be >= 1")
    if x > table.limit + 1:
        raise ValueError(f"x={x} exceeds table limit {table.limit}")
    cut = int(np.searchsorted(table.primes, x, side="left"))
    if modulus == 1:
        return cut
    return int(np.count_nonzero(table.primes[:cut] % modulus == residue % modulus))
