"""Sparse exponent-vector arithmetic and p-adic valuation formulas."""

from .primes import PrimeTable, count_primes_in_ap

# Exponent vectors are plain dicts {prime: exponent} with ascending keys and
# no zero entries; signed entries are allowed for quotient vectors.


def _normalized(items) -> dict:
    return {p: e for p, e in sorted(items) if e != 0}


def vec_add(u: dict, v: dict) -> dict:
    """Pointwise sum of two exponent vectors."""
    keys = set(u) | set(v)
    return _normalized((p, u.get(p, 0) + v.get(p, 0)) for p in keys)


def vec_sub(u: dict, v: dict) -> dict:
    """Pointwise difference u - v (entries may go negative)."""
    keys = set(u) | set(v)
    return _normalized((p, u.get(p, 0) - v.get(p, 0)) for p in keys)


def dominates(u: dict, v: dict) -> bool:
    """True iff u >= v pointwise, i.e. the value of v divides the value of u."""
    return all(e <= u.get(p, 0) for p, e in v.items())


def vec_value(v: dict) -> int:
    """Exact integer represented by a non-negative exponent vector."""
    if any(e < 0 for e in v.values()):
        raise ValueError("vector has negative exponents")
    out = 1
    for p, e in v.items():
        out *= p**e
    return out


def format_vec(v: dict) -> str:
    """Canonical rendering `p1^e1 * p2^e2 * ...`; `1` when empty."""
    if not v:
        return "1"
    return " * ".join(f"{p}^{e}" for p, e in sorted(v.items()))


def digit_sum(n: int, base: int) -> int:
    """Sum of the digits of n written in the given base."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if base < 2:
        raise ValueError("base must be >= 2")
    s = 0
    while n:
        n, r = divmod(n, base)
        s += r
    return s


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n! (sum of floor(n / p^i))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    if __debug__:
        assert total == (n - digit_sum(n, p)) // (p - 1)
    return total


def kummer_carries(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p.

    Equals the exponent of p in the binomial coefficient C(a+b, a).
    """
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0")
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    carries = 0
    carry = 0
    while a or b or carry:
        carry = (a % p + b % p + carry) // p
        carries += carry
        a //= p
        b //= p
    return carries


def shifted_prime_product_valuation(x: int, q: int, table: PrimeTable) -> int:
    """Exponent of the prime q in the product of (p - 1) over primes p < x.

    Counts, for each power q^m < x, the primes p < x with p == 1 (mod q^m);
    each such p contributes one factor q at level m.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if q < 2:
        raise ValueError("q must be a prime >= 2")
    if x > table.limit + 1:
        raise ValueError(f"x={x} exceeds table limit {table.limit}")
    total = 0
    qm = q
    while qm < x:
        total += count_primes_in_ap(x, qm, 1, table)
        qm *= q
    return total
