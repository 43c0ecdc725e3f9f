"""Mechanical checks of finite claims: valuation growth bands, prime-count
bounds along arithmetic progressions, residue sieves, and exact identities."""

import json
import math
import os
import random
import tempfile
from dataclasses import dataclass, field

import numpy as np

from .phi_factorial import build_table, quotient_valuation, solve_pair
from .primes import PrimeTable, factorize, is_prime, sieve_primes
from .valuations import shifted_prime_product_valuation

_MAX_STORED_COUNTEREXAMPLES = 20
_SPOT_SEED = 2026


@dataclass
class VerificationReport:
    """Outcome of one mechanical check; serializes to a single JSONL line."""

    claim_id: str
    parameters: dict
    passed: bool
    checked_count: int
    counterexamples: list = field(default_factory=list)
    notes: str = ""

    def to_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "parameters": _jsonable(self.parameters),
            "passed": self.passed,
            "checked_count": self.checked_count,
            "counterexamples": _jsonable(self.counterexamples),
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    return obj


def atomic_write_text(path: str, text: str) -> None:
    """Write text to path via a same-directory temp file and rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_reports(path: str, reports: list) -> None:
    """Persist reports as JSONL, one object per line, atomically."""
    atomic_write_text(path, "".join(r.to_json() + "\n" for r in reports))


def _trim(items: list) -> list:
    return items[:_MAX_STORED_COUNTEREXAMPLES]


def check_lemma2_ratio(q: int = 2, x: int = 10**6, table: PrimeTable = None) -> VerificationReport:
    """Compare the exact exponent of q in prod_{p<x}(p-1) to its main term.

    Main term: (q / (q-1)^2) * x / ln x. The [0.9, 1.3] band is only
    enforced for x >= 10^4; below that the ratio is reported informationally.
    """
    if not is_prime(q):
        raise ValueError("q must be prime")
    if x < 100:
        raise ValueError("x must be >= 100")
    if table is None or table.limit + 1 < x:
        table = sieve_primes(x)
    exact = shifted_prime_product_valuation(x, q, table)
    main = (q / (q - 1) ** 2) * x / math.log(x)
    ratio = exact / main
    in_band = 0.9 <= ratio <= 1.3
    gated = x >= 10**4
    passed = in_band or not gated
    counterexamples = []
    if gated and not in_band:
        counterexamples.append({"q": q, "x": x, "ratio": ratio})
    notes = f"ratio={ratio:.6f}" + ("" if gated else " (x below gate; informational)")
    return VerificationReport(
        claim_id="lemma2",
        parameters={"q": q, "x": x, "exact": exact, "main_term": main},
        passed=passed,
        checked_count=1,
        counterexamples=counterexamples,
        notes=notes,
    )


def _shifted_valuation_curve(q: int, a_max: int, table: PrimeTable) -> np.ndarray:
    """curve[a] = exponent of q in prod_{p<=a}(p-1), for 0 <= a <= a_max."""
    hits = np.zeros(a_max + 1, dtype=np.int64)
    primes = table.primes[table.primes <= a_max]
    qm = q
    while qm <= a_max:
        sel = primes[primes % qm == 1]
        np.add.at(hits, sel, 1)
        qm *= q
    return np.cumsum(hits)


def check_lemma6(a_max: int = 10**5, q_max: int = 50, table: PrimeTable = None) -> VerificationReport:
    """Exponent of q in prod_{p<=a}(p-1) stays below 0.23*a/(q-1) + 7*ln(a)/ln(q).

    Swept exhaustively over 2 <= a <= a_max for every prime q with 7 < q <= q_max,
    with spot cross-checks against the direct per-point computation.
    """
    if q_max < 11:
        raise ValueError("q_max must be at least 11 (the claim excludes q <= 7)")
    if a_max < 2:
        raise ValueError("a_max must be >= 2")
    if table is None or table.limit < a_max:
        table = sieve_primes(max(a_max, 11))
    qs = [q for q in sieve_primes(q_max).primes.tolist() if q > 7]
    a = np.arange(a_max + 1, dtype=np.float64)
    log_a = np.log(np.maximum(a, 1.0))
    checked = 0
    counterexamples = []
    rng = random.Random(_SPOT_SEED)
    for q in qs:
        curve = _shifted_valuation_curve(q, a_max, table)
        bound = 0.23 * a / (q - 1) + 7.0 * log_a / math.log(q)
        bad = np.nonzero(curve[2:] > bound[2:])[0] + 2
        checked += a_max - 1
        for idx in bad[:_MAX_STORED_COUNTEREXAMPLES].tolist():
            counterexamples.append(
                {"q": q, "a": int(idx), "valuation": int(curve[idx]), "bound": float(bound[idx])}
            )
        for _ in range(8):  # tie the curve to the direct formula at random points
            spot = rng.randrange(2, a_max + 1)
            direct = shifted_prime_product_valuation(spot + 1, q, table)
            checked += 1
            if direct != int(curve[spot]):
                counterexamples.append({"q": q, "a": spot, "spot_mismatch": True})
    return VerificationReport(
        claim_id="lemma6",
        parameters={"a_max": a_max, "q_min": qs[0], "q_max": q_max},
        passed=not counterexamples,
        checked_count=checked,
        counterexamples=_trim(counterexamples),
        notes=f"primes checked: {qs}",
    )


def _lemma7_count(d: int, n: int, flags: np.ndarray) -> int:
    idx = np.arange(1, n + 1, dtype=np.int64) * d + 1
    return int(np.count_nonzero(flags[idx]))


def check_lemma7(d: int, n: int = 500, table: PrimeTable = None) -> VerificationReport:
    """At most 0.46*n + 7 of d+1, 2d+1, ..., nd+1 are prime (d > 7, gcd(d,105)=1)."""
    if d <= 7:
        raise ValueError("d must exceed 7")
    if math.gcd(d, 105) != 1:
        raise ValueError("d must be coprime to 105")
    if n < 1:
        raise ValueError("n must be >= 1")
    if table is None or table.limit < n * d + 1:
        table = sieve_primes(n * d + 1)
    count = _lemma7_count(d, n, table.flags)
    bound = 0.46 * n + 7
    ok = count <= bound
    return VerificationReport(
        claim_id="lemma7",
        parameters={"d": d, "n": n, "count": count, "bound": bound},
        passed=ok,
        checked_count=n,
        counterexamples=[] if ok else [{"d": d, "n": n, "count": count, "bound": bound}],
        notes="",
    )


def check_lemma7_sweep(d_max: int = 1000, n: int = 500, table: PrimeTable = None) -> VerificationReport:
    """Run the progression-count bound for every eligible d <= d_max."""
    if d_max <= 7:
        raise ValueError("d_max must exceed 7")
    if n < 1:
        raise ValueError("n must be >= 1")
    if table is None or table.limit < n * d_max + 1:
        table = sieve_primes(n * d_max + 1)
    ds = [d for d in range(8, d_max + 1) if math.gcd(d, 105) == 1]
    rng = random.Random(_SPOT_SEED)
    checked = 0
    worst = (float("-inf"), None)  # (count - bound, d)
    counterexamples = []
    for d in ds:
        count = _lemma7_count(d, n, table.flags)
        bound = 0.46 * n + 7
        checked += n
        if count > bound:
            counterexamples.append({"d": d, "n": n, "count": count, "bound": bound})
        if count - bound > worst[0]:
            worst = (count - bound, d)
    for _ in range(32):  # tie sieve flags to the direct primality test
        d = rng.choice(ds)
        i = rng.randrange(1, n + 1)
        checked += 1
        if bool(table.flags[i * d + 1]) != is_prime(i * d + 1):
            counterexamples.append({"d": d, "i": i, "spot_mismatch": True})
    return VerificationReport(
        claim_id="lemma7",
        parameters={"d_max": d_max, "n": n, "eligible_d": len(ds)},
        passed=not counterexamples,
        checked_count=checked,
        counterexamples=_trim(counterexamples),
        notes=f"slackest margin at d={worst[1]} (count - bound = {worst[0]:.2f})",
    )


_COPRIME_105 = tuple(r for r in range(105) if math.gcd(r, 105) == 1)


def check_lemma8_residues(k_max: int = 173) -> VerificationReport:
    """Among 2r+1, 4r+1, ..., 2kr+1 at most floor(k/2)+1 avoid factors 3, 5, 7.

    Checked for every k <= k_max and every residue r mod 105 coprime to 105;
    only the residue of r matters, so this covers all eligible integers r.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    coprime = np.zeros(105, dtype=bool)
    coprime[list(_COPRIME_105)] = True
    i = np.arange(1, k_max + 1, dtype=np.int64)
    bound = i // 2 + 1
    counterexamples = []
    equality_hits = 0
    for r in _COPRIME_105:
        counts = np.cumsum(coprime[(2 * r * i + 1) % 105])
        bad = np.nonzero(counts > bound)[0]
        for j in bad[:_MAX_STORED_COUNTEREXAMPLES].tolist():
            counterexamples.append({"r": r, "k": int(j + 1), "count": int(counts[j])})
        equality_hits += int(np.count_nonzero(counts == bound))
    return VerificationReport(
        claim_id="lemma8",
        parameters={"k_max": k_max, "residues": len(_COPRIME_105)},
        passed=not counterexamples,
        checked_count=k_max * len(_COPRIME_105),
        counterexamples=_trim(counterexamples),
        notes=f"bound attained with equality {equality_hits} times",
    )


def count_lemma8_direct(q: int, k: int) -> int:
    """Directly count i <= k with gcd(2*q*i + 1, 105) = 1 for a prime q > 7."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if q <= 7 or not is_prime(q):
        raise ValueError("q must be a prime greater than 7")
    return sum(1 for i in range(1, k + 1) if math.gcd(2 * q * i + 1, 105) == 1)


def construct_prop10_pair(a: int, k: int, table=None):
    """Build b = k * prod_{p<=a}(p-1) - a and verify divisibility at c = a + b.

    Returns (b, report). Degenerate b < 1 is a domain error; b < a is reported
    as skipped (the divisibility claim assumes a <= b).
    """
    if a < 1 or k < 1:
        raise ValueError("a and k must be >= 1")
    d = 1
    if a >= 2:
        for p in sieve_primes(a).primes.tolist():
            d *= p - 1
    b = k * d - a
    if b < 1:
        raise ValueError(f"degenerate construction: b = {b} < 1 for a={a}, k={k}")
    checked = 1  # the congruence b == -a (mod d) holds by construction
    params = {"a": a, "k": k, "modulus": d, "b": b}
    if b < a:
        report = VerificationReport(
            claim_id="prop10",
            parameters=params,
            passed=True,
            checked_count=checked,
            counterexamples=[],
            notes=f"skipped: construction gives b={b} < a={a}",
        )
        return b, report
    if table is None or table.n_max < a + b:
        table = build_table(a + b)
    quot = quotient_valuation(a, b, a + b, table)
    negatives = {q: e for q, e in quot.items() if e < 0}
    checked += 1
    least = solve_pair(a, b, table).c
    report = VerificationReport(
        claim_id="prop10",
        parameters=params,
        passed=not negatives,
        checked_count=checked,
        counterexamples=[] if not negatives else [{"a": a, "b": b, "deficit": negatives}],
        notes=f"divisible at c = a + b = {a + b}; least c = {least}",
    )
    return b, report


def _totient_direct(n: int) -> int:
    out = n
    for p in factorize(n):
        out = out // p * (p - 1)
    return out


def check_phi_identity(a: int, table=None) -> VerificationReport:
    """For m = phi(a!), the quotient phi(m!) / (phi(a!) * phi((m-1)!)) is exactly 1.

    Also pins the least admissible c for the pair (a, m-1) at exactly m.
    Supported for 4 <= a <= 8 (the table must reach m = phi(a!)).
    """
    if not 4 <= a <= 8:
        raise ValueError("a must satisfy 4 <= a <= 8")
    small = build_table(a)
    m = small.value(a)
    m_direct = _totient_direct(math.factorial(a))
    if table is None or table.n_max < m:
        table = build_table(m)
    quot = quotient_valuation(a, m - 1, m, table)
    least = solve_pair(a, m - 1, table).c
    ok = (m == m_direct) and (quot == {}) and (least == m)
    counterexamples = []
    if not ok:
        counterexamples.append({"a": a, "m": m, "quotient": quot, "least_c": least})
    return VerificationReport(
        claim_id="identity",
        parameters={"a": a, "m": m},
        passed=ok,
        checked_count=3,
        counterexamples=counterexamples,
        notes=f"phi({a}!) = {m}; least c for ({a}, {m - 1}) is {least}",
    )


def check_floor_identity(sample_max: int = 10**4) -> VerificationReport:
    """floor(a / 4q) equals floor(floor(a / 2q) / 2) for all a, prime q."""
    if sample_max < 1:
        raise ValueError("sample_max must be >= 1")
    a = np.arange(sample_max + 1, dtype=np.int64)
    qs = sieve_primes(100).primes.tolist()
    counterexamples = []
    for q in qs:
        lhs = a // (4 * q)
        rhs = (a // (2 * q)) // 2
        bad = np.nonzero(lhs != rhs)[0]
        for idx in bad[:_MAX_STORED_COUNTEREXAMPLES].tolist():
            counterexamples.append({"a": int(idx), "q": q})
    return VerificationReport(
        claim_id="floor",
        parameters={"sample_max": sample_max, "q_values": len(qs)},
        passed=not counterexamples,
        checked_count=(sample_max + 1) * len(qs),
        counterexamples=_trim(counterexamples),
        notes="",
    )
