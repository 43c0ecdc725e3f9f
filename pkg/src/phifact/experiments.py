"""Bulk pair scans: proportion tables, figure datasets, ceiling/floor scans,
and a deterministic CSV cache for solved pairs."""

import math
import multiprocessing
import os
from fractions import Fraction

import numpy as np

from .phi_factorial import (
    PairResult,
    PhiFactorialTable,
    TableExhausted,
    build_table,
    solve_pair,
    solve_range,
    table_size_for_pairs,
)
from .verifiers import VerificationReport, atomic_write_text

PAIRS_HEADER = ("a", "b", "sum", "c", "r_num", "r_den", "r_dec")
TABLE1_HEADER = ("N", "count_gt", "total", "proportion")
FIG2_HEADER = ("n", "c", "r_num", "r_den", "r_dec")
LOWER_HEADER = ("b", "min_gap", "argmin_a")

_RATIO_PLACES = 6
_PROPORTION_PLACES = 3
_REBUILD_ATTEMPTS = 3

_POOL_STATE = {}


def decimal_str(num: int, den: int, places: int) -> str:
    """Exact round-half-even decimal rendering of num/den to `places` digits."""
    if den <= 0:
        raise ValueError("denominator must be positive")
    if num < 0:
        raise ValueError("numerator must be non-negative")
    scale = 10**places
    q, rem = divmod(num * scale, den)
    double = rem * 2
    if double > den or (double == den and q % 2 == 1):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{whole}.{frac:0{places}d}" if places else str(whole)


def decimal_trunc_str(num: int, den: int, places: int) -> str:
    """Exact truncating decimal rendering of num/den to `places` digits."""
    if den <= 0:
        raise ValueError("denominator must be positive")
    if num < 0:
        raise ValueError("numerator must be non-negative")
    scale = 10**places
    whole, frac = divmod(num * scale // den, scale)
    return f"{whole}.{frac:0{places}d}" if places else str(whole)


def _csv_text(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(str(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(path: str, header, rows) -> None:
    """Write rows as UTF-8 CSV with LF endings, atomically."""
    atomic_write_text(path, _csv_text(header, rows))


def read_csv(path: str, header) -> list:
    """Read a CSV written by write_csv; strict header and field-count checks."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise ValueError(f"{path}: empty file")
    if tuple(lines[0].split(",")) != tuple(header):
        raise ValueError(f"{path}: line 1: expected header {','.join(header)!r}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != len(header):
            raise ValueError(f"{path}: line {i}: expected {len(header)} fields")
        rows.append(parts)
    return rows


def _grid_worker(bounds):
    table = _POOL_STATE["table"]
    n = _POOL_STATE["n"]
    lo, hi = bounds
    return [solve_range(a, a, n, table) for a in range(lo, hi)]


def _upper_triangle(n: int, table: PhiFactorialTable, jobs: int) -> np.ndarray:
    grid = np.zeros((n + 1, n + 1), dtype=np.int64)
    if jobs <= 1:
        for a in range(1, n + 1):
            grid[a, a:] = solve_range(a, a, n, table)
        return grid
    step = max(8, n // (4 * jobs) + 1)
    chunks = [(lo, min(lo + step, n + 1)) for lo in range(1, n + 1, step)]
    _POOL_STATE["table"] = table
    _POOL_STATE["n"] = n
    try:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            parts = pool.map(_grid_worker, chunks)
    finally:
        _POOL_STATE.clear()
    for (lo, hi), rows in zip(chunks, parts):
        for a, cs in zip(range(lo, hi), rows):
            grid[a, a:] = cs
    return grid


def solve_grid(n: int, table: PhiFactorialTable = None, jobs: int = 1) -> np.ndarray:
    """(n+1) x (n+1) array with entry [a, b] = least c, for 1 <= a, b <= n.

    Row/column 0 is zero padding. The table is rebuilt at twice the size if a
    pair overflows it.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if table is None or table.n_max < n:
        table = build_table(table_size_for_pairs(n))
    for _ in range(_REBUILD_ATTEMPTS):
        try:
            grid = _upper_triangle(n, table, jobs)
            return np.maximum(grid, grid.T)
        except TableExhausted:
            table = build_table(2 * table.n_max)
    raise TableExhausted(table.n_max, table.n_max + 1)


TABLE1_MODES = ("mirrored", "ordered", "unordered")


def table1_proportions(
    n_values, mode: str = "mirrored", table: PhiFactorialTable = None, jobs: int = 1
) -> list:
    """Per N: how often c(a, b) > a + b over the pairs with a, b <= N.

    Returns (N, count_gt, total, proportion) tuples with exact Fractions.
    Modes (c > a + b is symmetric, so all three derive from one triangle):
      mirrored  - each pair with a <= b counts along with its mirror image,
                  so the diagonal is counted twice; total is N^2.  This is
                  the convention of the historical dataset reproduced here.
      ordered   - all N^2 pairs counted once each.
      unordered - pairs with a <= b counted once; total is N(N+1)/2.
    """
    if mode not in TABLE1_MODES:
        raise ValueError(f"mode must be one of {TABLE1_MODES}")
    ns = sorted(set(int(x) for x in n_values))
    if not ns or ns[0] < 1:
        raise ValueError("n_values must be positive integers")
    top = ns[-1]
    grid = solve_grid(top, table=table, jobs=jobs)
    idx = np.arange(1, top + 1, dtype=np.int64)
    sums = idx[:, None] + idx[None, :]
    exceed = grid[1:, 1:] > sums
    cum = exceed.cumsum(axis=0).cumsum(axis=1)
    diag_cum = np.cumsum(np.diagonal(exceed))
    out = []
    for n in ns:
        ordered_count = int(cum[n - 1, n - 1])
        diag_count = int(diag_cum[n - 1])
        if mode == "mirrored":
            count, total = ordered_count + diag_count, n * n
        elif mode == "ordered":
            count, total = ordered_count, n * n
        else:
            count, total = (ordered_count + diag_count) // 2, n * (n + 1) // 2
        out.append((n, count, total, Fraction(count, total)))
    return out


def table1_rows(proportions, mode: str = "mirrored") -> list:
    """Render table1_proportions output as CSV rows.

    The mirrored dataset renders by truncation (its historical formatting);
    the other modes round half-even.
    """
    fmt = decimal_trunc_str if mode == "mirrored" else decimal_str
    return [
        (n, count, total, fmt(count, total, _PROPORTION_PLACES))
        for n, count, total, _ in proportions
    ]


def _pair_row(a: int, b: int, c: int) -> tuple:
    s = a + b
    g = math.gcd(c, s)
    return (a, b, s, c, c // g, s // g, decimal_str(c, s, _RATIO_PLACES))


def figure1_rows(n: int, table: PhiFactorialTable = None, jobs: int = 1) -> list:
    """All pairs 1 <= a, b <= n in lexicographic order as pairs-CSV rows."""
    grid = solve_grid(n, table=table, jobs=jobs)
    return [
        _pair_row(a, b, int(grid[a, b]))
        for a in range(1, n + 1)
        for b in range(1, n + 1)
    ]


def solve_diagonal(n_max: int, table: PhiFactorialTable = None) -> np.ndarray:
    """cs[n] = least c for the pair (n, n), for 1 <= n <= n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if table is None or table.n_max < n_max:
        table = build_table(table_size_for_pairs(n_max))
    cs = np.ones(n_max + 1, dtype=np.int64)
    cs[0] = 0
    cut = int(np.searchsorted(table.primes, n_max, side="right"))
    for q in table.primes[:cut].tolist():
        pq = table.prefix[q]
        t = 2 * pq[1: n_max + 1].astype(np.int64)
        if int(t.max()) > int(pq[-1]):
            raise TableExhausted(table.n_max, table.n_max + 1)
        np.maximum(cs[1:], np.searchsorted(pq, t, side="left"), out=cs[1:])
    return cs


def figure2_rows(n_max: int, table: PhiFactorialTable = None) -> list:
    """Diagonal ratio series: (n, c, r_num, r_den, r_dec) for n <= n_max."""
    cs = solve_diagonal(n_max, table=table)
    rows = []
    for n in range(1, n_max + 1):
        c = int(cs[n])
        g = math.gcd(c, 2 * n)
        rows.append((n, c, c // g, 2 * n // g, decimal_str(c, 2 * n, _RATIO_PLACES)))
    return rows


def scan_theorem2(
    n_min: int, n_max: int, table: PhiFactorialTable = None, jobs: int = 1
) -> VerificationReport:
    """Check c <= s + floor(s/8) (s = a + b) over n_min <= a <= b <= n_max.

    Parameters record the exact maximum ratio c/s overall and restricted to
    s >= 400; counterexamples list pairs that break the ceiling.
    """
    if not 1 <= n_min <= n_max:
        raise ValueError("need 1 <= n_min <= n_max")
    if table is None or table.n_max < table_size_for_pairs(n_max):
        table = build_table(table_size_for_pairs(n_max))
    counterexamples = []
    checked = 0
    best = (0, 1, None)       # (c, s, pair) maximizing c/s
    best_large = (0, 1, None)  # same, restricted to s >= 400

    def improve(record, cs, sums, bs, a, sel):
        # Exact sequential ratio maximization over candidate indices.
        cand = np.nonzero(cs[sel] * record[1] > record[0] * sums[sel])[0]
        for jj in cand.tolist():
            j = int(sel[jj])
            if int(cs[j]) * record[1] > record[0] * int(sums[j]):
                record = (int(cs[j]), int(sums[j]), (a, int(bs[j])))
        return record

    for a in range(n_min, n_max + 1):
        cs = solve_range(a, a, n_max, table)
        bs = np.arange(a, n_max + 1, dtype=np.int64)
        sums = a + bs
        checked += len(bs)
        over = np.nonzero(cs > sums + sums // 8)[0]
        for i in over.tolist():
            counterexamples.append({"a": a, "b": int(bs[i]), "c": int(cs[i]), "s": int(sums[i])})
        best = improve(best, cs, sums, bs, a, np.arange(len(bs)))
        large = np.nonzero(sums >= 400)[0]
        if len(large):
            best_large = improve(best_large, cs, sums, bs, a, large)

    def ratio_str(num, den, pair):
        if pair is None:
            return ""
        f = Fraction(num, den)
        return f"{f.numerator}/{f.denominator}@{pair[0]},{pair[1]}"
    return VerificationReport(
        claim_id="theorem2",
        parameters={
            "n_min": n_min,
            "n_max": n_max,
            "max_ratio": ratio_str(*best),
            "max_ratio_sum_ge_400": ratio_str(*best_large),
        },
        passed=not counterexamples,
        checked_count=checked,
        counterexamples=counterexamples[:20],
        notes=f"ceiling c <= s + s//8 held on {checked - len(counterexamples)} of {checked} pairs",
    )


def scan_lower_bound(n_min: int, n_max: int, table: PhiFactorialTable = None, jobs: int = 1) -> list:
    """Per b in [n_min, n_max]: minimum of c(a, b) - (a + b) over 1 <= a <= b."""
    if not 2 <= n_min <= n_max:
        raise ValueError("need 2 <= n_min <= n_max")
    grid = solve_grid(n_max, table=table, jobs=jobs)
    rows = []
    for b in range(n_min, n_max + 1):
        a_vals = np.arange(1, b + 1, dtype=np.int64)
        gaps = grid[1: b + 1, b] - (a_vals + b)
        k = int(np.argmin(gaps))
        rows.append((b, int(gaps[k]), int(a_vals[k])))
    return rows


def cache_store(path: str, results) -> None:
    """Persist PairResults to CSV (pairs schema), atomically."""
    rows = [_pair_row(r.a, r.b, r.c) for r in results]
    write_csv(path, PAIRS_HEADER, rows)


def _parse_pair_rows(path: str) -> list:
    parsed = []
    for i, parts in enumerate(read_csv(path, PAIRS_HEADER), start=2):
        try:
            a, b, s, c, num, den = (int(x) for x in parts[:6])
        except ValueError:
            raise ValueError(f"{path}: line {i}: non-integer field") from None
        dec = parts[6]
        if a < 1 or b < 1 or c < 1:
            raise ValueError(f"{path}: line {i}: non-positive entry")
        if s != a + b:
            raise ValueError(f"{path}: line {i}: sum mismatch")
        if Fraction(c, s) != Fraction(num, den):
            raise ValueError(f"{path}: line {i}: ratio fields disagree with c/(a+b)")
        if dec != decimal_str(c, s, _RATIO_PLACES):
            raise ValueError(f"{path}: line {i}: decimal rendering mismatch")
        parsed.append(PairResult(a=a, b=b, c=c, r=Fraction(c, s)))
    return parsed


def _minimality_report(path: str, results: list, indices, table: PhiFactorialTable = None) -> VerificationReport:
    counterexamples = []
    if results:
        top = max(max(r.a, r.b) for r in results)
        need = max(table_size_for_pairs(top), max(r.c for r in results))
        if table is None or table.n_max < need:
            table = build_table(need)
    for i in indices:
        r = results[i]
        truth = solve_pair(r.a, r.b, table).c
        if truth != r.c:
            counterexamples.append({"a": r.a, "b": r.b, "stored_c": r.c, "true_c": truth})
    return VerificationReport(
        claim_id="cache",
        parameters={"path": os.path.basename(path), "rows": len(results), "verified": len(list(indices))},
        passed=not counterexamples,
        checked_count=max(len(list(indices)), 1),
        counterexamples=counterexamples[:20],
        notes="",
    )


def cache_verify(path: str, strict: bool = False, table: PhiFactorialTable = None) -> VerificationReport:
    """Re-solve stored pairs and compare: all rows when strict, else a
    deterministic stride sample of at most 32 rows."""
    results = _parse_pair_rows(path)
    if strict or len(results) <= 32:
        indices = range(len(results))
    else:
        stride = max(1, len(results) // 32)
        indices = range(0, len(results), stride)
    return _minimality_report(path, results, list(indices), table=table)


def cache_load(path: str, verify: str = "spot", table: PhiFactorialTable = None) -> list:
    """Load PairResults from CSV; verify is one of off, spot, strict."""
    if verify not in ("off", "spot", "strict"):
        raise ValueError("verify must be one of: off, spot, strict")
    results = _parse_pair_rows(path)
    if verify != "off" and results:
        report = cache_verify(path, strict=(verify == "strict"), table=table)
        if not report.passed:
            bad = report.counterexamples[0]
            raise ValueError(f"{path}: stored c is not minimal: {bad}")
    return results
