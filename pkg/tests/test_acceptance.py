"""Acceptance gate: one test per published criterion, each built on values
that were first established by independent oracles and then frozen here."""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from phifact.dickson import check_theorem5, verify_witness_facts
from phifact.experiments import (
    scan_theorem2,
    table1_proportions,
    table1_rows,
)
from phifact.phi_factorial import (
    build_table,
    quotient_valuation,
    solve_pair,
    solve_pair_ascending,
    table_for_pairs,
)
from phifact.primes import sieve_primes
from phifact.valuations import kummer_carries, legendre_valuation, shifted_prime_product_valuation
from phifact.verifiers import (
    check_lemma2_ratio,
    check_lemma6,
    check_lemma7_sweep,
    check_lemma8_residues,
    check_phi_identity,
    construct_prop10_pair,
    count_lemma8_direct,
)

_SEED = 20260814


def _timed(budget_seconds):
    start = time.perf_counter()

    def done(label):
        elapsed = time.perf_counter() - start
        assert elapsed < budget_seconds, f"{label} took {elapsed:.1f}s"
        print(f"PASS {label} ({elapsed:.2f}s)")

    return done


def test_table1_n100():
    done = _timed(60)
    (row,) = table1_proportions([100])
    assert row == (100, 2498, 10000, Fraction(2498, 10000))
    assert abs(row[3] - Fraction(249, 1000)) <= Fraction(1, 1000)
    assert table1_rows([row]) == [(100, 2498, 10000, "0.249")]
    done("proportion at N=100 renders 0.249")


def test_table1_n200():
    done = _timed(300)
    (row,) = table1_proportions([200])
    assert row == (200, 25724, 40000, Fraction(25724, 40000))
    assert abs(row[3] - Fraction(643, 1000)) <= Fraction(1, 1000)
    assert table1_rows([row]) == [(200, 25724, 40000, "0.643")]
    done("proportion at N=200 renders 0.643")


def test_lemma8_residue_sieve():
    done = _timed(1)
    rep = check_lemma8_residues(173)
    assert rep.passed
    assert rep.checked_count == 173 * 48
    assert count_lemma8_direct(11, 4) == 3 == 4 // 2 + 1
    done("residue sieve bound holds for all k <= 173 x 48 residues")


def test_lemma9_witness_facts():
    done = _timed(1)
    rep = verify_witness_facts(131)
    assert rep.passed and rep.checked_count == 26
    assert 131 % 77 == 54 and 131 % 3 == 2 and 131 % 5 == 1
    done("q=131 witness facts all verified")


def test_theorem5_instance():
    done = _timed(120)
    table = table_for_pairs(1049)
    rep = check_theorem5(131, table=table)
    # regression constant, first established by the independent ascent oracle
    assert rep.c == 2358
    assert solve_pair_ascending(1049, 1049, table) == 2358
    assert 4 * rep.c >= 9 * rep.n - 9
    assert rep.ratio >= Fraction(9, 8) - Fraction(9, 8392)
    assert rep.ratio == Fraction(9, 8) - Fraction(9, 8392)  # met with equality
    assert rep.satisfied and rep.ceiling_ok
    assert rep.blocking_prime == 131
    done("diagonal bound at n=1049: c=2358 >= 9n/4 - 9/4 exactly")


def test_identity_exact():
    done = _timed(10)
    expected_m = {4: 8, 5: 32, 6: 192, 7: 1152}
    for a, m in expected_m.items():
        rep = check_phi_identity(a)
        assert rep.passed
        assert rep.parameters["m"] == m
        table = build_table(m)
        assert quotient_valuation(a, m - 1, m, table) == {}
    done("quotient is exactly 1 at (a, m-1; m) for a = 4..7, m = 8/32/192/1152")


def test_prop10_instances():
    done = _timed(1)
    table = build_table(64)
    for k, want_b in {2: 11, 3: 19, 4: 27}.items():
        b, rep = construct_prop10_pair(5, k, table=table)
        assert b == 8 * k - 5 == want_b
        assert rep.passed
        assert rep.parameters["modulus"] == 8
        quot = quotient_valuation(5, b, 5 + b, table)
        assert all(e >= 0 for e in quot.values())  # integral at c = a + b
        assert solve_pair(5, b, table).r <= 1
    done("constructed pairs (5, 8k-5) divide at c = a + b, hence r <= 1")


def _legendre_grid(n_max, p):
    n = np.arange(n_max + 1, dtype=np.int64)
    out = np.zeros(n_max + 1, dtype=np.int64)
    pk = p
    while pk <= n_max:
        out += n // pk
        pk *= p
    return out


def _digit_sum_grid(n_max, p):
    n = np.arange(n_max + 1, dtype=np.int64)
    s = np.zeros(n_max + 1, dtype=np.int64)
    while n.any():
        s += n % p
        n //= p
    return s


def _valuation_grid(n_max, q):
    f = np.zeros(n_max + 1, dtype=np.int64)
    qk = q
    while qk <= n_max:
        f[qk::qk] += 1
        qk *= q
    return f


def test_oracle_equivalence():
    done = _timed(60)
    # 1. Incremental table equals the closed form, all n <= 2000, every prime q.
    n_max = 2000
    table = build_table(n_max)
    primes = sieve_primes(n_max).primes.tolist()
    prime_flags = np.zeros(n_max + 1, dtype=bool)
    prime_flags[np.array(primes)] = True
    n = np.arange(n_max + 1, dtype=np.int64)
    for q in primes:
        legendre = _legendre_grid(n_max, q)
        indicator = (n >= q).astype(np.int64)
        f = _valuation_grid(n_max, q)
        g = np.zeros(n_max + 1, dtype=np.int64)
        g[1:][prime_flags[1:]] = f[np.nonzero(prime_flags)[0] - 1]
        closed_form = legendre - indicator + np.cumsum(g)
        assert np.array_equal(table.prefix[q].astype(np.int64), closed_form), f"q={q}"
    print("PASS oracle: incremental table == closed form for n <= 2000, all q")

    # 2. Binary-search solver equals the linear ascent oracle on random pairs.
    rng = random.Random(_SEED)
    pair_table = table_for_pairs(200)
    for _ in range(1000):
        a, b = rng.randint(1, 200), rng.randint(1, 200)
        assert solve_pair(a, b, pair_table).c == solve_pair_ascending(a, b, pair_table)
    print("PASS oracle: solver == ascent on 1000 random pairs, a, b <= 200")

    # 3. Legendre floor-sum equals the digit form for n <= 10^5, p <= 100.
    big = 10**5
    for p in sieve_primes(100).primes.tolist():
        floor_sum = _legendre_grid(big, p)
        digit_form = (np.arange(big + 1, dtype=np.int64) - _digit_sum_grid(big, p)) // (p - 1)
        assert np.array_equal(floor_sum, digit_form), f"p={p}"
        for _ in range(40):  # tie the production scalar to both grids
            k = rng.randrange(big + 1)
            assert legendre_valuation(k, p) == floor_sum[k]
    print("PASS oracle: Legendre floor-sum == digit form for n <= 1e5, p <= 100")

    # 4. Kummer carries equal the Legendre difference for a, b <= 2000.
    for p in (2, 3, 5, 7, 11):
        s = _digit_sum_grid(2 * n_max, p)
        le = _legendre_grid(2 * n_max, p)
        carries = (s[: n_max + 1, None] + s[None, : n_max + 1] - s[n[:, None] + n[None, :]]) // (
            p - 1
        )
        diff = le[n[:, None] + n[None, :]] - le[: n_max + 1, None] - le[None, : n_max + 1]
        assert np.array_equal(carries, diff), f"p={p}"
    for _ in range(200):
        a, b = rng.randrange(2001), rng.randrange(2001)
        p = rng.choice(primes)
        assert kummer_carries(a, b, p) == (
            legendre_valuation(a + b, p) - legendre_valuation(a, p) - legendre_valuation(b, p)
        )
    print("PASS oracle: Kummer carries == Legendre difference for a, b <= 2000")
    done("all four oracle equivalences, exact")


def test_lemma6_and_lemma7_bounds():
    done = _timed(300)
    rep6 = check_lemma6(a_max=10**5, q_max=50)
    assert rep6.passed
    assert rep6.checked_count == 11 * (10**5 - 1) + 11 * 8
    rep7 = check_lemma7_sweep(d_max=1000, n=500)
    assert rep7.passed
    assert rep7.parameters["eligible_d"] == 454
    assert rep7.checked_count == 454 * 500 + 32
    done("valuation bound (a <= 1e5, 7 < q <= 50) and progression bound (d <= 1000)")


def test_theorem2_scan():
    done = _timed(300)
    rep = scan_theorem2(100, 300)
    assert rep.checked_count == 20301
    # hard gate: the max ratio at a + b >= 400 must stay at or below 9/8
    num_den, pair = rep.parameters["max_ratio_sum_ge_400"].split("@")
    num, den = map(int, num_den.split("/"))
    assert Fraction(num, den) <= Fraction(9, 8)
    # regression pins for the observed extremes (not consequences of the claim)
    assert Fraction(num, den) == Fraction(481, 446) and pair == "223,223"
    assert rep.parameters["max_ratio"] == "481/446@223,223"
    assert rep.passed and rep.counterexamples == []
    done("no ceiling breach on 20301 pairs; max ratio 481/446 at (223, 223)")


def test_lemma2_band():
    done = _timed(120)
    table = sieve_primes(10**6)
    rep = check_lemma2_ratio(q=2, x=10**6, table=table)
    assert rep.passed
    assert rep.parameters["exact"] == 156772
    ratio = rep.parameters["exact"] / rep.parameters["main_term"]
    assert 0.9 <= ratio <= 1.3
    # exact double-counting identity at a desk-sized cutoff: summing the
    # exponent of q prime-by-prime equals counting progression hits power-by-power
    x = 10**5
    for q in (2, 3):
        direct = 0
        for p in sieve_primes(x).primes.tolist():
            if p >= x:
                break
            m = p - 1
            while m % q == 0:
                direct += 1
                m //= q
        assert direct == shifted_prime_product_valuation(x, q, table)
    done("exponent-of-2 ratio at x = 1e6 inside [0.9, 1.3]; identity exact at 1e5")
