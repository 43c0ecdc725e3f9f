#!/usr/bin/env python3
"""Witness primes that force the diagonal ratio near its ceiling.

A witness is a prime q > 17 with 2q+1, 6q+1, 8q+1 prime while 10q+1 through
18q+1 (even multipliers) are all composite. At n = 8q + 1 this pattern
starves the prime q of multiples below 9n/4, pushing c(n, n) up to the
ceiling: r(n, n) = 9/8 - 9/(8n + 8) exactly.
"""

from fractions import Fraction

from phifact import check_theorem5, search_witnesses, verify_witness_facts, witness_facts

print(__doc__)

limit = 2000
witnesses = search_witnesses(limit)
print(f"Witnesses up to {limit}: {[w.q for w in witnesses]}")
fast = search_witnesses(limit, fast_lane=True)
print(f"Fast lane (q = 54 mod 77) up to {limit}: {[w.q for w in fast]}")
print("The fast lane is sufficient but not exhaustive: the witness 1811,")
print(f"which the full scan finds, has 1811 mod 77 = {1811 % 77}, so the")
print("fast lane skips right past it.")

print()
q = witnesses[0].q
w = witness_facts(q)
print(f"The first witness is q = {q}, so n = 8q + 1 = {w.n}.")
print(f"  prime multipliers: {w.prime_multipliers} "
      f"-> {[m * q + 1 for m in w.prime_multipliers]} all prime")
print("  composite multipliers factor as:")
for m, fac in sorted(w.composite_factors.items()):
    text = " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(fac.items()))
    print(f"    {m}q+1 = {m * q + 1} = {text}")

report = verify_witness_facts(q)
print(f"  all {report.checked_count} defining facts verified: {report.passed}")

print()
print("Now solve the diagonal pair at n = 8q + 1 and compare with the bound:")
t5 = check_theorem5(q)
print(f"  c({t5.n}, {t5.n}) = {t5.c}")
print(f"  lower bound 9n/4 - 9/4 = {t5.bound} -> satisfied: {t5.satisfied}")
print(f"  ratio r(n, n) = {t5.ratio} = {float(t5.ratio):.6f}")
print(f"  exactly 9/8 - 9/(8n + 8): {t5.ratio == Fraction(9, 8) - Fraction(9, 8 * t5.n + 8)}")
print(f"  ceiling c <= 2n + floor(2n / 8) intact: {t5.ceiling_ok}")
print(f"  the prime blocking c - 1 is q itself: {t5.blocking_prime} == {q}")
print(f"  note: {t5.notes}")
