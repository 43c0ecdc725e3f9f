#!/usr/bin/env python3
"""Run the finite mechanical checks behind the asymptotic analysis.

Each check returns a structured report (claim id, parameters, pass/fail,
how many cases were checked, counterexamples if any). The CLI exposes the
same checks under `phifact verify <claim>`; here they run with smaller
parameters so the whole script finishes in seconds.
"""

from phifact import (
    check_floor_identity,
    check_lemma2_ratio,
    check_lemma6,
    check_lemma7,
    check_lemma7_sweep,
    check_lemma8_residues,
    check_phi_identity,
    construct_prop10_pair,
    count_lemma8_direct,
)

print(__doc__)


def show(report):
    status = "PASS" if report.passed else "FAIL"
    line = f"{status} {report.claim_id:<8} checked={report.checked_count:<8}"
    if report.notes:
        line += f" {report.notes}"
    print(line)
    if report.counterexamples:
        print(f"      first counterexample: {report.counterexamples[0]}")


print("How big is the exponent of 2 in the product of (p - 1) over primes")
print("p < x?  Compare the exact count against its x / log x main term:")
show(check_lemma2_ratio(q=2, x=10**6))
show(check_lemma2_ratio(q=3, x=10**6))

print()
print("Upper bound on that exponent for 7 < q <= 50, every a up to 20000:")
show(check_lemma6(a_max=20000, q_max=50))

print()
print("Primes in the progression d+1, 2d+1, ..., nd+1 stay under 0.46n + 7:")
show(check_lemma7(22, n=500))
show(check_lemma7_sweep(d_max=200, n=500))

print()
print("Residue sieve: among 2r+1, ..., 2kr+1 at most floor(k/2)+1 escape the")
print("small primes 3, 5, 7 (all residues r coprime to 105, all k <= 173):")
show(check_lemma8_residues(173))
print(f"      direct count at q=11, k=4: {count_lemma8_direct(11, 4)} "
      "(meets floor(4/2)+1 = 3 with equality)")

print()
print("Exact identity: with m = phi(a!), the quotient")
print("phi(m!) / (phi(a!) * phi((m-1)!)) is exactly 1, so c(a, m-1) = m:")
for a in (4, 5, 6, 7):
    show(check_phi_identity(a))

print()
print("Constructed pairs with r <= 1: choose b = k * prod(p-1) - a, then")
print("phi(a!) * phi(b!) already divides phi((a+b)!):")
for k in (2, 3, 4):
    b, report = construct_prop10_pair(5, k)
    show(report)

print()
print("A small exact floor identity used repeatedly by the bounds above:")
show(check_floor_identity(10**4))
