#!/usr/bin/env python3
"""Walk through the core solver: exponent vectors, the divisibility test,
and the least admissible c for a handful of pairs.

The object of study: for positive a and b, the least c such that
phi(a!) * phi(b!) divides phi(c!), and the ratio r = c / (a + b).
"""

from phifact import (
    TableExhausted,
    build_table,
    format_vec,
    quotient_valuation,
    solve_pair,
    solve_pair_ascending,
    table_for_pairs,
)

print(__doc__)

# phi(n!) grows fast; everything is handled through exponent vectors.
table = build_table(40)
for n in (3, 5, 8, 10):
    vec = table.exponent_vec(n)
    print(f"phi({n}!) = {table.value(n)} = {format_vec(vec)}")

print()
print("Solving some pairs (the table sizes itself to fit the answers):")
pairs = [(1, 2), (2, 3), (4, 7), (10, 10), (100, 100)]
table = table_for_pairs(100)
for a, b in pairs:
    res = solve_pair(a, b, table)
    print(
        f"  least c for ({a}, {b}) is {res.c}; "
        f"r = {res.r.numerator}/{res.r.denominator} = {float(res.r):.6f}"
    )

print()
a, b = 4, 7
res = solve_pair(a, b, table)
print(f"Why c = {res.c} for ({a}, {b}): the quotient's signed exponent vector")
print(f"  at c = {res.c}:     {quotient_valuation(a, b, res.c, table) or 'all exponents >= 0'}")
print(f"  at c = {res.c - 1}: {quotient_valuation(a, b, res.c - 1, table)}  <- a negative entry")
print("A negative exponent means the divisibility fails at that prime, so")
print(f"c = {res.c} is genuinely minimal.")

print()
print("An independent slow oracle (linear ascent) agrees:")
for a, b in pairs:
    assert solve_pair(a, b, table).c == solve_pair_ascending(a, b, table)
print(f"  checked {len(pairs)} pairs: binary search == linear ascent")

print()
print("If the table is too small, the solver reports the overflow instead of")
print("guessing:")
tiny = build_table(8)
try:
    solve_pair(8, 8, tiny)
except TableExhausted as exc:
    print(f"  TableExhausted: {exc}")
    print("  (the answer is at least the reported lower bound; rebuild bigger)")
