"""Exact arithmetic of phi(n!): for a pair (a, b), the least c such that
phi(a!) * phi(b!) divides phi(c!), the ratio c / (a + b), and mechanical
verification of the finite claims made about both."""

from .dickson import (
    DicksonWitness,
    Theorem5Report,
    check_theorem5,
    is_dickson_witness,
    search_witnesses,
    verify_witness_facts,
    witness_facts,
)
from .experiments import (
    FIG2_HEADER,
    LOWER_HEADER,
    PAIRS_HEADER,
    TABLE1_HEADER,
    cache_load,
    cache_store,
    cache_verify,
    decimal_str,
    decimal_trunc_str,
    figure1_rows,
    figure2_rows,
    read_csv,
    scan_lower_bound,
    scan_theorem2,
    solve_diagonal,
    solve_grid,
    table1_proportions,
    table1_rows,
    write_csv,
)
from .phi_factorial import (
    PairResult,
    PhiFactorialTable,
    TableExhausted,
    build_table,
    pair_ratio,
    quotient_valuation,
    solve_pair,
    solve_pair_ascending,
    solve_range,
    table_for_pairs,
    table_size_for_pairs,
)
from .primes import PrimeTable, count_primes_in_ap, factorize, is_prime, sieve_primes
from .valuations import (
    digit_sum,
    dominates,
    format_vec,
    kummer_carries,
    legendre_valuation,
    shifted_prime_product_valuation,
    vec_add,
    vec_sub,
    vec_value,
)
from .verifiers import (
    VerificationReport,
    check_floor_identity,
    check_lemma2_ratio,
    check_lemma6,
    check_lemma7,
    check_lemma7_sweep,
    check_lemma8_residues,
    check_phi_identity,
    construct_prop10_pair,
    count_lemma8_direct,
    write_reports,
)

__version__ = "0.1.0"

__all__ = [
    "DicksonWitness",
    "FIG2_HEADER",
    "LOWER_HEADER",
    "PAIRS_HEADER",
    "PairResult",
    "PhiFactorialTable",
    "PrimeTable",
    "TABLE1_HEADER",
    "TableExhausted",
    "Theorem5Report",
    "VerificationReport",
    "build_table",
    "cache_load",
    "cache_store",
    "cache_verify",
    "check_floor_identity",
    "check_lemma2_ratio",
    "check_lemma6",
    "check_lemma7",
    "check_lemma7_sweep",
    "check_lemma8_residues",
    "check_phi_identity",
    "check_theorem5",
    "construct_prop10_pair",
    "count_lemma8_direct",
    "count_primes_in_ap",
    "decimal_str",
    "decimal_trunc_str",
    "digit_sum",
    "dominates",
    "factorize",
    "figure1_rows",
    "figure2_rows",
    "format_vec",
    "is_dickson_witness",
    "is_prime",
    "kummer_carries",
    "legendre_valuation",
    "pair_ratio",
    "quotient_valuation",
    "read_csv",
    "scan_lower_bound",
    "scan_theorem2",
    "search_witnesses",
    "shifted_prime_product_valuation",
    "sieve_primes",
    "solve_diagonal",
    "solve_grid",
    "solve_pair",
    "solve_pair_ascending",
    "solve_range",
    "table1_proportions",
    "table1_rows",
    "table_for_pairs",
    "table_size_for_pairs",
    "vec_add",
    "vec_sub",
    "vec_value",
    "verify_witness_facts",
    "witness_facts",
    "write_csv",
    "write_reports",
]
