import json
import math
import os

import numpy as np
import pytest

from phifact.primes import is_prime, sieve_primes
from phifact.verifiers import (
    VerificationReport,
    atomic_write_text,
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


def assert_invariant(report):
    assert report.passed == (not report.counterexamples)
    assert report.checked_count > 0


def test_lemma2_exact_and_band(primes_1e6):
    rep = check_lemma2_ratio(q=2, x=10**6, table=primes_1e6)
    assert_invariant(rep)
    assert rep.passed
    assert rep.parameters["exact"] == 156772
    ratio = rep.parameters["exact"] / rep.parameters["main_term"]
    assert 0.9 <= ratio <= 1.3
    rep3 = check_lemma2_ratio(q=3, x=10**6, table=primes_1e6)
    assert rep3.passed and rep3.parameters["exact"] == 58793


def test_lemma2_small_x_informational(primes_1e6):
    # ratio is out of band at x=100 for q=3, but small x is report-only
    rep = check_lemma2_ratio(q=3, x=100, table=primes_1e6)
    assert rep.passed
    ratio = rep.parameters["exact"] / rep.parameters["main_term"]
    assert ratio < 0.9
    assert "informational" in rep.notes


def test_lemma2_erroneous_inputs(primes_1e6):
    with pytest.raises(ValueError):
        check_lemma2_ratio(q=4, x=1000, table=primes_1e6)
    with pytest.raises(ValueError):
        check_lemma2_ratio(q=2, x=50, table=primes_1e6)


def test_lemma6_quick_pass():
    rep = check_lemma6(a_max=2000, q_max=50)
    assert_invariant(rep)
    assert rep.passed
    qs = [11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert rep.checked_count == len(qs) * (2000 - 1) + len(qs) * 8
    assert rep.parameters["q_min"] == 11


def test_lemma6_rejects_small_q_range():
    with pytest.raises(ValueError):
        check_lemma6(a_max=100, q_max=10)
    with pytest.raises(ValueError):
        check_lemma6(a_max=1, q_max=50)


def test_lemma7_single():
    rep = check_lemma7(22, n=100)
    assert_invariant(rep)
    assert rep.passed
    assert rep.parameters["count"] == 30
    assert rep.parameters["bound"] == 0.46 * 100 + 7


def test_lemma7_domain_errors():
    for d in (7, 15, 66):  # too small / shares 5 / shares 3
        with pytest.raises(ValueError):
            check_lemma7(d, n=10)
    with pytest.raises(ValueError):
        check_lemma7(11, n=0)


def test_lemma7_sweep():
    rep = check_lemma7_sweep(d_max=200, n=100)
    assert_invariant(rep)
    assert rep.passed
    assert "d=26" in rep.notes  # slackest margin, pinned
    assert rep.parameters["eligible_d"] == len(
        [d for d in range(8, 201) if math.gcd(d, 105) == 1]
    )


def test_lemma8_full():
    rep = check_lemma8_residues(173)
    assert_invariant(rep)
    assert rep.passed
    assert rep.checked_count == 173 * 48
    assert "equality 95 times" in rep.notes


def test_lemma8_direct_counts():
    assert count_lemma8_direct(11, 4) == 3  # attains floor(4/2) + 1
    assert count_lemma8_direct(11, 1) == 1
    assert count_lemma8_direct(13, 4) == 2
    with pytest.raises(ValueError):
        count_lemma8_direct(7, 4)
    with pytest.raises(ValueError):
        count_lemma8_direct(9, 4)
    with pytest.raises(ValueError):
        count_lemma8_direct(11, 0)


def test_lemma8_direct_depends_only_on_residue():
    # 431 = 11 + 4*105 is prime, so counts must match those for q=11
    assert is_prime(431) and 431 % 105 == 11 % 105
    for k in range(1, 81):
        assert count_lemma8_direct(11, k) == count_lemma8_direct(431, k)


def test_lemma8_bound_always_holds_for_primes():
    for q in (11, 13, 101, 9973):
        for k in (1, 2, 3, 10, 60):
            assert count_lemma8_direct(q, k) <= k // 2 + 1


def test_prop10_construction():
    expected = {2: 11, 3: 19, 4: 27}
    for k, want_b in expected.items():
        b, rep = construct_prop10_pair(5, k)
        assert b == want_b
        assert_invariant(rep)
        assert rep.passed
        assert "divisible at c = a + b" in rep.notes
    b, rep = construct_prop10_pair(1, 5)
    assert b == 4 and rep.passed


def test_prop10_degenerate_and_skip():
    with pytest.raises(ValueError):
        construct_prop10_pair(1, 1)  # b = 0
    with pytest.raises(ValueError):
        construct_prop10_pair(0, 2)
    b, rep = construct_prop10_pair(4, 3)  # b = 2 < a = 4
    assert b == 2
    assert rep.passed and "skipped" in rep.notes


def test_phi_identity_pinned_moduli():
    wanted = {4: 8, 5: 32, 6: 192, 7: 1152}
    for a, m in wanted.items():
        rep = check_phi_identity(a)
        assert_invariant(rep)
        assert rep.passed
        assert rep.parameters["m"] == m
        assert f"least c for ({a}, {m - 1}) is {m}" in rep.notes


def test_phi_identity_domain():
    with pytest.raises(ValueError):
        check_phi_identity(3)
    with pytest.raises(ValueError):
        check_phi_identity(9)


def test_floor_identity():
    rep = check_floor_identity(2000)
    assert_invariant(rep)
    assert rep.passed
    assert rep.checked_count == 2001 * len(sieve_primes(100).primes)
    with pytest.raises(ValueError):
        check_floor_identity(0)


def test_report_serialization_roundtrip(tmp_path):
    rep = VerificationReport(
        claim_id="demo",
        parameters={"x": np.int64(5), "arr": np.array([1, 2])},
        passed=True,
        checked_count=3,
        counterexamples=[],
        notes="n",
    )
    obj = json.loads(rep.to_json())
    assert obj["parameters"] == {"x": 5, "arr": [1, 2]}
    path = tmp_path / "reports.jsonl"
    write_reports(str(path), [rep, rep])
    lines = path.read_text().splitlines()
    assert len(lines) == 2
    assert json.loads(lines[0]) == json.loads(lines[1]) == obj
    # atomic write left no temp files behind
    assert os.listdir(tmp_path) == ["reports.jsonl"]


def test_atomic_write_replaces(tmp_path):
    path = tmp_path / "out.txt"
    atomic_write_text(str(path), "one\n")
    atomic_write_text(str(path), "two\n")
    assert path.read_text() == "two\n"
    assert os.listdir(tmp_path) == ["out.txt"]
