import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

from phifact import build_table, sieve_primes, table_for_pairs


@pytest.fixture(scope="session")
def primes_1e6():
    return sieve_primes(10**6)


@pytest.fixture(scope="session")
def primes_1e4():
    return sieve_primes(10**4)


@pytest.fixture(scope="session")
def table_600():
    return build_table(600)


@pytest.fixture(scope="session")
def table_pairs_200():
    return table_for_pairs(200)
