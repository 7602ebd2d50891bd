import sys
from pathlib import Path

import pytest

from weightdescent.primes import sieve

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def table_100k():
    return sieve(100000)


@pytest.fixture(scope="session")
def table_2k():
    return sieve(2000)
