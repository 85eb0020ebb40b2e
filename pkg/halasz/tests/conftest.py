import pytest
from gaussian import session_sieve, session_table


@pytest.fixture(scope="session")
def sieve():
    return session_sieve(50_000)


@pytest.fixture(scope="session")
def table():
    return session_table(20_000)
