import pytest

from companion_exponents import counting


@pytest.fixture(scope="session")
def census_cache():
    """Compute each census once per test session."""
    cache: dict[int, counting.CensusRecord] = {}

    def get(n: int) -> counting.CensusRecord:
        if n not in cache:
            cache[n] = counting.census(n)
        return cache[n]

    return get
