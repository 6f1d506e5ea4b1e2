from functools import lru_cache

import pytest

from satsemi.oracle import brute_force_sat
from satsemi.semigroup import NumericalSemigroup


@pytest.fixture(scope="session")
def corpus():
    """Memoized brute-force family per Frobenius number."""

    @lru_cache(maxsize=None)
    def get(frobenius):
        return tuple(brute_force_sat(frobenius))

    return get


@pytest.fixture(scope="session")
def du():
    """Shorthand: the semigroup with the given Frobenius number and small elements."""

    def build(frobenius, *small):
        return NumericalSemigroup.from_small_elements(frobenius, small)

    return build
