"""Shared fixtures: big sieves and census arrays are built once per session."""

import numpy as np
import pytest

from dirichlet_census import arith, census
from dirichlet_census.lfun import PrecisionContext

N7 = 10 ** 7
N5 = 10 ** 5


@pytest.fixture(scope="session")
def spf7():
    return arith.spf_sieve(N7)


@pytest.fixture(scope="session")
def spf5(spf7):
    return spf7[: N5 + 1]


@pytest.fixture(scope="session")
def values7(spf7):
    """Cached (ell, kind) -> value array over [0, 10^7]."""
    cache: dict[tuple[int, str], np.ndarray] = {}

    def get(ell: int, kind: str) -> np.ndarray:
        if (ell, kind) not in cache:
            cache[ell, kind] = census.multiplicative_values(ell, N7, kind, spf7)
        return cache[ell, kind]

    return get


@pytest.fixture(scope="session")
def ctx25():
    return PrecisionContext(25)


@pytest.fixture(scope="session")
def ctx15():
    return PrecisionContext(15)
