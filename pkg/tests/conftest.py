import numpy as np
import pytest

from rkit.derivation import derive, ramanujan_primes
from rkit.sequences import build_prime_set


@pytest.fixture(scope="session")
def ps100k():
    return build_prime_set(100_000)


@pytest.fixture(scope="session")
def lv1_400k():
    """Level-1 sequence certified to 200k; enough for all additive tests."""
    return ramanujan_primes(400_000)


@pytest.fixture(scope="session")
def ram(lv1_400k):
    return lv1_400k.to_counter()


@pytest.fixture(scope="session")
def lv2_400k(lv1_400k):
    return derive(lv1_400k.to_counter(), None, level=2)


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260809)
