"""
Shared fixtures: the worked curves and matrices, and seeded random generators.
"""

import random
from typing import Callable, List

import pytest

from monomial_stci.algebra.matrices import MonomialMatrix
from monomial_stci.algebra.monomials import VariableSet
from monomial_stci.curves.params import derive_params
from monomial_stci.data.cache_manager import get_cache_manager
from monomial_stci.determinantal.radical import is_simple

ABCD = VariableSet.of(["a", "b", "c", "d"])
X = VariableSet.of(["x0", "x1", "x2", "x3"])


@pytest.fixture(autouse=True)
def fresh_cache():
    get_cache_manager().clear_all_cache()
    yield


@pytest.fixture
def quartic():
    """(s^4, s^3 t, s t^3, t^4)."""
    return derive_params(4, 3, 1)


@pytest.fixture
def twisted_cubic():
    return derive_params(3, 2, 1)


@pytest.fixture
def large_curve():
    """delta = 70 with starred exponents up to 55."""
    return derive_params(70, 66, 15)


@pytest.fixture
def abcd() -> VariableSet:
    return ABCD


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


def random_curve(rng: random.Random, max_delta: int = 500):
    delta = rng.randint(2, max_delta)
    eps1 = rng.randint(1, delta - 1)
    eps2 = rng.randint(1, eps1)
    return delta, eps1, eps2


@pytest.fixture
def random_curves(rng) -> Callable[[int], List[tuple]]:
    return lambda count, max_delta=500: [random_curve(rng, max_delta) for _ in range(count)]


def _random_entry(rng: random.Random, max_exp: int) -> List[int]:
    exponents = [0, 0, 0, 0]
    for index in rng.sample(range(4), rng.choice((1, 1, 2))):
        exponents[index] = rng.randint(1, max_exp)
    return exponents


def random_simple_matrices(rng: random.Random, count: int, max_exp: int = 4) -> List[MonomialMatrix]:
    """Simple 2x3 matrices over a, b, c, d with one or two variables per entry."""
    found = []
    while len(found) < count:
        rows = [[_random_entry(rng, max_exp) for _ in range(3)] for _ in range(2)]
        A = MonomialMatrix.from_exponents(ABCD, rows)
        if is_simple(A):
            found.append(A)
    return found


@pytest.fixture
def simple_matrices(rng) -> Callable[[int], List[MonomialMatrix]]:
    return lambda count, max_exp=4: random_simple_matrices(rng, count, max_exp)
