"""Shared fixtures: the three algebra families and engines with warm triangle caches."""

import random
from fractions import Fraction

import pytest

from nakayama_ar.config import Settings
from nakayama_ar.core.algebra import Interval, NakayamaAlgebra, a4gamma, longrel, radsquare
from nakayama_ar.core.ar import AREngine, create_engine
from nakayama_ar.core.complexes import ChainMap, Complex, shift
from nakayama_ar.core.homalg import proj_resolution
from nakayama_ar.core.homotopy import hom_spaces
from nakayama_ar.utils import configure_logging


@pytest.fixture(scope="session", autouse=True)
def quiet_logging() -> None:
    """Keep engine debug events out of the test output."""
    configure_logging("warning")


@pytest.fixture(scope="session")
def settings() -> Settings:
    """Default settings, independent of the environment."""
    return Settings(_env_file=None)


@pytest.fixture(scope="session")
def a4() -> NakayamaAlgebra:
    """kA_4 modulo the path of length three."""
    return a4gamma()


@pytest.fixture(scope="session")
def zan3() -> NakayamaAlgebra:
    return radsquare(3)


@pytest.fixture(scope="session")
def zdn5() -> NakayamaAlgebra:
    return longrel(5)


@pytest.fixture(scope="session")
def engine(a4: NakayamaAlgebra, settings: Settings) -> AREngine:
    """Engine over a4gamma, shared so triangles are built once."""
    return create_engine(a4, settings)


@pytest.fixture(scope="session")
def stalk():
    """Factory for M[k] as a complex of projectives."""

    def make(algebra: NakayamaAlgebra, lo: int, hi: int, k: int = 0) -> Complex:
        return shift(proj_resolution(algebra, Interval(lo, hi)), k)

    return make


@pytest.fixture(scope="session")
def random_map():
    """Factory for a random chain map between two shifted module complexes."""

    def make(algebra: NakayamaAlgebra, rng: random.Random) -> ChainMap:
        modules = algebra.indecomposables()
        x = shift(proj_resolution(algebra, rng.choice(modules)), rng.randint(-1, 1))
        y = shift(proj_resolution(algebra, rng.choice(modules)), rng.randint(-1, 1))
        space = hom_spaces(x, y)
        vector = [Fraction(0)] * len(space.positions)
        for cycle in space.cycles:
            c = rng.randint(-3, 3)
            vector = [a + c * b for a, b in zip(vector, cycle)]
        return space.to_map(vector)

    return make
