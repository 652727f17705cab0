from functools import lru_cache

import pytest

from spherezone.arrangement import build_sphere, quotient_projective
from spherezone.generate import icosahedral_example, random_arrangement


@lru_cache(maxsize=256)
def arrangements(n, seed, bound=50):
    """(sphere, projective) pair for a seeded random line set; cached so
    test modules can share instances."""
    line_set = random_arrangement(n, bound, seed)
    sphere = build_sphere(line_set)
    return sphere, quotient_projective(sphere)


@pytest.fixture(scope="session")
def icosahedral():
    line_set = icosahedral_example()
    sphere = build_sphere(line_set)
    return sphere, quotient_projective(sphere)
