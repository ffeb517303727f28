import functools

import pytest

from loopsmith import (
    chein,
    closure_from_permutations,
    compute_H,
    enumerate_automorphisms,
    enumerate_half_automorphisms,
    preset,
)

# every group here doubles to a loop of order <= 24
CORPUS = [
    "trivial", "cyclic(2)", "cyclic(3)", "cyclic(4)", "klein", "s3", "cyclic(6)",
    "dihedral(4)", "q8", "cyclic(8)", "dihedral(5)", "c4_semidirect_c3", "dihedral(6)",
]
NONABELIAN = ["s3", "dihedral(4)", "q8", "dihedral(5)", "c4_semidirect_c3", "dihedral(6)"]


@functools.lru_cache(maxsize=None)
def group(name):
    if name == "a4":
        return closure_from_permutations([(1, 2, 0, 3), (1, 0, 3, 2)])
    return preset(name)


@functools.lru_cache(maxsize=None)
def embedding(name):
    return chein(group(name))


@functools.lru_cache(maxsize=None)
def auts(name):
    return enumerate_automorphisms(embedding(name).loop)


@functools.lru_cache(maxsize=None)
def halves(name):
    return enumerate_half_automorphisms(embedding(name).loop)


@functools.lru_cache(maxsize=None)
def h_group(name):
    return compute_H(embedding(name))


@pytest.fixture(scope="session")
def q8():
    return group("q8")


@pytest.fixture(scope="session")
def c4c3():
    return group("c4_semidirect_c3")


@pytest.fixture(scope="session")
def s3():
    return group("s3")


@pytest.fixture(scope="session")
def mq8():
    return embedding("q8")
