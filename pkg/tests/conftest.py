"""Shared fixtures and frozen oracle data for the test suite.

The matrix texts below were frozen by hand from the worked examples and are
deliberately written as literal strings: the tests compare implementation
output against them byte for byte rather than re-deriving them.
"""
from __future__ import annotations

import random

import pytest

from trivalent import GenConfig, builtin, random_trivalent

# Face-vertex incidence matrices of the three worked examples and the

# two-vertex theta map, in the "ROWS COLS" text format.
CUBE_MATRIX_TEXT = "6 8\n11001100\n01100110\n00110011\n10011001\n00001111\n11110000\n"
PRISM_MATRIX_TEXT = "5 6\n110010\n011011\n001101\n100111\n111100\n"
K4_MATRIX_TEXT = "4 4\n1110\n1101\n0111\n1011\n"
THETA_MATRIX_TEXT = "3 2\n11\n11\n11\n"

# The unique nonzero left-nullspace vector of the prism matrix.
PRISM_NULLSPACE_TEXT = "01011"

# A nonzero vector in the cube matrix's left nullspace (rows 5 XOR 6).
CUBE_NULLSPACE_MEMBER_TEXT = "111100"

# Proper face 3-coloring of the cube found by transport from vertex 0.
CUBE_Z3_COLORS = (1, 2, 1, 2, 3, 3)


@pytest.fixture(scope="session")
def cube():
    return builtin("g1")


@pytest.fixture(scope="session")
def prism():
    return builtin("g2")


@pytest.fixture(scope="session")
def k4():
    return builtin("g3")


@pytest.fixture(scope="session")
def theta():
    return builtin("theta")


@pytest.fixture(scope="session")
def hopf():
    return builtin("hopf")


@pytest.fixture(scope="session")
def trefoil():
    return builtin("trefoil")


@pytest.fixture(scope="session")
def figure8():
    return builtin("figure8")


def make_corpus(count: int, seed: int, min_target: int = 4, max_target: int = 30):
    """Deterministic list of random trivalent maps with mixed sizes."""
    rng = random.Random(seed)
    maps = []
    for _ in range(count):
        target = 2 * rng.randrange(min_target // 2, max_target // 2 + 1)
        maps.append(random_trivalent(GenConfig(target=target, seed=rng.getrandbits(63))))
    return maps


@pytest.fixture(scope="session")
def corpus():
    """Forty seeded maps shared by the per-module property tests."""
    return make_corpus(40, seed=2024)
