"""Unit and property tests for the GF(2) linear-algebra layer."""
from __future__ import annotations

import random

import pytest

from trivalent.gf2 import (
    BitMatrix,
    BitVector,
    BruteForceSizeError,
    RowSpace,
    left_nullspace_basis,
    matrix_from_text,
    matrix_to_text,
    rank,
    solve_left,
    span_size_bruteforce,
)
from conftest import (
    CUBE_MATRIX_TEXT,
    CUBE_NULLSPACE_MEMBER_TEXT,
    K4_MATRIX_TEXT,
    PRISM_MATRIX_TEXT,
    PRISM_NULLSPACE_TEXT,
    THETA_MATRIX_TEXT,
)


def _random_matrix(rng: random.Random, rows: int, cols: int) -> BitMatrix:
    return BitMatrix(rows, cols, tuple(rng.getrandbits(cols) for _ in range(rows)))


# --- BitVector basics ---------------------------------------------------------------


def test_bitvector_string_round_trip():
    v = BitVector.from_string("10110")
    assert v.to_string() == "10110"
    assert v.indices() == (0, 2, 3)
    assert v.weight() == 3
    assert len(v) == 5
    assert list(v) == [1, 0, 1, 1, 0]


def test_bitvector_xor_and_truthiness():
    a = BitVector.from_string("1100")
    b = BitVector.from_string("0110")
    assert (a ^ b).to_string() == "1010"
    assert (a ^ a).to_string() == "0000"
    assert not (a ^ a)
    assert a


def test_bitvector_length_mismatch_rejected():
    with pytest.raises(ValueError):
        BitVector.from_string("110") ^ BitVector.from_string("11")


def test_bitvector_from_indices_and_bit():
    v = BitVector.from_indices(6, [1, 4])
    assert v.to_string() == "010010"
    assert v.bit(1) == 1 and v.bit(0) == 0


# --- frozen example matrices --------------------------------------------------------


def test_example_matrix_ranks():
    assert rank(matrix_from_text(CUBE_MATRIX_TEXT)) == 4
    assert rank(matrix_from_text(PRISM_MATRIX_TEXT)) == 4
    assert rank(matrix_from_text(K4_MATRIX_TEXT)) == 4
    assert rank(matrix_from_text(THETA_MATRIX_TEXT)) == 1


def test_prism_left_nullspace_is_unique_vector():
    matrix = matrix_from_text(PRISM_MATRIX_TEXT)
    basis = left_nullspace_basis(matrix)
    assert len(basis) == 1
    assert basis[0].to_string() == PRISM_NULLSPACE_TEXT
    assert not matrix.mul_left(basis[0])


def test_cube_left_nullspace_contains_frozen_member():
    matrix = matrix_from_text(CUBE_MATRIX_TEXT)
    basis = left_nullspace_basis(matrix)
    assert len(basis) == 2
    member = BitVector.from_string(CUBE_NULLSPACE_MEMBER_TEXT)
    assert not matrix.mul_left(member)
    space = RowSpace(BitMatrix.from_bitvectors(basis))
    assert space.contains(member)


def test_theta_row_space_is_two_states():
    matrix = matrix_from_text(THETA_MATRIX_TEXT)
    assert rank(matrix) == 1
    assert span_size_bruteforce(matrix) == 2
    space = RowSpace(matrix)
    assert space.contains(BitVector.from_string("11"))
    assert not space.contains(BitVector.from_string("10"))


def test_matrix_text_round_trip():
    for text in (CUBE_MATRIX_TEXT, PRISM_MATRIX_TEXT, K4_MATRIX_TEXT, THETA_MATRIX_TEXT):
        assert matrix_to_text(matrix_from_text(text)) == text


def test_matrix_from_text_rejects_bad_input():
    with pytest.raises(ValueError):
        matrix_from_text("2 3\n110\n")  # row count mismatch
    with pytest.raises(ValueError):
        matrix_from_text("1 3\n12x\n")  # non-binary digits
    with pytest.raises(ValueError):
        matrix_from_text("1 3\n1101\n")  # row length mismatch


# --- structured constructors --------------------------------------------------------


def test_identity_and_zero_matrices():
    eye = BitMatrix.identity(5)
    assert rank(eye) == 5
    assert RowSpace(eye).nullity == 0
    zero = BitMatrix.zeros(3, 4)
    assert rank(zero) == 0
    assert RowSpace(zero).nullity == 3
    assert span_size_bruteforce(zero) == 1


def test_from_strings_matches_from_text():
    m1 = BitMatrix.from_strings(["110", "011"])
    m2 = matrix_from_text("2 3\n110\n011\n")
    assert m1 == m2


# --- solving and spans --------------------------------------------------------------


def test_solve_left_on_full_rank_square():
    matrix = matrix_from_text(K4_MATRIX_TEXT)
    for value in range(16):
        target = BitVector(4, value)
        x = solve_left(matrix, target)
        assert x is not None
        assert matrix.mul_left(x) == target


def test_solve_left_unsolvable():
    matrix = matrix_from_text(THETA_MATRIX_TEXT)
    assert solve_left(matrix, BitVector.from_string("10")) is None
    x = solve_left(matrix, BitVector.from_string("11"))
    assert x is not None and matrix.mul_left(x) == BitVector.from_string("11")


def test_solve_left_zero_target():
    matrix = matrix_from_text(PRISM_MATRIX_TEXT)
    x = solve_left(matrix, BitVector.zeros(6))
    assert x is not None
    assert not matrix.mul_left(x)


def test_span_size_bruteforce_on_examples():
    assert span_size_bruteforce(matrix_from_text(CUBE_MATRIX_TEXT)) == 16
    assert span_size_bruteforce(matrix_from_text(PRISM_MATRIX_TEXT)) == 16
    assert span_size_bruteforce(matrix_from_text(K4_MATRIX_TEXT)) == 16


def test_span_size_bruteforce_row_limit():
    big = BitMatrix.zeros(21, 2)
    with pytest.raises(BruteForceSizeError):
        span_size_bruteforce(big)


# --- randomized property tests -----------------------------------------------------


def test_rank_properties_random():
    rng = random.Random(7)
    for _ in range(120):
        rows, cols = rng.randrange(1, 10), rng.randrange(1, 10)
        matrix = _random_matrix(rng, rows, cols)
        r = rank(matrix)
        assert r <= min(rows, cols)
        assert rank(matrix.transpose()) == r
        assert span_size_bruteforce(matrix) == 1 << r


def test_nullspace_basis_properties_random():
    rng = random.Random(11)
    for _ in range(80):
        rows, cols = rng.randrange(1, 9), rng.randrange(1, 9)
        matrix = _random_matrix(rng, rows, cols)
        basis = left_nullspace_basis(matrix)
        assert len(basis) == rows - rank(matrix)
        for v in basis:
            assert not matrix.mul_left(v)
        if basis:
            assert rank(BitMatrix.from_bitvectors(basis)) == len(basis)


def test_solve_left_agrees_with_bruteforce():
    rng = random.Random(13)
    for _ in range(80):
        rows, cols = rng.randrange(1, 8), rng.randrange(1, 8)
        matrix = _random_matrix(rng, rows, cols)
        target = BitVector(cols, rng.getrandbits(cols))
        x = solve_left(matrix, target)
        brute = any(
            matrix.mul_left(BitVector(rows, value)) == target
            for value in range(1 << rows)
        )
        assert (x is not None) == brute
        if x is not None:
            assert matrix.mul_left(x) == target


def test_rowspace_reduce_is_coset_canonical():
    rng = random.Random(17)
    for _ in range(40):
        rows, cols = rng.randrange(1, 8), rng.randrange(2, 9)
        space = RowSpace(_random_matrix(rng, rows, cols))
        v = BitVector(cols, rng.getrandbits(cols))
        rep = space.reduce(v)
        assert space.contains(v ^ rep)
        # adding any spanned vector does not change the representative
        for row in space.echelon_rows():
            assert space.reduce(v ^ row) == rep


def test_rowspace_rank_nullity_and_pivots():
    space = RowSpace(matrix_from_text(PRISM_MATRIX_TEXT))
    assert space.rank == 4
    assert space.nullity == 1
    assert len(space.pivot_columns()) == 4
    assert len(space.echelon_rows()) == 4
