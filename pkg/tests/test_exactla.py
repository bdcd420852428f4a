"""Fraction-free linear algebra over the rationals."""

import random
from fractions import Fraction

import pytest

from penciljk.exactla import (
    Mat,
    det,
    kernel_basis,
    pfaffian,
    rank,
    row_space_basis,
    solve_unique,
)

from helpers import SEED, random_invertible


def test_matrix_shapes_and_blocks():
    a = Mat([[1, 2, 3], [4, 5, 6]])
    assert a.shape == (2, 3)
    assert a.transpose().shape == (3, 2)
    assert Mat.hstack([a, a]).shape == (2, 6)
    assert Mat.vstack([a, a]).shape == (4, 3)
    d = Mat.block_diag([Mat.identity(2), Mat([[7]])])
    assert d.shape == (3, 3)
    assert d.entry(2, 2) == 7
    assert d.entry(0, 2) == 0


def test_submatrix_and_entry():
    a = Mat([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    s = a.submatrix([0, 2], [1, 2])
    assert s == Mat([[2, 3], [8, 9]])


def test_det_small_cases():
    assert det(Mat([[3]])) == 3
    assert det(Mat([[1, 2], [3, 4]])) == -2
    assert det(Mat([[2, 0, 1], [0, 1, 0], [1, 0, 1]])) == 1
    assert det(Mat.identity(4)) == 1


def test_det_multiplicative():
    rng = random.Random(SEED)
    for _ in range(20):
        a = random_invertible(rng, 4)
        b = random_invertible(rng, 4)
        assert det(a * b) == det(a) * det(b)


def test_det_with_fractions():
    a = Mat([[Fraction(1, 2), 1], [1, Fraction(1, 3)]])
    assert det(a) == Fraction(1, 6) - 1


def test_rank_examples():
    assert rank(Mat.zeros(3, 5)) == 0
    assert rank(Mat.identity(4)) == 4
    assert rank(Mat([[1, 2], [2, 4], [3, 6]])) == 1
    assert rank(Mat([[1, 2, 3], [4, 5, 6]])) == 2


def test_kernel_basis_annihilates():
    rng = random.Random(SEED + 1)
    for _ in range(20):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = Mat([[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)])
        ker = kernel_basis(a)
        assert len(ker) == cols - rank(a)
        for v in ker:
            assert all(x == 0 for x in a.apply(v))
        if ker:
            assert rank(Mat.from_cols(ker, cols)) == len(ker)


def test_row_space_basis_spans():
    a = Mat([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    basis = row_space_basis(a.rows, 3)
    assert len(basis) == 2
    stacked = Mat(list(basis) + [list(r) for r in a.rows], n=3)
    assert rank(stacked) == 2


def test_solve_unique_roundtrip():
    rng = random.Random(SEED + 2)
    for _ in range(10):
        a = random_invertible(rng, 4)
        x = [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)]
        b = a.apply(x)
        assert list(solve_unique(a, b)) == x


def test_solve_unique_rejects_singular():
    a = Mat([[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        solve_unique(a, [1, 3])


def test_pfaffian_squares_to_determinant():
    rng = random.Random(SEED + 3)
    for size in (2, 4, 6):
        for _ in range(8):
            raw = [[rng.randint(-4, 4) for _ in range(size)] for _ in range(size)]
            a = Mat(
                [
                    [raw[i][j] if i < j else (-raw[j][i] if i > j else 0) for j in range(size)]
                    for i in range(size)
                ]
            )
            assert a.is_skew()
            assert pfaffian(a) ** 2 == det(a)


def test_pfaffian_known_value():
    a = Mat([[0, 5], [-5, 0]])
    assert pfaffian(a) == 5
    with pytest.raises(ValueError):
        pfaffian(Mat.identity(2))
    with pytest.raises(ValueError):
        pfaffian(Mat.zeros(3, 3))
