from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from hopfkit.cyclotomic import CycNumber
from hopfkit.linalg import (InconsistentSystemError, Mat, SingularMatrixError, block_diag_perm, kron,
                            mat_solve, to_fraction_dense)

small = st.integers(min_value=-3, max_value=3)


def rational_matrix(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: rational_matrix(r, c))))
def test_rank_kernel_image_against_sympy(rows):
    A = Mat.from_dense(rows, order=1)
    S = sympy.Matrix(rows)
    assert A.rank() == S.rank()
    K = A.kernel()
    assert K.cols == A.cols - S.rank()
    assert (A @ K).is_zero()
    assert A.image().cols == S.rank()


@given(rational_matrix(4, 4))
def test_inverse_against_sympy(rows):
    A = Mat.from_dense(rows, order=1)
    S = sympy.Matrix(rows)
    if S.det() == 0:
        with pytest.raises(SingularMatrixError):
            A.inverse()
    else:
        inv = to_fraction_dense(A.inverse())
        want = S.inv()
        assert all(inv[i][j] == Fraction(int(want[i, j].p), int(want[i, j].q))
                   for i in range(4) for j in range(4))


def test_seeded_rank_five_by_seven():
    import random
    rng = random.Random(7)
    rows = [[rng.randint(-4, 4) for _ in range(7)] for _ in range(5)]
    A = Mat.from_dense(rows, order=1)
    assert A.rank() == sympy.Matrix(rows).rank() == 5
    assert A.kernel().cols == 2


def test_cyclotomic_inverse():
    z = CycNumber.zeta(3)
    A = Mat.from_dense([[1, z], [z, 1]], order=3)
    assert (A @ A.inverse()).is_identity()


def test_kron_convention():
    A = Mat.from_dense([[1, 2], [3, 4]], order=1)
    B = Mat.from_dense([[0, 1], [1, 0]], order=1)
    K = kron(A, B)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                for l in range(2):
                    assert K.entry(i * 2 + k, j * 2 + l) == A.entry(i, j) * B.entry(k, l)


def test_swap_permutation():
    P = block_diag_perm(2, 3)
    assert (P @ block_diag_perm(3, 2)).is_identity()


def test_solve_modes():
    A = Mat.from_dense([[1, 1], [0, 1]], order=1)
    b = Mat.from_dense([[3], [1]], order=1)
    x = mat_solve(A, "solve", b)
    assert A @ x == b
    assert mat_solve(A, "rank") == 2
    Z = Mat.from_dense([[1, 1], [1, 1]], order=1)
    with pytest.raises(InconsistentSystemError):
        Z.solve(Mat.from_dense([[1], [0]], order=1))
    with pytest.raises(ValueError):
        mat_solve(A, "pivot")


def test_json_and_hash():
    A = Mat.from_dense([[1, CycNumber.zeta(4)], [0, Fraction(1, 2)]], order=4)
    B = Mat.from_json(A.to_json())
    assert A == B and hash(A) == hash(B)
    assert A.lift(8) == A


def test_canonical_image_basis():
    A = Mat.from_dense([[2, 4], [1, 2]], order=1)
    img = A.image()
    assert img.cols == 1
    assert img.col(0) == {0: 1, 1: Fraction(1, 2)}
