from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hankelforge.algebra import RatFunc, var
from hankelforge.closed_forms import rhs_q_catalan_det
from hankelforge.linalg import (
    ExactMatrix,
    LUError,
    det_cofactor,
    det_exact,
    desnanot_jacobi_check,
    generalized_hankel,
    hankel_matrix,
    lu_generic,
    motzkin_lu,
    motzkin_lu_entry,
    q_schroder_matrix,
    qcatalan_lu,
    qcatalan_lu_entry,
)
from hankelforge.qseries import moment_mu
from hankelforge.sequences import q_schroder

from properties import check_desnanot_jacobi, int_matrices, polys, symbolic_matrices

q, a, b = var("q"), var("a"), var("b")


class TestConstructors:
    def test_hankel(self):
        assert hankel_matrix("catalan", 2) == ExactMatrix([[1, 1], [1, 2]])
        assert hankel_matrix("motzkin", 3, 1) == ExactMatrix([[1, 2, 4], [2, 4, 9], [4, 9, 21]])
        assert hankel_matrix("q-moment", 1, 3) == ExactMatrix([[moment_mu(3)]])

    def test_generalized(self):
        assert generalized_hankel("catalan", [0, 1]) == ExactMatrix([[1, 1], [1, 2]])
        assert generalized_hankel("catalan", [0, 2]) == ExactMatrix([[1, 1], [2, 5]])
        mu = moment_mu
        assert generalized_hankel("q-moment", [1, 3]) == ExactMatrix([[mu(1), mu(2)], [mu(3), mu(4)]])

    def test_q_schroder_plain(self):
        M = q_schroder_matrix(2, 0)
        assert M[0, 0] == 1
        assert M[1, 0] == q_schroder(1)
        assert M[0, 1] == q**2 * q_schroder(1)

    def test_bad_sizes(self):
        with pytest.raises(ValueError):
            hankel_matrix("catalan", 0)
        with pytest.raises(ValueError):
            generalized_hankel("catalan", [0, 1], 3)


class TestDeterminants:
    def test_small(self):
        assert det_exact(ExactMatrix([[1, 1], [1, 2]])) == 1
        assert det_exact(ExactMatrix([])) == 1

    def test_aigner(self):
        assert det_exact(hankel_matrix("motzkin", 5)) == 1

    def test_q_moment_2x2(self):
        expect = moment_mu(2) - moment_mu(1) ** 2
        assert det_exact(hankel_matrix("q-moment", 2)) == expect == rhs_q_catalan_det(2)

    def test_singular(self):
        assert det_exact(ExactMatrix([[1, 2], [2, 4]])).is_zero

    def test_big_integers(self):
        M = ExactMatrix([[10**30, 1], [1, 10**30]])
        assert det_exact(M) == 10**60 - 1

    def test_rational_entries(self):
        M = ExactMatrix([[Fraction(1, 2), 1], [RatFunc(1, 1 - q), q]])
        assert det_exact(M) == det_cofactor(M)

    def test_desnanot_jacobi_examples(self):
        assert desnanot_jacobi_check(ExactMatrix([[1, 2], [3, 4]]))
        assert desnanot_jacobi_check(q_schroder_matrix(4, 1).evaluate({"q": 1}))


class TestLU:
    def test_identity(self):
        I = ExactMatrix.identity(3)
        pair = lu_generic(I)
        assert pair.L == I and pair.U == I

    def test_two_by_two(self):
        pair = lu_generic(ExactMatrix([[1, 1], [1, 2]]))
        assert pair.L == ExactMatrix([[1, 0], [1, 1]])
        assert pair.U == ExactMatrix([[1, 1], [0, 1]])

    def test_zero_minor_named(self):
        with pytest.raises(LUError) as err:
            lu_generic(ExactMatrix([[1, 1], [1, 1]]))
        assert err.value.index == 1

    def test_qcatalan_entries(self):
        assert qcatalan_lu_entry("L", 2, 2) == 1
        assert qcatalan_lu_entry("U", 2, 1).is_zero
        M = hankel_matrix("q-moment", 3)
        generic = lu_generic(M)
        for i in range(3):
            assert generic.U[i, i] == qcatalan_lu_entry("U", i, i)

    def test_qcatalan_product(self):
        assert qcatalan_lu(4).product() == hankel_matrix("q-moment", 4)

    def test_motzkin_entries(self):
        assert motzkin_lu_entry("L", 2, 2) == 1
        assert motzkin_lu_entry("L", 1, 0) == 1
        assert motzkin_lu_entry("L", 3, 1) == 5

    def test_motzkin_product(self):
        assert motzkin_lu(9).product() == hankel_matrix("motzkin", 9)

    def test_diagonal_product_is_det(self):
        M = hankel_matrix("schroder", 4)
        assert lu_generic(M).diagonal_product() == det_exact(M)


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_desnanot_jacobi_integer(m):
    check_desnanot_jacobi(m)


@settings(max_examples=40, deadline=None)
@given(symbolic_matrices())
def test_desnanot_jacobi_symbolic(m):
    check_desnanot_jacobi(m)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(polys(2), min_size=n * n, max_size=n * n)))
def test_det_matches_cofactor(cells):
    n = int(len(cells) ** 0.5)
    M = ExactMatrix([[cells[i * n + j] for j in range(n)] for i in range(n)])
    assert det_exact(M) == det_cofactor(M)


@settings(max_examples=40, deadline=None)
@given(int_matrices(2, 5))
def test_lu_reconstructs(m):
    try:
        pair = lu_generic(m)
    except LUError:
        return
    assert pair.product() == m
    assert pair.diagonal_product() == det_exact(m)
