from fractions import Fraction
from itertools import combinations

import pytest

from hankelforge.algebra import RatFunc, var
from hankelforge.closed_forms import (
    LEMMAS,
    IdentityId,
    kratt_lemma_sides,
    kratt_symbols,
    lemma_sides,
    q_schroder_det,
    rhs_classical,
    rhs_classical_amended,
    rhs_classical_limit,
    rhs_kratt_classical,
    rhs_q_catalan_det,
    rhs_q_general,
    rhs_q_kratt,
    rhs_q_schroder,
    rhs_s3_at_1,
)
from hankelforge.linalg import ExactMatrix, det_exact, generalized_hankel, hankel_matrix, q_schroder_matrix
from hankelforge.qseries import moment_mu

q = var("q")
mu = moment_mu


class TestQMoment:
    def test_small(self):
        assert rhs_q_catalan_det(1) == 1
        assert rhs_q_catalan_det(2) == det_exact(ExactMatrix([[mu(0), mu(1)], [mu(1), mu(2)]]))
        assert rhs_q_catalan_det(3) == det_exact(hankel_matrix("q-moment", 3))

    def test_general(self):
        for n in (1, 2, 3):
            assert rhs_q_general(n, 0) == rhs_q_catalan_det(n)
        assert rhs_q_general(1, 2) == mu(2)
        assert rhs_q_general(2, 1) == det_exact(ExactMatrix([[mu(1), mu(2)], [mu(2), mu(3)]]))

    def test_kratt(self):
        assert rhs_q_kratt(1, [3]) == mu(3)
        assert rhs_q_kratt(2, [0, 2]) == det_exact(ExactMatrix([[mu(0), mu(1)], [mu(2), mu(3)]]))
        assert rhs_q_kratt(3, [2, 3, 4]) == rhs_q_general(3, 2)

    def test_kratt_length(self):
        with pytest.raises(ValueError):
            rhs_q_kratt(2, [0])

    def test_bad_n(self):
        with pytest.raises(ValueError):
            rhs_q_catalan_det(0)

    def test_kratt_classical(self):
        for n in range(1, 5):
            for ks in combinations(range(n + 3), n):
                assert rhs_kratt_classical(n, ks) == det_exact(generalized_hankel("catalan", ks))


class TestClassical:
    def test_examples(self):
        assert rhs_classical("catalan-t", 3, 2) == 4
        assert rhs_classical(IdentityId.AIGNER_M1, 3) == -1
        assert rhs_classical("schroder-01", 3, 0) == 8
        assert rhs_classical("delannoy-2", 2) == 204

    def test_unknown_tag(self):
        with pytest.raises(ValueError):
            rhs_classical("kratt-lemma", 2)
        with pytest.raises(ValueError):
            rhs_classical("nope", 2)

    @pytest.mark.parametrize("kind,tag", [("catalan", "catalan-t"), ("b", "b-t"), ("d", "d-t")])
    def test_amended_and_limit(self, kind, tag):
        for n in range(1, 6):
            for t in range(4):
                det = det_exact(hankel_matrix(kind, n, t))
                assert rhs_classical_amended(tag, n, t) == det
                assert rhs_classical_limit(tag, n, t) == det

    def test_printed_b_and_d_disagree(self):
        det = det_exact(hankel_matrix("b", 2, 1))
        assert rhs_classical("b-t", 2, 1) != det
        assert rhs_classical("d-t", 2, 0) != det_exact(hankel_matrix("d", 2, 0))

    def test_d_at_zero_shift(self):
        assert rhs_classical_amended("d-t", 4, 0) == 8 == det_exact(hankel_matrix("d", 4, 0))

    def test_non_integral_value_kept(self):
        assert isinstance(rhs_classical("b-t", 1, 3), (int, Fraction))


class TestQSchroder:
    def test_examples(self):
        assert rhs_q_schroder(1, 0) == 1
        assert rhs_q_schroder(2, 0) == q + 1
        expect = RatFunc((q + 1) * ((q + 1) * (q**3 + 1) - 1), q)
        assert rhs_q_schroder(1, 2) == expect == q_schroder_det(1, 2)

    def test_bad_shift(self):
        with pytest.raises(ValueError):
            rhs_q_schroder(2, 3)

    def test_s3_at_1(self):
        assert rhs_s3_at_1(1) == 22
        for n in (2, 3):
            assert rhs_s3_at_1(n) == det_exact(q_schroder_matrix(n, 3).evaluate({"q": 1}))

    @pytest.mark.parametrize("name", sorted(LEMMAS))
    def test_lemmas(self, name):
        lo = LEMMAS[name][1]
        for n in range(lo, lo + 2):
            for lhs, rhs in lemma_sides(name, n):
                assert lhs == rhs

    def test_lemma_range(self):
        with pytest.raises(ValueError):
            lemma_sides("tilde-condensation", 2)
        with pytest.raises(ValueError):
            lemma_sides("nope", 3)

    def test_empty_det(self):
        assert q_schroder_det(0, 1) == 1


class TestKrattLemma:
    def test_n1(self):
        X, A, B = kratt_symbols(1)
        assert kratt_lemma_sides(X, A, B) == (1, 1)

    def test_n2(self):
        X, A, B = kratt_symbols(2)
        lhs, rhs = kratt_lemma_sides(X, A, B)
        assert lhs == rhs == RatFunc((X[0] - X[1]) * (B[0] - A[0]))

    def test_n3(self):
        lhs, rhs = kratt_lemma_sides(*kratt_symbols(3))
        assert lhs == rhs

    def test_length_mismatch(self):
        X, A, B = kratt_symbols(3)
        with pytest.raises(ValueError):
            kratt_lemma_sides(X, A[:1], B)
