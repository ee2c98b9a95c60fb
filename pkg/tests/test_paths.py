import pytest

from hankelforge.algebra import RatFunc, var
from hankelforge.linalg import ExactMatrix, det_exact
from hankelforge.paths import (
    GenericWeights,
    GuardExceeded,
    OmegaWeights,
    PathFamily,
    QCatalanWeights,
    StepType,
    UnitWeights,
    closed_gf_dyck,
    closed_gf_motzkin,
    enumerate_paths,
    gf_paths_dp,
    lgv_check,
    omega_schroder,
    qcatalan_lambda,
    viennot_rhs,
    viennot_rhs_amended,
    weight_qcatalan,
)
from hankelforge.qseries import moment_mu
from hankelforge.sequences import q_schroder, seq_value

q, a, b = var("q"), var("a"), var("b")
A = [var(f"a_{i}") for i in range(8)]
B = [var(f"b_{i}") for i in range(8)]


class TestEnumeration:
    def test_small_dyck(self):
        paths = enumerate_paths("dyck", (0, 0), (2, 0))
        assert [str(p) for p in paths] == ["UD"]
        assert len(enumerate_paths("dyck", (0, 0), (4, 0))) == 2

    def test_counts_match_sequences(self):
        for n in range(6):
            assert len(enumerate_paths("dyck", (0, 0), (2 * n, 0))) == seq_value("catalan", n)
            assert len(enumerate_paths("motzkin", (0, 0), (n, 0))) == seq_value("motzkin", n)
            assert len(enumerate_paths("schroder", (0, 0), (2 * n, 0))) == seq_value("schroder", n)

    def test_empty_and_unreachable(self):
        assert len(enumerate_paths("dyck", (0, 0), (0, 0))) == 1
        assert enumerate_paths("dyck", (0, 0), (0, 2)) == []

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            enumerate_paths("dyck", (0, 0), (30, 0))
        assert len(enumerate_paths("dyck", (0, 0), (26, 0), force=True)) == seq_value("catalan", 13)


class TestWeights:
    def test_qcatalan(self):
        assert weight_qcatalan(StepType.RISE, 5) == 1
        assert weight_qcatalan(StepType.FALL, 1) == RatFunc(1 - a * q, 1 - a * b * q**2)
        lam2 = RatFunc(a * q * (1 - q) * (1 - b * q), (1 - a * b * q**2) * (1 - a * b * q**3))
        assert weight_qcatalan(StepType.FALL, 2) == lam2
        assert qcatalan_lambda(0) == 0

    def test_qcatalan_rejects_level(self):
        with pytest.raises(ValueError):
            weight_qcatalan(StepType.LEVEL, 0)

    def test_generic_bound(self):
        with pytest.raises(ValueError):
            GenericWeights(1).weight(StepType.RISE, 2)


class TestGeneratingFunctions:
    def test_trivial(self):
        assert gf_paths_dp("dyck", 0, 0, QCatalanWeights()) == 1
        assert gf_paths_dp("dyck", 0, 2, QCatalanWeights()) == 0

    def test_worked_example(self):
        expect = RatFunc((1 - a * q) * (1 - a * q**2), (1 - a * b * q**2) * (1 - a * b * q**3))
        assert gf_paths_dp("dyck", 4, 0, QCatalanWeights()) == expect == moment_mu(2)

    @pytest.mark.parametrize("m", range(9))
    def test_dyck_closed_form(self, m):
        for n in range(m + 1):
            assert gf_paths_dp("dyck", m, n, QCatalanWeights()) == closed_gf_dyck(m, n)

    def test_unit_weights_count(self):
        assert gf_paths_dp("schroder", 6, 0, UnitWeights()) == 22

    def test_motzkin_small(self):
        rep = closed_gf_motzkin(0, 0)
        assert rep.dp == 1
        rep = closed_gf_motzkin(1, 0)
        assert rep.dp == qcatalan_lambda(0) + qcatalan_lambda(1)

    def test_motzkin_observed_law(self):
        for m in range(4):
            for n in range(m + 1):
                assert closed_gf_motzkin(m, n).binom_n2_matches

    def test_motzkin_range(self):
        with pytest.raises(ValueError):
            closed_gf_motzkin(1, 2)


class TestOmega:
    def test_n1(self):
        by_word = {str(p): omega_schroder(p) for p in enumerate_paths("schroder", (0, 0), (2, 0))}
        assert by_word == {"UD": 0, "H": 1}

    @pytest.mark.parametrize("n", range(6))
    def test_matches_recurrence(self, n):
        total = sum(q ** omega_schroder(p) for p in enumerate_paths("schroder", (0, 0), (2 * n, 0)))
        assert total == q_schroder(n)
        assert gf_paths_dp("schroder", 2 * n, 0, OmegaWeights()) == q_schroder(n)


class TestLGV:
    def test_single_empty_path(self):
        res = lgv_check(1, 0, GenericWeights(4))
        assert res.det == 1 and res.agrees

    def test_unique_two_path(self):
        res = lgv_check(2, 0, GenericWeights(4))
        assert res.agrees and res.tuples == 1
        # an empty path plus UUDD avoiding the first vertex
        assert res.det == A[0] * A[1] * B[1] * B[2] == viennot_rhs(0, 2)

    @pytest.mark.parametrize("n,t", [(2, 1), (2, 2), (3, 1), (3, 3)])
    def test_brute_force_agrees(self, n, t):
        assert lgv_check(n, t, GenericWeights(2 * n + t)).agrees

    def test_guard(self):
        with pytest.raises(GuardExceeded):
            lgv_check(4, 0, GenericWeights(8))


def _dyck_hankel(n, t):
    w = GenericWeights(2 * n + t)
    mom = [gf_paths_dp(PathFamily.DYCK, 2 * k, 0, w) for k in range(2 * n - 1 + t)]
    return det_exact(ExactMatrix.build(n, n, lambda i, j: mom[i + j + t]))


class TestViennot:
    @pytest.mark.parametrize("t,n", [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)])
    def test_product_formulas(self, t, n):
        assert _dyck_hankel(n, t) == viennot_rhs(t, n)

    def test_t1_n1(self):
        assert viennot_rhs(1, 1) == A[0] * B[1]

    def test_t2_n1_exact_value(self):
        # the exact 1x1 determinant is mu_2
        assert _dyck_hankel(1, 2) == A[0] ** 2 * B[1] ** 2 + A[0] * A[1] * B[1] * B[2]

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_t2_amended(self, n):
        assert _dyck_hankel(n, 2) == viennot_rhs_amended(2, n)

    def test_t2_printed_differs(self):
        assert any(_dyck_hankel(n, 2) != viennot_rhs(2, n) for n in (1, 2, 3))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_t3(self, n):
        assert _dyck_hankel(n, 3) == viennot_rhs(3, n)

    def test_bad_shift(self):
        with pytest.raises(ValueError):
            viennot_rhs(4, 1)
