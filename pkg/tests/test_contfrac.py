import pytest

from hankelforge.algebra import RatFunc, as_ratfunc, var
from hankelforge.closed_forms import rhs_q_catalan_det
from hankelforge.contfrac import (
    DegenerateMoments,
    InsufficientCoefficients,
    JFraction,
    SFraction,
    delta_from_lambdas,
    functional,
    j_to_series,
    little_qjacobi_lambda,
    little_qjacobi_recurrence,
    little_qjacobi_sfraction,
    moments_to_j,
    ortho_polys,
    qjacobi_jfraction,
    resolve_qjacobi_variant,
    resolve_recurrence_law,
    s_to_j,
    s_to_series,
)
from hankelforge.linalg import det_exact, hankel_matrix
from hankelforge.paths import QCatalanWeights, gf_paths_dp
from hankelforge.qseries import moment_mu
from hankelforge.sequences import seq_prefix

q, a, b = var("q"), var("a"), var("b")


def chebyshev_oracle(moments):
    """Modified Chebyshev recursion, independent of any determinant."""
    mus = [as_ratfunc(m) for m in moments]
    M = len(mus)
    prev, cur = [RatFunc(0)] * M, list(mus)
    bs, lams = [cur[1] / cur[0]], []
    k = 0
    while 2 * (k + 1) <= M - 1:
        k += 1
        nxt = [None] * M
        for l in range(k, M - k):
            v = cur[l + 1] - bs[-1] * cur[l]
            if k >= 2:
                v = v - lams[-1] * prev[l]
            nxt[l] = v
        lams.append(nxt[k] / cur[k - 1])
        if k + 1 <= M - k - 1:
            bs.append(nxt[k + 1] / nxt[k] - cur[k] / cur[k - 1])
        prev, cur = cur, nxt
    return bs, lams


def moments(kind, count):
    return seq_prefix(kind, count - 1)


class TestMomentsToJ:
    def test_catalan(self):
        jf = moments_to_j(moments("catalan", 10))
        assert list(jf.b) == [1, 2, 2, 2, 2]
        assert all(x == 1 for x in jf.lam)

    def test_motzkin(self):
        jf = moments_to_j(moments("motzkin", 10))
        assert all(x == 1 for x in jf.b) and all(x == 1 for x in jf.lam)

    @pytest.mark.parametrize("kind", ["catalan", "motzkin", "schroder", "q-moment"])
    def test_against_chebyshev(self, kind):
        mus = moments(kind, 8)
        jf = moments_to_j(mus)
        bs, lams = chebyshev_oracle(mus)
        assert list(jf.b) == bs
        assert list(jf.lam) == lams

    def test_degenerate(self):
        with pytest.raises(DegenerateMoments) as err:
            moments_to_j([1, 1, 1])
        assert err.value.k == 1

    def test_b0(self):
        assert moments_to_j([moment_mu(0), moment_mu(1)]).b[0] == moment_mu(1)


class TestSeries:
    def test_zero_fraction(self):
        s = j_to_series(JFraction((0, 0, 0), (0, 0)), 4)
        assert [s[k] for k in range(4)] == [1, 0, 0, 0]

    def test_motzkin_series(self):
        s = j_to_series(JFraction((1, 1, 1), (1, 1)), 5)
        assert [s[k] for k in range(5)] == [1, 1, 2, 4, 9]

    def test_insufficient(self):
        with pytest.raises(InsufficientCoefficients):
            j_to_series(JFraction((1,), ()), 6)

    @pytest.mark.parametrize("kind", ["catalan", "motzkin", "q-moment"])
    def test_roundtrip(self, kind):
        mus = moments(kind, 10)
        s = j_to_series(moments_to_j(mus), 10)
        assert [s[k] for k in range(10)] == [as_ratfunc(m) for m in mus]


class TestSFraction:
    def test_contraction_catalan(self):
        jf = s_to_j(SFraction((1,) * 7))
        assert list(jf.b) == [1, 2, 2, 2] and list(jf.lam) == [1, 1, 1]

    def test_contraction_geometric(self):
        c = var("c")
        jf = s_to_j(SFraction((c, 0, 0, 0, 0)))
        assert jf.b[0] == c and all(x == 0 for x in jf.b[1:] + jf.lam)

    def test_contraction_needs_two(self):
        with pytest.raises(InsufficientCoefficients):
            s_to_j(SFraction((1,)))

    def test_qjacobi_first_coefficients(self):
        assert little_qjacobi_lambda(1) == moment_mu(1)
        lam2 = RatFunc(a * q * (1 - q) * (1 - b * q), (1 - a * b * q**2) * (1 - a * b * q**3))
        assert little_qjacobi_lambda(2) == lam2

    def test_variant_resolution(self):
        assert resolve_qjacobi_variant() == {"printed": False, "weight": True}
        assert little_qjacobi_sfraction(4).variant == "weight"

    def test_sfraction_moments(self):
        s = s_to_series(little_qjacobi_sfraction(6), 6)
        assert [s[k] for k in range(6)] == [moment_mu(k) for k in range(6)]

    def test_dyck_generating_series(self):
        # the S-fraction in t^2 sums GF(D_{2n,0}) t^{2n} through t^12
        s = s_to_series(little_qjacobi_sfraction(6), 7)
        w = QCatalanWeights()
        assert [s[k] for k in range(7)] == [gf_paths_dp("dyck", 2 * k, 0, w) for k in range(7)]


class TestRecurrence:
    def test_A0_C0(self):
        A0, C0 = little_qjacobi_recurrence(0)
        assert A0 == RatFunc(1 - a * q, 1 - a * b * q**2)
        assert C0 == 0

    def test_law(self):
        assert resolve_recurrence_law() == {"A(n-1)C(n-1)": False, "A(n-1)C(n)": True}

    def test_b_equals_A_plus_C(self):
        ref = moments_to_j([moment_mu(k) for k in range(10)])
        jf = qjacobi_jfraction(5)
        assert list(jf.b) == list(ref.b)
        assert list(jf.lam) == list(ref.lam[:4])

    def test_negative_index(self):
        with pytest.raises(ValueError):
            little_qjacobi_recurrence(-1)


class TestOrthogonalPolynomials:
    def test_p1(self):
        jf = JFraction((var("c"),), ())
        assert ortho_polys(jf, 1)[1] == (-RatFunc(var("c")), RatFunc(1))

    def test_catalan_p2(self):
        ps = ortho_polys(JFraction((1, 2), (1,)), 2)
        assert list(ps[2]) == [1, -3, 1]
        assert ps.text(2) == "x^2 + -3*x + 1"

    def test_orthogonality(self):
        mus = [moment_mu(k) for k in range(10)]
        jf = moments_to_j(mus)
        ps = ortho_polys(jf, 4)
        for m in range(5):
            for n in range(m):
                assert functional(ps[m], mus, ps[n]).is_zero
            norm = RatFunc(1)
            for k in range(1, m + 1):
                norm = norm * jf.lam[k - 1]
            assert functional(ps[m], mus, ps[m]) == norm

    def test_insufficient(self):
        with pytest.raises(InsufficientCoefficients):
            ortho_polys(JFraction((1,), ()), 3)


class TestDeltaProduct:
    def test_n1(self):
        assert delta_from_lambdas(JFraction((1,), ()), 1) == 1

    @pytest.mark.parametrize("kind", ["catalan", "motzkin", "q-moment"])
    def test_matches_hankel(self, kind):
        jf = moments_to_j(moments(kind, 10))
        for n in range(1, 6):
            assert delta_from_lambdas(jf, n) == det_exact(hankel_matrix(kind, n))

    def test_closed_form(self):
        jf = moments_to_j([moment_mu(k) for k in range(6)])
        assert delta_from_lambdas(jf, 3) == rhs_q_catalan_det(3)
