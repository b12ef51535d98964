import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qsmzv.errors import MissingSqrtQ, NotConvergentInput
from qsmzv.evaluation import (B_bound, F, F_ext, Lq_tseries, QContext, T_qM, ZqM, ZSqM,
                              ZSqM_double_sum, Zq, ZqS_sh, ZqS_star, basis_exponents,
                              basis_monomial, kontsevich_ZS_star, limit_probe, qint,
                              tail_bound, truncated_shuffle_sum)
from qsmzv.freealg import H, H_LETTER, NCPoly, aword_poly, e, g
from qsmzv.qops import psi_sh, qharm, qshuf

from conftest import apoly_st, aword_st

HALF = QContext()


def brute_F(m, x, q):
    qm = (1 - q ** m) / (1 - q)
    return (1 - q) if x == H_LETTER else q ** (x * m) / qm ** x


def brute_ZqM(aw, M, q):
    total = Fraction(0)
    for ms in product(range(1, M), repeat=len(aw)):
        if all(ms[i] < ms[i + 1] for i in range(len(ms) - 1)):
            t = Fraction(1)
            for m, x in zip(ms, aw):
                t *= brute_F(m, x, q)
            total += t
    return total


def test_q_integers_and_letters():
    assert qint(3, HALF) == Fraction(7, 4)
    assert F(2, g(1), HALF) == Fraction(1, 6)
    assert F(5, 0, HALF) == Fraction(1, 2)


def test_truncated_values():
    assert ZqM(g(2), 3, HALF) == Fraction(5, 18)
    assert ZqM(qshuf(g(1), g(1)), 3, HALF) == Fraction(1, 4)
    assert ZqM(1, 4, HALF) == 1


@given(aword_st(4), st.integers(1, 6))
def test_ZqM_against_enumeration(aw, M):
    assert ZqM(aword_poly(aw), M, HALF) == brute_ZqM(aw, M, HALF.q)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_negative_arguments(k):
    for m in range(1, 5):
        assert F_ext(-m, g(k), "sh", HALF) == Fraction((-1) ** k) / qint(m, HALF) ** k
        assert F_ext(-m, g(k), "star", HALF) == (-1) ** k * F(m, g(k), HALF)


def test_closed_forms():
    hb = HALF.hbar
    for M in range(1, 8):
        assert ZSqM(e(1), M, "sh", HALF) == hb * (M - 1)
        assert ZSqM((e(1) + g(1)) ** 2, M, "sh", HALF) == hb ** 2 * math.comb(M - 1, 2)


@given(apoly_st(max_wt=3), apoly_st(max_wt=3), st.integers(2, 5))
def test_truncated_harmonic_product(u, v, M):
    assert ZqM(qharm(u, v), M, HALF) == ZqM(u, M, HALF) * ZqM(v, M, HALF)
    assert ZqM(qshuf(u, v), M, HALF) == truncated_shuffle_sum(u, v, M, HALF)


@given(apoly_st(max_wt=3), apoly_st(max_wt=2), st.integers(2, 5))
def test_truncated_symmetric_double_shuffle(u, v, M):
    assert ZSqM(qharm(u, v), M, "star", HALF) == ZSqM(u, M, "star", HALF) * ZSqM(v, M, "star", HALF)
    assert ZSqM(qshuf(u, v), M, "sh", HALF) == ZSqM(u * psi_sh(v), M, "sh", HALF)


@given(apoly_st(max_wt=4), st.integers(1, 6), st.sampled_from(["star", "sh"]))
def test_symmetric_sum_double_sum_form(w, M, mode):
    assert ZSqM(w, M, mode, HALF) == ZSqM_double_sum(w, M, mode, HALF)


def test_kontsevich_order():
    assert kontsevich_ZS_star(1, 4, HALF) == 1
    assert kontsevich_ZS_star(g(1), 5, HALF) == 0
    w = g(2, 3)
    assert kontsevich_ZS_star(w, 4, HALF) == ZSqM(w, 4, "star", HALF)


def test_trilinear():
    assert T_qM(1, 1, 1, 4, HALF) == 1
    assert T_qM(g(1), g(1), g(2), 4, HALF) == Fraction(-251, 784)
    assert T_qM(g(1), g(1), g(2), 4, HALF) == ZSqM(qshuf(g(1), g(1)) * g(2), 4, "sh", HALF)
    assert T_qM(g(2), H, 1, 5, HALF) == ZSqM(g(2) * psi_sh(H), 5, "sh", HALF)


def test_t_series():
    coeffs = Lq_tseries(g(1), 6, HALF)
    for m in range(1, 6):
        assert coeffs[m] == HALF.q ** m / qint(m, HALF)
    w = g(1, 2) + H * g(1)
    c = Lq_tseries(w, 6, HALF)
    for M in range(1, 7):
        assert sum(c[:M]) == ZqM(w, M, HALF)


def test_t_series_is_multiplicative_for_shuffle():
    u, v = g(1), g(2)
    cu, cv = Lq_tseries(u, 7, HALF), Lq_tseries(v, 7, HALF)
    cuv = Lq_tseries(qshuf(u, v), 7, HALF)
    for n in range(7):
        assert cuv[n] == sum(cu[i] * cv[n - i] for i in range(n + 1))


def test_B_bound():
    quarter = QContext.parse("1/4")
    assert quarter.sqrt_q == Fraction(1, 2)
    assert B_bound([0], [1], 3, quarter) == Fraction(9, 16)
    with pytest.raises(MissingSqrtQ):
        B_bound([0], [1], 3, QContext.parse("1/2"))
    aw = basis_monomial([1, 0], [0, 2])
    assert aw == (H_LETTER, 1, 3)
    assert basis_exponents(aw) == ([1, 0], [0, 2])
    assert 0 <= ZqM(aword_poly(aw), 6, quarter) <= B_bound([1, 0], [0, 2], 6, quarter)


def test_context_parsing():
    assert QContext.parse("0.9").mode == "float"
    assert QContext.parse("1/2").exact
    with pytest.raises(ValueError):
        QContext(q=Fraction(3, 2))


def test_limit_evaluation():
    ctx = QContext(q=Fraction(1, 2), mode="float")
    a = Zq(H * g(1), ctx)
    b = Zq(g(2), ctx)
    assert abs(a.value - b.value) < 1e-10
    assert a.tail_bound < ctx.tail_tol
    with pytest.raises(NotConvergentInput):
        Zq(H, ctx)


@pytest.mark.parametrize("w", [g(2), g(1, 2), H * g(3), g(1) + g(2, 1)])
def test_tail_bound_is_certified(w):
    ctx = QContext(q=Fraction(1, 2), mode="exact")
    M = 8
    far = ZqM(w, 80, ctx)
    assert abs(float(far - ZqM(w, M, ctx))) <= tail_bound(w, M, ctx)


def test_symmetric_limits():
    ctx = QContext(q=0.5, mode="float")
    assert ZqS_star((3,), ctx).value == 0
    assert abs(ZqS_star((2,), ctx).value - 2 * Zq(g(2), ctx).value) < 1e-12
    assert ZqS_sh((1, 1), ctx).value == 0


def test_limit_probe_reports_ratio_for_n():
    rows = limit_probe(H * g(2), [0.5, 0.9])
    assert "ratio" in rows[0]
    # Z_q(H g_2) = (1-q) sum_n (n-1) q^(2n) / [n]^2
    q = 0.5
    oracle = (1 - q) * sum((n - 1) * q ** (2 * n) / ((1 - q ** n) / (1 - q)) ** 2
                           for n in range(2, 200))
    assert rows[0]["value"] == pytest.approx(oracle, abs=1e-12)
    assert "ratio" not in limit_probe(g(2), [0.5])[0]
