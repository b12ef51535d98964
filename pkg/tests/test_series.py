from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qsmzv.coeffring import HBAR
from qsmzv.errors import (ArityMismatch, BadU, NonInvertibleConstant, NonzeroConstantTerm,
                          UnknownIdentity)
from qsmzv.freealg import A_WORD, B_WORD, H, NCPoly, e, g
from qsmzv.qops import E_ones, qshuf
from qsmzv.series import (CATALOG, HSeries, E_series, E_series_from_ones, R_series, X,
                          _cmp, check_identity, exp_prod, geom_inverse, one, rho_def,
                          rho_U)

from conftest import apoly_st

N = 4


@st.composite
def series_st(draw, order=N):
    coeffs = {}
    for i in range(order):
        if draw(st.booleans()):
            coeffs[(i,)] = draw(apoly_st(max_wt=2, max_terms=2))
    return HSeries(("X",), order, coeffs)


@given(series_st(), series_st(), series_st())
def test_series_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a.shuffle(b) == b.shuffle(a)


@given(series_st())
def test_geometric_inverse(s):
    f = one(N, ("X",)) + s.without_const()
    inv = geom_inverse(f)
    assert f * inv == one(N, ("X",))
    assert inv * f == one(N, ("X",))


def test_inverse_errors():
    with pytest.raises(NonInvertibleConstant):
        geom_inverse(X(N))
    with pytest.raises(NonInvertibleConstant):
        geom_inverse(HSeries.const(g(1), N))
    with pytest.raises(NonzeroConstantTerm):
        exp_prod(one(N), "sh")


def test_exp_of_a_scalar_variable():
    ex = exp_prod(X(N, coeff=NCPoly.const(1)), "sh")
    for n in range(N):
        assert ex.coefficient(n) == NCPoly.const(Fraction(1, [1, 1, 2, 6][n]))


def test_E_series_closed_form():
    assert E_series(5) == E_series_from_ones(5)
    assert E_series(3).coefficient(1) == E_ones(1)


def test_two_variable_bookkeeping():
    s = X(3, "X") * X(3, "Y")
    assert s.vars == ("X", "Y")
    assert s.coefficient(1, 1) == NCPoly.const(1)
    assert s.div_monomial((1, 1)).coefficient(0, 0) == NCPoly.const(1)
    sub = R_series(4).subs({"X": X(4, "Y").scale(2)})
    assert sub.coefficient(1) == NCPoly.const(2)


def test_rho_homomorphism_matches_definition():
    U = X(N, coeff=B_WORD)
    for w in [A_WORD, B_WORD, g(1), g(2) * H, e(2)]:
        assert rho_U(w, U) == rho_def(w, U)
    with pytest.raises(BadU):
        rho_U(g(1), X(N, coeff=A_WORD))
    with pytest.raises(BadU):
        rho_U(g(1), one(N))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_identity(name):
    rep = check_identity(name, 5)
    assert rep.cases
    assert rep.ok, [c for c in rep.cases if c.status != "pass"]


def test_identity_parameters():
    rep = check_identity("B10", 4, [(1, 2)])
    assert [c.status for c in rep.cases] == ["pass"] * len(rep.cases)
    with pytest.raises(ArityMismatch):
        check_identity("B1", 3, [g(1)])
    with pytest.raises(ArityMismatch):
        check_identity("B5", 3, [g(1)])
    with pytest.raises(UnknownIdentity):
        check_identity("B99")


def test_comparison_is_not_vacuous():
    a = HSeries.var("X", 3, g(1))
    ok, _ = _cmp(a, HSeries.var("X", 3, g(2)))
    assert not ok
    # H g_2 lies in n, so it passes modulo n but not exactly
    b = a + HSeries.var("X", 3, H * g(2))
    assert not _cmp(a, b)[0]
    assert _cmp(a, b, "mod_n")[0]
    assert not _cmp(a, a + HSeries.var("X", 3, g(1, 2)), "mod_n")[0]
