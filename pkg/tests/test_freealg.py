import pytest
from hypothesis import given, strategies as st

from qsmzv.coeffring import HBAR, ONE, HPoly
from qsmzv.errors import NotInSubalgebra
from qsmzv.freealg import (H, NCPoly, aword_poly, awords, compositions, e, e_shape, expand_A,
                           from_A, from_e_shape, g, hoffman_dual, in_subalgebra, index_to_word,
                           indices, is_admissible, membership, offending_terms, to_A_basis,
                           word_to_index)

from conftest import apoly_st, index_st, ncpoly_st


def test_index_words():
    assert index_to_word((3, 1, 2, 1)) == "yxxyyxy"
    assert word_to_index("yxxyyxy") == (3, 1, 2, 1)
    assert hoffman_dual((3, 1, 2, 1)) == (1, 1, 3, 2)
    assert hoffman_dual(()) == ()


def test_compositions_count():
    for n in range(1, 7):
        assert len(list(compositions(n))) == 2 ** (n - 1)
    assert len(indices(3, wt_min=1, admissible_only=True)) == 3  # (2), (3), (1,2)


@given(index_st(max_wt=7, min_len=1))
def test_dual_is_an_involution(k):
    assert hoffman_dual(hoffman_dual(k)) == k
    assert sum(hoffman_dual(k)) == sum(k)


@given(index_st(max_wt=8, min_len=1))
def test_e_shape_round_trip(k):
    s0, blocks = e_shape(k)
    assert from_e_shape(s0, blocks) == k


def test_e_single_and_products():
    assert e(2) == g(2) + g(1).scale(HBAR)
    assert e(1) == g(1) + H
    assert to_A_basis(e(2)) == {(2,): ONE, (1,): HBAR}
    assert str(e(1, 2)) == "(hbar)*H*g[1] + (hbar)*g[1,1] + H*g[2] + g[1,2]"


def test_A_view_rejects_leading_a():
    p = NCPoly.word("ab")
    assert not in_subalgebra(p)
    with pytest.raises(NotInSubalgebra):
        p.a_view()
    assert str(p) == "a*b"


@given(apoly_st(max_wt=4))
def test_A_basis_round_trip(p):
    assert from_A(to_A_basis(p)) == p


@given(st.integers(0, 4))
def test_expand_A_matches_aword_poly(wt):
    for aw in awords(wt):
        assert expand_A(aw) == aword_poly(aw)


@given(ncpoly_st(), ncpoly_st(), ncpoly_st())
def test_concatenation_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_membership():
    assert membership(g(2), "Hhat0")
    assert not membership(H, "Hhat0")
    assert membership(H * g(2), "n0")
    assert membership(g(1) * H * g(2), "n0")
    assert not membership(g(2), "n0")
    assert not membership(H * g(1), "n")
    assert membership((H * g(1)).scale(HBAR), "n")
    assert membership(g(2) + H * g(2), "H0")
    assert not membership(g(1, 1), "H0")
    assert membership(g(1, 2) - g(3).scale(2), "Zspan_adm")
    assert not membership(g(1, 2).scale(HBAR), "Zspan_adm")
    assert offending_terms(g(1) + g(2), "H0") == [((1,), HPoly(1))]


def test_admissible():
    assert is_admissible(()) and is_admissible((1, 2))
    assert not is_admissible((2, 1))
