from fractions import Fraction

import pytest
from hypothesis import given

from qsmzv.classical import ClassicalPoly, z
from qsmzv.errors import ExprTypeError, ParseError
from qsmzv.exprlang import Env, cli_eval, evaluate, parse, tokenize
from qsmzv.evaluation import QContext
from qsmzv.freealg import H, NCPoly, e, g
from qsmzv.qops import E_index, qshuf

from conftest import apoly_st, ncpoly_st


def test_examples():
    assert cli_eval("ZqM(g[2])", q="1/2", M=3) == "5/18"
    assert cli_eval("iota(E[1,3])") == "z[1,3]"
    assert cli_eval("qharm(g[1],g[1])") == "g[2] + 2*g[1,1]"
    assert cli_eval("ZqM(qshuf(g[1],g[1]))", q="1/2", M=3) == "1/4"


def test_parse_error_offsets():
    with pytest.raises(ParseError) as exc:
        parse("qharm(g[1],")
    assert exc.value.offset == 12
    assert "offset 12" in str(exc.value)
    with pytest.raises(ParseError) as exc:
        parse("g[1] $ 2")
    assert exc.value.offset == 6
    with pytest.raises(ParseError) as exc:
        parse("g[0]")
    assert exc.value.offset == 3
    with pytest.raises(ParseError):
        parse("(g[1]")
    with pytest.raises(ParseError):
        parse("g[1]^x")


def test_type_errors():
    with pytest.raises(ExprTypeError):
        evaluate("harm(g[1], g[1])")
    with pytest.raises(ExprTypeError):
        evaluate("harm(x*z[1], z[1])")
    with pytest.raises(ExprTypeError):
        evaluate("g[1] + z[1]")
    with pytest.raises(ExprTypeError):
        evaluate("ZqM(g[2], 3)")  # no q
    with pytest.raises(ExprTypeError):
        evaluate("wS(both, g[1])")
    with pytest.raises(ExprTypeError):
        evaluate("qharm(g[1])")
    with pytest.raises(ExprTypeError):
        evaluate("hbar * z[1]")
    assert issubclass(ExprTypeError, TypeError)


def test_arithmetic_and_constructors():
    assert evaluate("e[1] - g[1]") == H
    assert evaluate("(e[1]+g[1])^2/2") == ((e(1) + g(1)) ** 2).scale(Fraction(1, 2))
    assert evaluate("hbar*g[1] + g[2]") == e(2)
    assert evaluate("E[2,1]") == E_index((2, 1))
    assert evaluate("-z[2] + 2*x*y") == -z(2) + ClassicalPoly.word("xy", 2)
    assert evaluate("wS(star, z[1,3])") == -z(4)
    assert evaluate("b*a") == g(1)


def test_evaluators_in_exact_mode():
    env = Env(ctx=QContext.parse("1/2"), M=5)
    assert evaluate("ZSqM(sh, e[1])", env) == Fraction(2)
    assert evaluate("ZSqM(sh, e[1], 3)", env) == Fraction(1)
    assert evaluate("kontsevich(g[2,3], 4)", env) == evaluate("ZSqM(star, g[2,3], 4)", env)
    assert evaluate("T(1, 1, 1)", env) == 1
    assert evaluate("ZM(z[2], 3)", env) == Fraction(5, 4)
    assert evaluate("ZMS(star, z[2], 3)", env) == Fraction(5, 2)


def test_float_limit():
    v = cli_eval("Zq(g[2])", q="0.999", tol=1e-12)
    assert abs(float(v) - 1.6353) < 1e-3


@given(apoly_st(max_wt=4))
def test_printed_q_words_parse_back(w):
    assert evaluate(str(w)) == w


@given(ncpoly_st(max_len=4))
def test_printed_raw_words_parse_back(w):
    assert evaluate(str(w)) == w


def test_tokenizer_positions():
    toks = tokenize("qharm( g[1] ,H)")
    assert [(t.text, t.pos) for t in toks[:3]] == [("qharm", 1), ("(", 6), ("g", 8)]
