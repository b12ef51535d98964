from fractions import Fraction

from hypothesis import given

from qsmzv.coeffring import HBAR, ONE, ZERO, HPoly, as_rational, format_rational, hbar_divides, hbar_eval

from conftest import hpolys


def test_basic_arithmetic():
    p = ONE + HBAR
    assert p * p == HPoly((1, 2, 1))
    assert (p ** 3).coeff(2) == 3
    assert p - p == ZERO
    assert HPoly((0, 0, Fraction(1, 2))).low_degree() == 2


def test_str_and_eval():
    assert str(HPoly((Fraction(1, 2), 0, 1))) == "1/2 + hbar^2"
    assert HPoly((1, 1)).evaluate(Fraction(1, 2)) == Fraction(3, 2)
    assert hbar_eval(HBAR, Fraction(1, 4)) == Fraction(3, 4)


def test_hbar_division():
    p = HPoly((0, 2, 3))
    assert p.div_hbar_power(1) == HPoly((2, 3))
    assert p.div_hbar_power(2) is None
    ok, quot = hbar_divides(p)
    assert ok and quot == HPoly((2, 3))
    assert not hbar_divides(ONE)[0]


def test_equality_with_numbers():
    assert HPoly((3,)) == 3
    assert HPoly((Fraction(1, 2),)) == Fraction(1, 2)
    assert hash(HPoly((3,))) == hash(HPoly.lift(3))


def test_rational_helpers():
    assert as_rational("3/6") == Fraction(1, 2)
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@given(hpolys, hpolys, hpolys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(hpolys, hpolys)
def test_evaluation_is_a_homomorphism(a, b):
    x = Fraction(2, 7)
    assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
    assert (a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x)


@given(hpolys)
def test_shift_then_divide(a):
    assert a.shift(2).div_hbar_power(2) == a
