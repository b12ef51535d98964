"""The coefficient ring Q[hbar].

Rationals are ``fractions.Fraction``.  ``HPoly`` is a dense polynomial in
hbar; evaluation sends hbar to 1 - q.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational: {x!r}")


def format_rational(x) -> str:
    """Serialize as "p/q" (or "p" when the denominator is 1)."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class HPoly:
    """Polynomial in hbar with rational coefficients, c[i] = coefficient of hbar^i."""

    __slots__ = ("c", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, HPoly):
            self.c = coeffs.c
        elif isinstance(coeffs, (int, Fraction)):
            self.c = (coeffs,) if coeffs else ()
        else:
            self.c = _trim(list(coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, c):
        # c must already be trimmed
        p = object.__new__(cls)
        p.c = c
        p._hash = None
        return p

    @staticmethod
    def lift(x) -> "HPoly":
        if isinstance(x, HPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return HPoly._raw((x,) if x else ())
        return HPoly._raw((as_rational(x),)) if as_rational(x) else ZERO

    @staticmethod
    def monomial(deg: int, coeff=1) -> "HPoly":
        if not coeff:
            return ZERO
        return HPoly._raw((0,) * deg + (coeff,))

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def coeff(self, i: int):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def const_term(self):
        return self.c[0] if self.c else 0

    def is_constant(self) -> bool:
        return len(self.c) <= 1

    def low_degree(self) -> int:
        for i, x in enumerate(self.c):
            if x:
                return i
        return -1

    def __add__(self, other):
        if not isinstance(other, HPoly):
            other = HPoly.lift(other)
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        if len(self.c) == len(other.c):
            return HPoly._raw(_trim(out))
        return HPoly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return HPoly._raw(tuple(-x for x in self.c))

    def __sub__(self, other):
        if not isinstance(other, HPoly):
            other = HPoly.lift(other)
        return self + (-other)

    def __rsub__(self, other):
        return HPoly.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, HPoly):
            a, b = self.c, other.c
            if not a or not b:
                return ZERO
            if len(b) == 1:
                s = b[0]
                return HPoly._raw(tuple(x * s for x in a))
            if len(a) == 1:
                s = a[0]
                return HPoly._raw(tuple(s * y for y in b))
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            return HPoly._raw(tuple(out))
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return HPoly._raw(tuple(x * other for x in self.c))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def shift(self, n: int) -> "HPoly":
        """Multiply by hbar^n."""
        if not self.c or n == 0:
            return self
        return HPoly._raw((0,) * n + self.c)

    def div_hbar_power(self, n: int):
        """Return self / hbar^n, or None if not divisible."""
        if n == 0:
            return self
        if any(self.c[:n]):
            return None
        return HPoly._raw(self.c[n:])

    def at_zero(self):
        return self.const_term()

    def evaluate(self, hbar_value):
        acc = 0
        for x in reversed(self.c):
            acc = acc * hbar_value + x
        return acc

    def __eq__(self, other):
        if isinstance(other, HPoly):
            return self.c == other.c
        if isinstance(other, (int, Fraction)):
            return self.c == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.c)
        return self._hash

    def __repr__(self):
        return f"HPoly({self})"

    def __str__(self):
        if not self.c:
            return "0"
        parts = []
        for i, x in enumerate(self.c):
            if not x:
                continue
            if i == 0:
                mono = format_rational(x)
            else:
                h = "hbar" if i == 1 else f"hbar^{i}"
                if x == 1:
                    mono = h
                elif x == -1:
                    mono = "-" + h
                else:
                    mono = f"{format_rational(x)}*{h}"
            parts.append(mono)
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s


ZERO = HPoly._raw(())
ONE = HPoly._raw((1,))
HBAR = HPoly._raw((0, 1))


def hbar_eval(p: HPoly, q):
    """p evaluated at hbar = 1 - q.  Works for Fractions and floats."""
    return HPoly.lift(p).evaluate(1 - q)


def hbar_divides(p: HPoly):
    p = HPoly.lift(p)
    if p.const_term():
        return False, None
    return True, HPoly._raw(p.c[1:])
