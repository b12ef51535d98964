"""The classical word algebra Q<x, y>: harmonic and shuffle products,
the anti-automorphism psi, symmetrizers, truncated (symmetric) MZVs and the
combinatorics used for the Ohno-type relation.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Mapping

from .coeffring import format_rational
from .errors import NotInH1
from .freealg import index_to_word, join_terms, word_to_index


class ClassicalPoly:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[str, object] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if c:
                    clean[w] = c if isinstance(c, (int, Fraction)) else Fraction(c)
        self.terms = clean
        self._hash = None

    @staticmethod
    def const(c) -> "ClassicalPoly":
        return ClassicalPoly({"": c})

    @staticmethod
    def word(w: str, c=1) -> "ClassicalPoly":
        return ClassicalPoly({w: c})

    @staticmethod
    def lift(x) -> "ClassicalPoly":
        if isinstance(x, ClassicalPoly):
            return x
        return ClassicalPoly.const(x)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __add__(self, other):
        other = ClassicalPoly.lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return ClassicalPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ClassicalPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ClassicalPoly.lift(other))

    def __rsub__(self, other):
        return ClassicalPoly.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, ClassicalPoly):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
            return ClassicalPoly(out)
        if isinstance(other, (int, Fraction)):
            return ClassicalPoly({w: c * other for w, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        out = ClassicalPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, ClassicalPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ClassicalPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"ClassicalPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for w, c in self.items():
            if not w:
                pieces.append(format_rational(c))
                continue
            mono = _format_word(w)
            if c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{format_rational(c)}*{mono}")
        return join_terms(pieces)

    def in_h1(self) -> bool:
        return all(not w or w[0] == "y" for w in self.terms)

    def in_h0(self) -> bool:
        return all(not w or (w[0] == "y" and w[-1] == "x") for w in self.terms)

    def index_view(self) -> dict:
        """Map index -> coefficient; requires membership in h^1."""
        _require_h1(self)
        return {word_to_index(w): c for w, c in self.terms.items()}


def _format_word(w: str) -> str:
    if w[0] == "y":
        return "z[" + ",".join(map(str, word_to_index(w))) + "]"
    # leading x's are printed as letters, the rest as a z-block
    i = 0
    while i < len(w) and w[i] == "x":
        i += 1
    head = "*".join(w[:i])
    if i == len(w):
        return head
    return head + "*" + _format_word(w[i:])


def _require_h1(p: ClassicalPoly):
    for w in p.terms:
        if w and w[0] != "y":
            raise NotInH1(f"monomial {w!r} starts with x")


def z(*ks) -> ClassicalPoly:
    if len(ks) == 1 and isinstance(ks[0], (tuple, list)):
        ks = tuple(ks[0])
    return ClassicalPoly.word(index_to_word(ks))


def from_indices(mapping: Mapping) -> ClassicalPoly:
    return ClassicalPoly({index_to_word(k): c for k, c in mapping.items()})


# ---------------------------------------------------------------- products

@lru_cache(maxsize=None)
def _harm_idx(k, l):
    if not k:
        return ((l, 1),)
    if not l:
        return ((k, 1),)
    out: dict = {}
    for m, c in _harm_idx(k[:-1], l):
        key = m + (k[-1],)
        out[key] = out.get(key, 0) + c
    for m, c in _harm_idx(k, l[:-1]):
        key = m + (l[-1],)
        out[key] = out.get(key, 0) + c
    for m, c in _harm_idx(k[:-1], l[:-1]):
        key = m + (k[-1] + l[-1],)
        out[key] = out.get(key, 0) + c
    return tuple(out.items())


@lru_cache(maxsize=None)
def _shuf_words(u, v):
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict = {}
    for w, c in _shuf_words(u[:-1], v):
        out[w + u[-1]] = out.get(w + u[-1], 0) + c
    for w, c in _shuf_words(u, v[:-1]):
        out[w + v[-1]] = out.get(w + v[-1], 0) + c
    return tuple(out.items())


def harm(w: ClassicalPoly, w2: ClassicalPoly) -> ClassicalPoly:
    a, b = w.index_view(), w2.index_view()
    out: dict = {}
    for k, c1 in a.items():
        for l, c2 in b.items():
            for m, c in _harm_idx(k, l):
                out[m] = out.get(m, 0) + c1 * c2 * c
    return from_indices(out)


def shuf(w: ClassicalPoly, w2: ClassicalPoly) -> ClassicalPoly:
    out: dict = {}
    for u, c1 in w.terms.items():
        for v, c2 in w2.terms.items():
            for x, c in _shuf_words(u, v):
                out[x] = out.get(x, 0) + c1 * c2 * c
    return ClassicalPoly(out)


PRODUCTS = {"star": harm, "sh": shuf}


def psi(w: ClassicalPoly) -> ClassicalPoly:
    out = {}
    for k, c in w.index_view().items():
        out[k[::-1]] = c * (-1) ** sum(k)
    return from_indices(out)


def _psi_index(k):
    return from_indices({k[::-1]: (-1) ** sum(k)})


def wS_classical(w: ClassicalPoly, mode: str) -> ClassicalPoly:
    prod = PRODUCTS[mode]
    out = ClassicalPoly()
    for k, c in w.index_view().items():
        acc = ClassicalPoly()
        for i in range(len(k) + 1):
            acc = acc + prod(z(k[:i]), _psi_index(k[i:]))
        out = out + acc * c
    return out


def d_coeffs(k, l, mode: str) -> dict:
    p = PRODUCTS[mode](z(tuple(k)), z(tuple(l)))
    return {word_to_index(w): c for w, c in p.terms.items()}


# ---------------------------------------------------------------- truncated sums

def zeta_M(k, M: int) -> Fraction:
    """sum over 0 < m1 < ... < mr < M of prod m_i^(-k_i)."""
    k = tuple(k)
    if not k:
        return Fraction(1)
    # partial[m] = sum over chains ending exactly at m
    partial = [Fraction(0)] * M
    for m in range(1, M):
        partial[m] = Fraction(1, m ** k[0])
    for p in k[1:]:
        new = [Fraction(0)] * M
        run = Fraction(0)
        for m in range(1, M):
            new[m] = run / m ** p
            run += partial[m]
        partial = new
    return sum(partial[1:], Fraction(0))


def ZM(w: ClassicalPoly, M: int) -> Fraction:
    total = Fraction(0)
    for k, c in w.index_view().items():
        total += c * zeta_M(k, M)
    return total


def ZM_S_classical(w: ClassicalPoly, M: int, mode: str) -> Fraction:
    return ZM(wS_classical(w, mode), M)


# ---------------------------------------------------------------- Ohno machinery

def _distributions(total: int, slots: int):
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _distributions(total - first, slots - 1):
            yield (first,) + rest


def ohno_a(k, s: int) -> ClassicalPoly:
    """a_s(k) for an index whose parts may be zero."""
    k = tuple(k)
    wt = sum(k)
    out: dict = {}
    for js in _distributions(s, wt):
        it = iter(js)
        word = ""
        for p in k:
            word += "y"
            for _ in range(p):
                word += "y" * next(it) + "x"
        out[word] = out.get(word, 0) + 1
    return ClassicalPoly(out)


def ohno_A(k, s: int, p: int) -> ClassicalPoly:
    k = tuple(k)
    out = ClassicalPoly()
    for ones in combinations(range(len(k)), p):
        shifted = tuple(ki + (1 if i in ones else 0) - 1 for i, ki in enumerate(k))
        out = out + ohno_a(shifted, s)
    return out


def ohno_machinery_sides(k, n: int):
    k = tuple(k)
    lhs = ClassicalPoly()
    for p in range(min(n, len(k)) + 1):
        for s in range(n - p + 1):
            m = n - p - s
            term = shuf(ohno_A(k, s, p), z((1,) * m))
            lhs = lhs + term * (-1) ** s
    rhs = harm(z(k), z((1,) * n))
    return lhs, rhs


def ohno_machinery_check(k, n: int) -> bool:
    lhs, rhs = ohno_machinery_sides(k, n)
    return lhs == rhs
