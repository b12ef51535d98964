"""Indices, words in a, b, the alphabet {H, g_k}, and noncommutative polynomials.

Words are plain strings over "ab".  An A-letter is an int: 0 stands for
H = hbar*b = e_1 - g_1 and k >= 1 for g_k = b a^k.  An A-word is a tuple of
such ints.  Every b-initial (a,b)-word is the expansion of exactly one A-word
up to the factor hbar^(number of H letters), which is what makes the two
views cheap to switch between.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping

from .coeffring import HBAR, ONE, ZERO, HPoly, format_rational
from .errors import NotInSubalgebra

H_LETTER = 0


# ---------------------------------------------------------------- indices

def weight(k) -> int:
    return sum(k)


def depth(k) -> int:
    return len(k)


def is_admissible(k) -> bool:
    return not k or k[-1] >= 2


def index_stats(k):
    k = tuple(k)
    return sum(k), len(k), k[::-1], is_admissible(k)


def index_to_word(k) -> str:
    """z_k as a word in x, y."""
    return "".join("y" + "x" * (p - 1) for p in k)


def word_to_index(w: str):
    """Inverse of index_to_word; w must be empty or start with y."""
    if not w:
        return ()
    if w[0] != "y":
        raise ValueError(f"word {w!r} does not start with y")
    parts = []
    for ch in w:
        if ch == "y":
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


def hoffman_dual(k):
    k = tuple(k)
    if not k:
        return ()
    w = index_to_word(k)
    swapped = "y" + w[1:].translate(str.maketrans("xy", "yx"))
    return word_to_index(swapped)


def e_shape(k):
    """Split k = (1^s0, t1+2, 1^s1, ..., tr+2, 1^sr); returns (s0, [(t1, s1), ...])."""
    k = tuple(k)
    if not k:
        raise ValueError("e_shape needs a non-empty index")
    s0 = 0
    i = 0
    while i < len(k) and k[i] == 1:
        s0 += 1
        i += 1
    blocks = []
    while i < len(k):
        t = k[i] - 2
        i += 1
        s = 0
        while i < len(k) and k[i] == 1:
            s += 1
            i += 1
        blocks.append((t, s))
    return s0, blocks


def from_e_shape(s0, blocks):
    out = [1] * s0
    for t, s in blocks:
        out.append(t + 2)
        out.extend([1] * s)
    return tuple(out)


def compositions(n: int):
    """All indices of weight exactly n."""
    if n == 0:
        yield ()
        return
    for cuts in range(n):
        for pos in combinations(range(1, n), cuts):
            bounds = (0,) + pos + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


def indices(wt_max: int, wt_min: int = 0, dep_max=None, admissible_only=False):
    out = []
    for n in range(wt_min, wt_max + 1):
        for k in compositions(n):
            if dep_max is not None and len(k) > dep_max:
                continue
            if admissible_only and not is_admissible(k):
                continue
            out.append(k)
    return out


def aword_weight(aw) -> int:
    return sum(1 if x == H_LETTER else x for x in aw)


def awords(wt: int):
    """All A-words of weight exactly wt (H has weight 1)."""
    if wt == 0:
        return [()]
    out = []
    for first in range(0, wt + 1):
        w1 = 1 if first == H_LETTER else first
        for rest in awords(wt - w1):
            out.append((first,) + rest)
    return out


def aword_to_word(aw) -> str:
    return "".join("b" if x == H_LETTER else "b" + "a" * x for x in aw)


@lru_cache(maxsize=None)
def word_to_aword(w: str):
    """Greedy scan; returns (aword, number of H letters) or None if w starts with a."""
    if not w:
        return (), 0
    if w[0] != "b":
        return None
    letters = []
    for ch in w:
        if ch == "b":
            letters.append(0)
        else:
            letters[-1] += 1
    return tuple(letters), letters.count(0)


def format_aword(aw) -> str:
    if not aw:
        return "1"
    pieces = []
    run = []
    for x in aw:
        if x == H_LETTER:
            if run:
                pieces.append("g[" + ",".join(map(str, run)) + "]")
                run = []
            pieces.append("H")
        else:
            run.append(x)
    if run:
        pieces.append("g[" + ",".join(map(str, run)) + "]")
    return "*".join(pieces)


# ---------------------------------------------------------------- polynomials

def _sort_key(w: str):
    return (len(w), w)


def _coerce_coeff(c) -> HPoly:
    if isinstance(c, HPoly):
        return c
    return HPoly.lift(c)


class NCPoly:
    """Element of Q[hbar]<a, b>; terms maps word -> nonzero HPoly."""

    __slots__ = ("terms", "_hash", "_aview")

    def __init__(self, terms: Mapping[str, object] | None = None):
        clean = {}
        if terms:
            for w, c in terms.items():
                c = _coerce_coeff(c)
                if c:
                    clean[w] = c
        self.terms = clean
        self._hash = None
        self._aview = None

    @classmethod
    def _wrap(cls, terms: dict) -> "NCPoly":
        # terms must contain no zero coefficients
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        p._aview = None
        return p

    @staticmethod
    def const(c) -> "NCPoly":
        return NCPoly({"": c})

    @staticmethod
    def word(w: str, c=1) -> "NCPoly":
        return NCPoly({w: c})

    @staticmethod
    def lift(x) -> "NCPoly":
        if isinstance(x, NCPoly):
            return x
        return NCPoly.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    def max_len(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coeff(self, w: str) -> HPoly:
        return self.terms.get(w, ZERO)

    def __add__(self, other):
        other = NCPoly.lift(other)
        if not other.terms:
            return self
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            if s is None:
                out[w] = c
            else:
                s = s + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return NCPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._wrap({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-NCPoly.lift(other))

    def __rsub__(self, other):
        return NCPoly.lift(other) - self

    def scale(self, c) -> "NCPoly":
        c = _coerce_coeff(c)
        if not c:
            return ZERO_POLY
        if c == 1:
            return self
        out = {}
        for w, x in self.terms.items():
            y = x * c
            if y:
                out[w] = y
        return NCPoly._wrap(out)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    c = c1 * c2
                    s = out.get(w)
                    out[w] = c if s is None else s + c
            return NCPoly({w: c for w, c in out.items() if c})
        if isinstance(other, (int, Fraction, HPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, HPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        out = ONE_POLY
        for _ in range(n):
            out = out * self
        return out

    def map_coeffs(self, f) -> "NCPoly":
        return NCPoly({w: f(c) for w, c in self.terms.items()})

    def at_hbar_zero(self) -> "NCPoly":
        return NCPoly({w: c.const_term() for w, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, HPoly)):
            return self.terms == NCPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"NCPoly({self})"

    def __str__(self):
        return format_ncpoly(self)

    def a_view(self) -> dict:
        if self._aview is None:
            self._aview = _to_A(self)
        return self._aview


def _to_A(p: NCPoly) -> dict:
    out = {}
    for w, c in p.terms.items():
        r = word_to_aword(w)
        if r is None:
            raise NotInSubalgebra(f"monomial {w!r} starts with a")
        aw, nh = r
        cc = c.div_hbar_power(nh)
        if cc is None:
            raise NotInSubalgebra(f"bare b in {w!r} has coefficient {c} not divisible by hbar^{nh}")
        out[aw] = cc
    return out


def to_A_basis(p: NCPoly) -> dict:
    return dict(p.a_view())


def expand_A(aw, coeff=ONE) -> NCPoly:
    """(a,b)-expansion of a single A-word times a coefficient."""
    nh = sum(1 for x in aw if x == H_LETTER)
    c = _coerce_coeff(coeff).shift(nh)
    return NCPoly({aword_to_word(aw): c})


def from_A(mapping: Mapping) -> NCPoly:
    out = {}
    for aw, c in mapping.items():
        c = _coerce_coeff(c)
        if not c:
            continue
        nh = sum(1 for x in aw if x == H_LETTER)
        out[aword_to_word(aw)] = c.shift(nh)
    return NCPoly(out)


def in_subalgebra(p: NCPoly) -> bool:
    try:
        p.a_view()
    except NotInSubalgebra:
        return False
    return True


ZERO_POLY = NCPoly()
ONE_POLY = NCPoly({"": ONE})


# ---------------------------------------------------------------- constructors

def g(*ks) -> NCPoly:
    if len(ks) == 1 and isinstance(ks[0], (tuple, list)):
        ks = tuple(ks[0])
    return NCPoly.word("".join("b" + "a" * k for k in ks))


def e_single(k: int) -> NCPoly:
    # e_k = b (a + hbar) a^(k-1) = g_k + hbar g_(k-1); for k = 1 the second term is hbar*b
    return NCPoly({"b" + "a" * k: ONE, "b" + "a" * (k - 1): HBAR})


def e(*ks) -> NCPoly:
    if len(ks) == 1 and isinstance(ks[0], (tuple, list)):
        ks = tuple(ks[0])
    out = ONE_POLY
    for k in ks:
        out = out * e_single(k)
    return out


H = NCPoly({"b": HBAR})
A_WORD = NCPoly.word("a")
B_WORD = NCPoly.word("b")


def aword_poly(aw) -> NCPoly:
    return expand_A(tuple(aw))


# ---------------------------------------------------------------- membership

def is_n0_monomial(aw) -> bool:
    if not aw or aw[-1] == H_LETTER:
        return False
    seen_h = False
    for x in aw:
        if x == H_LETTER:
            seen_h = True
        elif seen_h and x >= 2:
            return True
    return False


def _in_hhat0(view) -> bool:
    return all(not aw or aw[-1] != H_LETTER for aw in view)


SPACES = ("Hhat0", "n0", "n", "H0", "gspan", "Zspan_adm")


def membership(p: NCPoly, space: str) -> bool:
    view = p.a_view()
    if space == "Hhat0":
        return _in_hhat0(view)
    if space == "n0":
        return all(is_n0_monomial(aw) for aw in view)
    if space == "n":
        if not _in_hhat0(view):
            return False
        return all(is_n0_monomial(aw) or c.const_term() == 0 for aw, c in view.items())
    if space == "H0":
        if not _in_hhat0(view):
            return False
        for aw, c in view.items():
            if aw and aw[-1] == 1 and not is_n0_monomial(aw) and c.const_term() != 0:
                return False
        return True
    if space == "gspan":
        return all(H_LETTER not in aw for aw in view)
    if space == "Zspan_adm":
        for aw, c in view.items():
            if H_LETTER in aw or not is_admissible(aw):
                return False
            if not c.is_constant():
                return False
            x = c.const_term()
            if Fraction(x).denominator != 1:
                return False
        return True
    raise ValueError(f"unknown space {space!r}")


def offending_terms(p: NCPoly, space: str):
    """A-words that witness non-membership (for diagnostics)."""
    bad = []
    for aw, c in p.a_view().items():
        if not membership(from_A({aw: c}), space):
            bad.append((aw, c))
    return bad


# ---------------------------------------------------------------- printing

def format_term(coeff: HPoly, mono: str) -> str:
    if mono == "1":
        return str(coeff) if coeff.is_constant() else f"({coeff})"
    if coeff == 1:
        return mono
    if coeff == -1:
        return "-" + mono
    if coeff.is_constant():
        return f"{format_rational(coeff.const_term())}*{mono}"
    return f"({coeff})*{mono}"


def format_ncpoly(p: NCPoly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for w, c in p.items():
        r = word_to_aword(w)
        if r is not None:
            aw, nh = r
            cc = c.div_hbar_power(nh)
            if cc is not None:
                pieces.append(format_term(cc, format_aword(aw)))
                continue
        pieces.append(format_term(c, "*".join(w) if w else "1"))
    return join_terms(pieces)


def join_terms(pieces: Iterable[str]) -> str:
    pieces = list(pieces)
    s = pieces[0]
    for t in pieces[1:]:
        s += " - " + t[1:] if t.startswith("-") else " + " + t
    return s
