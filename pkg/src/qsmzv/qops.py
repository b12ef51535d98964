"""q-side products, involutions, symmetrizers, the map iota and E-words."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .classical import ClassicalPoly, from_indices
from .coeffring import HBAR, ONE, ZERO, HPoly
from .errors import NotDepthOne
from .freealg import (H_LETTER, ONE_POLY, ZERO_POLY, NCPoly, aword_to_word, e, e_shape,
                      e_single, from_A, g, indices, word_to_aword)

MODES = ("star", "sh")


def _acc(out: dict, key, c: HPoly):
    s = out.get(key)
    if s is None:
        out[key] = c
    else:
        s = s + c
        if s:
            out[key] = s
        else:
            del out[key]


def _apoly_to_ncpoly(d: dict) -> NCPoly:
    p = from_A(d)
    p._aview = {k: v for k, v in d.items() if v}
    return p


# ---------------------------------------------------------------- sh_hbar on (a,b)-words

@lru_cache(maxsize=None)
def _sh_words(u: str, v: str):
    if not u:
        return ((v, ONE),)
    if not v:
        return ((u, ONE),)
    out: dict = {}
    if u[-1] == "b":
        for w, c in _sh_words(u[:-1], v):
            _acc(out, w + "b", c)
    elif v[-1] == "b":
        for w, c in _sh_words(u, v[:-1]):
            _acc(out, w + "b", c)
    else:
        for w, c in _sh_words(u, v[:-1]):
            _acc(out, w + "a", c)
        for w, c in _sh_words(u[:-1], v):
            _acc(out, w + "a", c)
        for w, c in _sh_words(u[:-1], v[:-1]):
            _acc(out, w + "a", c.shift(1))
    return tuple(out.items())


def qshuf(p: NCPoly, q: NCPoly) -> NCPoly:
    p, q = NCPoly.lift(p), NCPoly.lift(q)
    out: dict = {}
    for u, c1 in p.terms.items():
        for v, c2 in q.terms.items():
            c12 = c1 * c2
            for w, c in _sh_words(u, v):
                _acc(out, w, c * c12)
    return NCPoly._wrap(out)


# ---------------------------------------------------------------- circ and *_hbar on A-words

def _circ_letters(x: int, y: int):
    if x == H_LETTER or y == H_LETTER:
        return HBAR, (x if y == H_LETTER else y)
    return ONE, x + y


def circ(p: NCPoly, q: NCPoly) -> NCPoly:
    a, b = p.a_view(), q.a_view()
    for aw in list(a) + list(b):
        if len(aw) != 1:
            raise NotDepthOne(f"{aw} is not a single letter")
    out: dict = {}
    for (x,), c1 in a.items():
        for (y,), c2 in b.items():
            h, z = _circ_letters(x, y)
            _acc(out, (z,), c1 * c2 * h)
    return _apoly_to_ncpoly(out)


@lru_cache(maxsize=None)
def _harm_awords(u: tuple, v: tuple):
    if not u:
        return ((v, ONE),)
    if not v:
        return ((u, ONE),)
    out: dict = {}
    x, y = u[-1], v[-1]
    for w, c in _harm_awords(u[:-1], v):
        _acc(out, w + (x,), c)
    for w, c in _harm_awords(u, v[:-1]):
        _acc(out, w + (y,), c)
    h, z = _circ_letters(x, y)
    for w, c in _harm_awords(u[:-1], v[:-1]):
        _acc(out, w + (z,), c * h)
    return tuple(out.items())


def _harm_apoly(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, c1 in a.items():
        for v, c2 in b.items():
            c12 = c1 * c2
            for w, c in _harm_awords(u, v):
                _acc(out, w, c * c12)
    return out


def _shuf_apoly(a: dict, b: dict) -> dict:
    out: dict = {}
    for u, c1 in a.items():
        wu = aword_to_word(u)
        for v, c2 in b.items():
            wv = aword_to_word(v)
            c12 = c1 * c2
            nh = u.count(H_LETTER) + v.count(H_LETTER)
            for w, c in _sh_words(wu, wv):
                aw, mh = word_to_aword(w)
                _acc(out, aw, c.shift(nh).div_hbar_power(mh) * c12)
    return out


def qharm(p: NCPoly, q: NCPoly) -> NCPoly:
    p, q = NCPoly.lift(p), NCPoly.lift(q)
    return _apoly_to_ncpoly(_harm_apoly(p.a_view(), q.a_view()))


PRODUCTS = {"star": qharm, "sh": qshuf}
_APRODUCTS = {"star": _harm_apoly, "sh": _shuf_apoly}


def qprod(mode: str, p, q) -> NCPoly:
    return PRODUCTS[mode](p, q)


# ---------------------------------------------------------------- involutions

@lru_cache(maxsize=None)
def _psi_letter(x: int, mode: str):
    if x == H_LETTER:
        return (((H_LETTER,), ONE),)
    sign = (-1) ** x
    if mode == "star":
        return (((x,), HPoly.lift(sign)),)
    # b(-a-hbar)^k = (-1)^k sum_j C(k,j) hbar^(k-j) b a^j ; the j = 0 word b is hbar^(k-1) H
    out = [((j,), HPoly.monomial(x - j, sign * comb(x, j))) for j in range(1, x + 1)]
    out.append(((H_LETTER,), HPoly.monomial(x - 1, sign)))
    return tuple(out)


@lru_cache(maxsize=None)
def _psi_aword(aw: tuple, mode: str):
    acc = {(): ONE}
    for x in reversed(aw):
        new: dict = {}
        img = _psi_letter(x, mode)
        for w, c in acc.items():
            for l, c2 in img:
                _acc(new, w + l, c * c2)
        acc = new
    return tuple(acc.items())


def _psi_apoly(a: dict, mode: str) -> dict:
    out: dict = {}
    for aw, c in a.items():
        for w, c2 in _psi_aword(aw, mode):
            _acc(out, w, c * c2)
    return out


def psi_q(p: NCPoly, mode: str) -> NCPoly:
    return _apoly_to_ncpoly(_psi_apoly(NCPoly.lift(p).a_view(), mode))


def psi_star(p: NCPoly) -> NCPoly:
    return psi_q(p, "star")


def psi_sh(p: NCPoly) -> NCPoly:
    return psi_q(p, "sh")


# ---------------------------------------------------------------- symmetrizer

@lru_cache(maxsize=None)
def _wS_aword(aw: tuple, mode: str):
    prod = _APRODUCTS[mode]
    out: dict = {}
    for i in range(len(aw) + 1):
        left = {aw[:i]: ONE}
        right = dict(_psi_aword(aw[i:], mode))
        for w, c in prod(left, right).items():
            _acc(out, w, c)
    return tuple(out.items())


def _wS_apoly(a: dict, mode: str) -> dict:
    out: dict = {}
    for aw, c in a.items():
        for w, c2 in _wS_aword(aw, mode):
            _acc(out, w, c * c2)
    return out


def wS_q(p: NCPoly, mode: str) -> NCPoly:
    return _apoly_to_ncpoly(_wS_apoly(NCPoly.lift(p).a_view(), mode))


# ---------------------------------------------------------------- iota

def iota(p: NCPoly) -> ClassicalPoly:
    out = {}
    for aw, c in NCPoly.lift(p).a_view().items():
        if H_LETTER in aw:
            continue
        x = c.const_term()
        if x:
            out[aw] = x
    return from_indices(out)


# ---------------------------------------------------------------- E-words

@lru_cache(maxsize=None)
def E_ones(m: int) -> NCPoly:
    g1, e1 = g(1), e(1)
    gpow = [ONE_POLY]
    epow = [ONE_POLY]
    for _ in range(m):
        gpow.append(qshuf(gpow[-1], g1))
        epow.append(qshuf(epow[-1], e1))
    total = ZERO_POLY
    for j in range(m + 1):
        total = total + qshuf(gpow[j], epow[m - j])
    return total.scale(Fraction(1, factorial(m + 1)))


@lru_cache(maxsize=None)
def E_index(k: tuple) -> NCPoly:
    k = tuple(k)
    if not k:
        return ONE_POLY
    s0, blocks = e_shape(k)
    out = E_ones(s0)
    for t, s in blocks:
        out = out * e_single(t + 2) * E_ones(s)
    return out


def E_degree(k) -> int:
    """E_k is homogeneous of degree wt + dep when a, b and hbar all have degree 1."""
    return sum(k) + len(k)


@dataclass
class EBasisDecomp:
    coeffs: dict = field(default_factory=dict)
    residual: NCPoly = ZERO_POLY

    @property
    def ok(self) -> bool:
        return self.residual.is_zero()

    def at_hbar_zero(self) -> dict:
        return {k: c.const_term() for k, c in self.coeffs.items() if c.const_term()}


def _homogeneous_parts(p: NCPoly) -> dict:
    parts: dict = {}
    for w, c in p.terms.items():
        for i, x in enumerate(c.c):
            if x:
                parts.setdefault(len(w) + i, []).append((w, i, x))
    return parts


def decompose_E(p: NCPoly, wt_max=None, dep_max=None) -> EBasisDecomp:
    p = NCPoly.lift(p)
    p.a_view()  # raises NotInSubalgebra
    coeffs: dict = {}
    for D, entries in sorted(_homogeneous_parts(p).items()):
        cands = [k for k in indices(D) if E_degree(k) <= D
                 and (wt_max is None or sum(k) <= wt_max)
                 and (dep_max is None or len(k) <= dep_max)]
        if not cands:
            continue
        rows: dict = {}
        cols = []
        for k in cands:
            shift = D - E_degree(k)
            col = {}
            for w, c in E_index(k).terms.items():
                for i, x in enumerate(c.c):
                    if x:
                        col[(w, i + shift)] = x
            cols.append(col)
            for key in col:
                rows.setdefault(key, len(rows))
        for w, i, x in entries:
            rows.setdefault((w, i), len(rows))
        ncols = len(cols)
        mat = [[QQ(0)] * (ncols + 1) for _ in range(len(rows))]
        for j, col in enumerate(cols):
            for key, x in col.items():
                mat[rows[key]][j] = QQ(x.numerator, x.denominator) if isinstance(x, Fraction) else QQ(x)
        for w, i, x in entries:
            x = Fraction(x)
            mat[rows[(w, i)]][ncols] = QQ(x.numerator, x.denominator)
        dm = DomainMatrix(mat, (len(rows), ncols + 1), QQ)
        red, pivots = dm.rref()
        red = red.to_Matrix()
        for r, pc in enumerate(pivots):
            if pc == ncols:
                break  # inconsistent; the residual will show it
            val = red[r, ncols]
            if val != 0:
                k = cands[pc]
                frac = Fraction(int(val.p), int(val.q))
                coeffs[k] = coeffs.get(k, ZERO) + HPoly.monomial(D - E_degree(k), frac)
    recon = ZERO_POLY
    for k, c in coeffs.items():
        recon = recon + E_index(k).scale(c)
    coeffs = {k: c for k, c in coeffs.items() if c}
    return EBasisDecomp(coeffs=coeffs, residual=p - recon)


def E_combination(coeffs: dict) -> NCPoly:
    out = ZERO_POLY
    for k, c in coeffs.items():
        out = out + E_index(tuple(k)).scale(c)
    return out
