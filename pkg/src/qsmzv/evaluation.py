"""Numerical evaluation of q-words.

Exact mode works with Fractions throughout (rational q).  Float mode uses
64-bit floats with compensated running sums.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from math import comb

from .coeffring import as_rational
from .errors import MissingSqrtQ, NotConvergentInput
from .freealg import H_LETTER, NCPoly, membership
from .qops import E_index, _psi_letter, wS_q
from .freealg import g as g_word


@dataclass
class QContext:
    q: object = Fraction(1, 2)
    mode: str = "exact"
    sqrt_q: object = None
    tail_tol: float = 1e-12
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.mode == "exact":
            self.q = as_rational(self.q)
            if self.sqrt_q is not None:
                self.sqrt_q = as_rational(self.sqrt_q)
                if self.sqrt_q ** 2 != self.q:
                    raise ValueError("sqrt_q**2 != q")
        else:
            self.q = float(self.q)
            if self.sqrt_q is not None:
                self.sqrt_q = float(self.sqrt_q)
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0, 1)")

    @classmethod
    def parse(cls, text: str, **kw) -> "QContext":
        """'1/2' or '3' gives exact mode, '0.999' or '1e-3' gives float mode."""
        text = str(text).strip()
        if any(ch in text for ch in ".eE"):
            return cls(q=float(text), mode="float", **kw)
        q = Fraction(text)
        ctx_kw = dict(kw)
        if "sqrt_q" not in ctx_kw:
            r = _rational_sqrt(q)
            if r is not None:
                ctx_kw["sqrt_q"] = r
        return cls(q=q, mode="exact", **ctx_kw)

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    @property
    def hbar(self):
        return 1 - self.q

    def num(self, x):
        return Fraction(x) if self.exact else float(x)

    def coeff(self, c):
        """Value of an HPoly at hbar = 1 - q."""
        v = c.evaluate(self.hbar)
        return v if self.exact else float(v)


def _rational_sqrt(q: Fraction):
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


@dataclass
class EvalResult:
    value: object
    tail_bound: float = 0.0
    M_used: int = 0


class _Sum:
    """Neumaier compensated accumulator (exact values pass straight through)."""

    __slots__ = ("s", "c", "exact")

    def __init__(self, exact):
        self.s = Fraction(0) if exact else 0.0
        self.c = 0.0
        self.exact = exact

    def add(self, x):
        if self.exact:
            self.s += x
            return
        t = self.s + x
        if abs(self.s) >= abs(x):
            self.c += (self.s - t) + x
        else:
            self.c += (x - t) + self.s
        self.s = t

    @property
    def value(self):
        return self.s if self.exact else self.s + self.c


def qint(m: int, ctx: QContext):
    q = ctx.q
    if ctx.exact:
        return sum((q ** i for i in range(m)), Fraction(0))
    return (1 - q ** m) / (1 - q)


def _letter_values(x: int, M: int, ctx: QContext):
    """[F(m; letter) for m in 0..M-1] (index 0 unused), cached per context."""
    key = ("F", x)
    vals = ctx._cache.get(key)
    if vals is not None and len(vals) >= M:
        return vals
    q = ctx.q
    out = [ctx.num(0)]
    if x == H_LETTER:
        out.extend([ctx.hbar] * (M - 1))
    else:
        qm = ctx.num(1)
        qi = ctx.num(0)
        for m in range(1, M):
            qi = qi + qm          # [m]
            qm = qm * q           # q^m
            out.append(qm ** x / qi ** x)
    ctx._cache[key] = out
    return out


def F(m: int, u, ctx: QContext):
    """F_q(m; u) for m >= 1; u is an A-letter or a depth-one NCPoly."""
    if isinstance(u, int):
        return _letter_values(u, m + 1, ctx)[m]
    total = ctx.num(0)
    for aw, c in NCPoly.lift(u).a_view().items():
        if len(aw) != 1:
            raise ValueError("F needs a depth-one element")
        total += ctx.coeff(c) * _letter_values(aw[0], m + 1, ctx)[m]
    return total


def _psi_letter_dict(x: int, mode: str):
    return {aw[0]: c for aw, c in _psi_letter(x, mode)}


def F_ext(m: int, u, mode: str, ctx: QContext):
    """F extended to nonzero m by F(-m; u) = F(m; psi^mode(u))."""
    if m == 0:
        raise ValueError("F_ext is undefined at m = 0")
    if m > 0:
        return F(m, u, ctx)
    if isinstance(u, int):
        items = {(u,): 1}
    else:
        items = {aw: ctx.coeff(c) for aw, c in NCPoly.lift(u).a_view().items()}
    total = ctx.num(0)
    for (x,), c in items.items():
        for y, c2 in _psi_letter_dict(x, mode).items():
            total += c * ctx.coeff(c2) * _letter_values(y, -m + 1, ctx)[-m]
    return total


# ---------------------------------------------------------------- truncated sums

def _chain(aw: tuple, M: int, ctx: QContext):
    """ends[m] = sum over 0 < m_1 < ... < m_r = m of the product, for m < M."""
    key = ("chain", aw)
    hit = ctx._cache.get(key)
    if hit is not None and len(hit) >= M:
        return hit
    level = None
    for x in aw:
        vals = _letter_values(x, M, ctx)
        if level is None:
            level = [ctx.num(0)] + [vals[m] for m in range(1, M)]
            continue
        run = _Sum(ctx.exact)
        new = [ctx.num(0)] * M
        for m in range(1, M):
            new[m] = vals[m] * run.value
            run.add(level[m])
        level = new
    ctx._cache[key] = level
    return level


def _Z_aword(aw: tuple, M: int, ctx: QContext):
    if not aw:
        return ctx.num(1)
    ends = _chain(aw, M, ctx)
    acc = _Sum(ctx.exact)
    for m in range(1, M):
        acc.add(ends[m])
    return acc.value


def ZqM(w, M: int, ctx: QContext):
    total = _Sum(ctx.exact)
    for aw, c in NCPoly.lift(w).a_view().items():
        total.add(ctx.coeff(c) * _Z_aword(aw, M, ctx))
    return total.value


def _tail_sum(M: int, r: int, x: float) -> float:
    """Upper bound for sum_{n >= M} C(n-1, r-1) x^n."""
    if x <= 0:
        return 0.0
    n = max(M, r)
    acc = 0.0
    logx = math.log(x)
    for _ in range(1_000_000):
        t = math.exp(math.lgamma(n) - math.lgamma(r) - math.lgamma(n - r + 1) + n * logx)
        ratio = x * n / (n - r + 1)
        if ratio < 1:
            return acc + t / (1 - ratio)
        acc += t
        n += 1
    return math.inf


def tail_bound(w: NCPoly, M: int, ctx: QContext) -> float:
    """Certified bound on |Z_q(w) - Z_{q,M}(w)| for w in the convergent subspace.

    Uses F(m; g_k) <= q^(k m) <= 1 and F(m; H) = 1 - q.
    """
    q = float(ctx.q)
    total = 0.0
    for aw, c in w.a_view().items():
        if not aw:
            continue
        k = aw[-1]
        K = abs(float(ctx.coeff(c))) * (1 - q) ** aw.count(H_LETTER)
        total += K * _tail_sum(M, len(aw), q ** k)
    return total


def Zq(w, ctx: QContext, M_start: int = 16, M_max: int = 1 << 22) -> EvalResult:
    w = NCPoly.lift(w)
    if not membership(w, "Hhat0"):
        raise NotConvergentInput(f"{w} is not in the convergent subspace")
    M = M_start
    bound = tail_bound(w, M, ctx)
    while bound >= ctx.tail_tol:
        M *= 2
        if M > M_max:
            raise NotConvergentInput(f"tail bound {bound} still above tolerance at M={M_max}")
        bound = tail_bound(w, M, ctx)
    return EvalResult(ZqM(w, M, ctx), bound, M)


def ZSqM(w, M: int, mode: str, ctx: QContext):
    return ZqM(wS_q(NCPoly.lift(w), mode), M, ctx)


def kontsevich_ZS_star(w, M: int, ctx: QContext):
    """Single ordered sum over 1 < 2 < ... < M-1 < -(M-1) < ... < -1."""
    order = list(range(1, M)) + list(range(-(M - 1), 0))
    total = _Sum(ctx.exact)
    for aw, c in NCPoly.lift(w).a_view().items():
        if not aw:
            total.add(ctx.coeff(c))
            continue
        level = None
        for x in aw:
            vals = [F_ext(m, x, "star", ctx) for m in order]
            if level is None:
                level = vals
                continue
            run = _Sum(ctx.exact)
            new = []
            for i, v in enumerate(vals):
                new.append(v * run.value)
                run.add(level[i])
            level = new
        s = _Sum(ctx.exact)
        for v in level:
            s.add(v)
        total.add(ctx.coeff(c) * s.value)
    return total.value


def _positive_tuples(n: int, bound: int):
    """Tuples of n positive integers with sum < bound."""
    if n == 0:
        yield ()
        return
    for first in range(1, bound - n + 1):
        for rest in _positive_tuples(n - 1, bound - first):
            yield (first,) + rest


def _T_awords(u: tuple, v: tuple, w: tuple, M: int, ctx: QContext):
    if not u and not v and not w:
        return ctx.num(1)
    blocks = [u, v, w + (None,)]
    slots = [(t, j) for t in range(3) for j in range(len(blocks[t]))]
    n = len(slots)
    total = _Sum(ctx.exact)
    for neg in range(n):
        for pos in _positive_tuples(n - 1, M):
            ls = list(pos[:neg]) + [-sum(pos)] + list(pos[neg:])
            vals = {}
            it = iter(ls)
            for t in range(3):
                vals[t] = [next(it) for _ in blocks[t]]
            term = ctx.num(1)
            s1 = sum(vals[0])
            s2 = sum(vals[1])
            for t, base in ((0, 0), (1, 0), (2, s1 + s2)):
                run = base
                for letter, l in zip(blocks[t], vals[t]):
                    run += l
                    if letter is None:
                        continue
                    term *= F_ext(run, letter, "sh", ctx)
            total.add(term)
    return total.value


def T_qM(u, v, w, M: int, ctx: QContext):
    total = _Sum(ctx.exact)
    A = [NCPoly.lift(x).a_view() for x in (u, v, w)]
    for (a1, c1), (a2, c2), (a3, c3) in iproduct(A[0].items(), A[1].items(), A[2].items()):
        c = ctx.coeff(c1) * ctx.coeff(c2) * ctx.coeff(c3)
        total.add(c * _T_awords(a1, a2, a3, M, ctx))
    return total.value


def Lq_tseries(w, Tmax: int, ctx: QContext):
    out = [ctx.num(0)] * Tmax
    for aw, c in NCPoly.lift(w).a_view().items():
        cv = ctx.coeff(c)
        if not aw:
            out[0] += cv
            continue
        ends = _chain(aw, Tmax, ctx)
        for m in range(1, Tmax):
            out[m] += cv * ends[m]
    return out


def B_bound(alphas, betas, M: int, ctx: QContext):
    if ctx.sqrt_q is None:
        raise MissingSqrtQ("B_bound needs sqrt(q) in the context")
    alphas, betas = list(alphas), list(betas)
    if len(alphas) != len(betas) or not alphas:
        raise ValueError("alphas and betas must have equal positive length")
    s = ctx.sqrt_q
    hb = ctx.hbar

    def rec(j, partial):
        if j == len(alphas):
            return ctx.num(1)
        acc = ctx.num(0)
        a, b = alphas[j], betas[j]
        for l in range(1, M):
            L = partial + l
            term = comb(l, a) * hb ** a * s ** l / ctx.num(L) ** (b + 1)
            acc += term * rec(j + 1, L)
        return acc

    return rec(0, 0)


def basis_monomial(alphas, betas) -> tuple:
    """The A-word H^a1 g_(b1+1) ... H^ar g_(br+1)."""
    aw = ()
    for a, b in zip(alphas, betas):
        aw += (H_LETTER,) * a + (b + 1,)
    return aw


def basis_exponents(aw: tuple):
    """Inverse of basis_monomial for A-words ending in some g_k."""
    alphas, betas = [], []
    run = 0
    for x in aw:
        if x == H_LETTER:
            run += 1
        else:
            alphas.append(run)
            betas.append(x - 1)
            run = 0
    if run:
        raise ValueError("A-word does not end in a g letter")
    return alphas, betas


def ZqS_star(k, ctx: QContext) -> EvalResult:
    return Zq(wS_q(g_word(tuple(k)), "star"), ctx)


def ZqS_sh(k, ctx: QContext) -> EvalResult:
    return Zq(wS_q(E_index(tuple(k)), "sh"), ctx)


def limit_probe(w, grid, tail_tol: float = 1e-12):
    w = NCPoly.lift(w)
    in_n = membership(w, "n")
    r = max((len(aw) for aw in w.a_view()), default=0)
    rows = []
    for qv in grid:
        ctx = QContext(q=float(qv), mode="float", tail_tol=tail_tol)
        res = Zq(w, ctx)
        row = {"q": float(qv), "value": float(res.value), "tail_bound": res.tail_bound,
               "M_used": res.M_used}
        if in_n:
            denom = (1 - ctx.q) * (-math.log(1 - ctx.q)) ** r
            row["ratio"] = float(res.value) / denom
        rows.append(row)
    return rows


# ---------------------------------------------------------------- double-sum forms

def _ends_from_combos(combos, M, ctx):
    """Chain sums where each slot carries a linear combination {letter: coeff}."""
    level = None
    for combo in combos:
        vals = [ctx.num(0)] * M
        for x, c in combo.items():
            lv = _letter_values(x, M, ctx)
            for m in range(1, M):
                vals[m] += c * lv[m]
        if level is None:
            level = vals
            continue
        run = _Sum(ctx.exact)
        new = [ctx.num(0)] * M
        for m in range(1, M):
            new[m] = vals[m] * run.value
            run.add(level[m])
        level = new
    return level


def ZSqM_double_sum(w, M: int, mode: str, ctx: QContext):
    """Symmetrized truncated sum written as sum_i (increasing part) x (decreasing part).

    For mode "sh" the two innermost variables satisfy m_i + m_(i+1) < M.
    """
    total = _Sum(ctx.exact)
    for aw, c in NCPoly.lift(w).a_view().items():
        r = len(aw)
        acc = _Sum(ctx.exact)
        for i in range(r + 1):
            left = _ends_from_combos([{x: 1} for x in aw[:i]], M, ctx) if i else None
            right_combos = [{y: ctx.coeff(cc) for y, cc in _psi_letter_dict(x, mode).items()}
                            for x in reversed(aw[i:])]
            right = _ends_from_combos(right_combos, M, ctx) if i < r else None
            lv = [ctx.num(1)] + [ctx.num(0)] * (M - 1) if left is None else left
            rv = [ctx.num(1)] + [ctx.num(0)] * (M - 1) if right is None else right
            lo_l = 0 if left is None else 1
            lo_r = 0 if right is None else 1
            for a in range(lo_l, M):
                if not lv[a]:
                    continue
                for b in range(lo_r, M):
                    if mode == "sh" and a + b >= M:
                        break
                    acc.add(lv[a] * rv[b])
        total.add(ctx.coeff(c) * acc.value)
    return total.value


def truncated_shuffle_sum(u, v, M: int, ctx: QContext):
    """sum over increasing m's and n's with m_r + n_s < M of the two products."""
    total = _Sum(ctx.exact)
    for aw1, c1 in NCPoly.lift(u).a_view().items():
        for aw2, c2 in NCPoly.lift(v).a_view().items():
            l1 = _chain(aw1, M, ctx) if aw1 else [ctx.num(1)] + [ctx.num(0)] * (M - 1)
            l2 = _chain(aw2, M, ctx) if aw2 else [ctx.num(1)] + [ctx.num(0)] * (M - 1)
            acc = _Sum(ctx.exact)
            for a in range(0 if not aw1 else 1, M):
                for b in range(0 if not aw2 else 1, M - a):
                    acc.add(l1[a] * l2[b])
            total.add(ctx.coeff(c1) * ctx.coeff(c2) * acc.value)
    return total.value
