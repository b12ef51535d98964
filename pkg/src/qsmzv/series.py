"""Truncated power series in commuting variables with NCPoly coefficients,
and the catalog of generating-series identities.

A series carries a sorted tuple of variable names and an ``order``; only
monomials of total degree < order are kept.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .coeffring import HBAR, ONE, HPoly
from .errors import ArityMismatch, BadU, NonInvertibleConstant, NonzeroConstantTerm, UnknownIdentity
from .freealg import (A_WORD, B_WORD, H, ONE_POLY, ZERO_POLY, NCPoly, e, e_single, g,
                      membership, offending_terms)
from .qops import E_index, E_ones, psi_sh, qharm, qshuf
from .report import Report


class HSeries:
    __slots__ = ("vars", "order", "coeffs")

    def __init__(self, vars=(), order=1, coeffs=None):
        self.vars = tuple(vars)
        self.order = order
        clean = {}
        if coeffs:
            for ex, p in coeffs.items():
                if sum(ex) < order:
                    p = NCPoly.lift(p)
                    if p:
                        clean[tuple(ex)] = p
        self.coeffs = clean

    # -- construction

    @staticmethod
    def const(p, order, vars=()) -> "HSeries":
        return HSeries(vars, order, {(0,) * len(vars): NCPoly.lift(p)})

    @staticmethod
    def var(name, order, coeff=ONE_POLY, power=1) -> "HSeries":
        return HSeries((name,), order, {(power,): NCPoly.lift(coeff)})

    @staticmethod
    def from_list(name, coeffs, order=None) -> "HSeries":
        order = len(coeffs) if order is None else order
        return HSeries((name,), order, {(i,): c for i, c in enumerate(coeffs)})

    # -- helpers

    def coefficient(self, *ex) -> NCPoly:
        if len(ex) == 1 and isinstance(ex[0], tuple):
            ex = ex[0]
        return self.coeffs.get(tuple(ex), ZERO_POLY)

    def items(self):
        return sorted(self.coeffs.items())

    def is_zero(self):
        return not self.coeffs

    def with_vars(self, vars, order=None) -> "HSeries":
        """Re-index onto a superset of variables (and possibly lower order)."""
        vars = tuple(vars)
        order = self.order if order is None else order
        pos = [vars.index(v) for v in self.vars]
        out = {}
        for ex, p in self.coeffs.items():
            if sum(ex) >= order:
                continue
            new = [0] * len(vars)
            for i, k in zip(pos, ex):
                new[i] = k
            out[tuple(new)] = p
        s = HSeries(vars, order)
        s.coeffs = out
        return s

    def truncate(self, order) -> "HSeries":
        return self.with_vars(self.vars, min(order, self.order))

    @staticmethod
    def _align(a, b):
        if not isinstance(a, HSeries):
            a = HSeries.const(a, b.order)
        if not isinstance(b, HSeries):
            b = HSeries.const(b, a.order)
        vars = tuple(sorted(set(a.vars) | set(b.vars)))
        order = min(a.order, b.order)
        if a.vars != vars or a.order != order:
            a = a.with_vars(vars, order)
        if b.vars != vars or b.order != order:
            b = b.with_vars(vars, order)
        return a, b

    # -- ring operations

    def __add__(self, other):
        a, b = HSeries._align(self, other)
        out = dict(a.coeffs)
        for ex, p in b.coeffs.items():
            out[ex] = out[ex] + p if ex in out else p
        return HSeries(a.vars, a.order, out)

    __radd__ = __add__

    def __neg__(self):
        s = HSeries(self.vars, self.order)
        s.coeffs = {ex: -p for ex, p in self.coeffs.items()}
        return s

    def __sub__(self, other):
        return self + (-other if isinstance(other, HSeries) else -NCPoly.lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def bilinear(self, other, op) -> "HSeries":
        a, b = HSeries._align(self, other)
        out: dict = {}
        n = len(a.vars)
        for e1, p in a.coeffs.items():
            d1 = sum(e1)
            for e2, q in b.coeffs.items():
                if d1 + sum(e2) >= a.order:
                    continue
                ex = tuple(e1[i] + e2[i] for i in range(n))
                r = op(p, q)
                out[ex] = out[ex] + r if ex in out else r
        return HSeries(a.vars, a.order, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, HPoly)):
            return self.scale(other)
        return self.bilinear(other, lambda p, q: p * q)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, HPoly)):
            return self.scale(other)
        return HSeries._align(other, self)[0] * self

    def scale(self, c) -> "HSeries":
        return HSeries(self.vars, self.order, {ex: p.scale(c) for ex, p in self.coeffs.items()})

    def map(self, f) -> "HSeries":
        return HSeries(self.vars, self.order, {ex: f(p) for ex, p in self.coeffs.items()})

    def shuffle(self, other) -> "HSeries":
        return self.bilinear(other, qshuf)

    def harm(self, other) -> "HSeries":
        return self.bilinear(other, qharm)

    def __eq__(self, other):
        if not isinstance(other, HSeries):
            other = HSeries.const(other, self.order, self.vars)
        return (self - other).is_zero()

    def __repr__(self):
        body = " + ".join(f"[{p}]*{_mono(self.vars, ex)}" for ex, p in self.items())
        return f"HSeries(order={self.order}, {body or '0'})"

    # -- constant term / inverses

    def const_term(self) -> NCPoly:
        return self.coeffs.get((0,) * len(self.vars), ZERO_POLY)

    def without_const(self) -> "HSeries":
        s = HSeries(self.vars, self.order)
        s.coeffs = {ex: p for ex, p in self.coeffs.items() if any(ex)}
        return s

    def power(self, n: int) -> "HSeries":
        out = HSeries.const(ONE_POLY, self.order, self.vars)
        for _ in range(n):
            out = out * self
        return out

    def div_monomial(self, ex) -> "HSeries":
        """Exact division by X^ex; lowers the order by deg(ex)."""
        ex = tuple(ex)
        d = sum(ex)
        out = {}
        for e1, p in self.coeffs.items():
            if any(e1[i] < ex[i] for i in range(len(ex))):
                raise ValueError(f"series not divisible by monomial {ex}: term at {e1}")
            out[tuple(e1[i] - ex[i] for i in range(len(ex)))] = p
        return HSeries(self.vars, self.order - d, out)

    def subs(self, mapping: dict) -> "HSeries":
        """Substitute variables by scalar series without constant term."""
        for name, S in mapping.items():
            for ex, p in S.coeffs.items():
                if not any(ex):
                    raise ValueError("substituted series must have zero constant term")
                if set(p.terms) - {""}:
                    raise ValueError("substituted series must have scalar coefficients")
        keep = [v for v in self.vars if v not in mapping]
        allvars = set(keep)
        for S in mapping.values():
            allvars |= set(S.vars)
        allvars = tuple(sorted(allvars))
        order = min([self.order] + [S.order for S in mapping.values()])
        powers: dict = {}

        def pw(name, k):
            key = (name, k)
            if key not in powers:
                S = mapping[name].with_vars(allvars, order)
                powers[key] = S.power(k)
            return powers[key]

        total = HSeries(allvars, order)
        for ex, p in self.coeffs.items():
            term = HSeries.const(p, order, allvars)
            mono = {}
            for v, k in zip(self.vars, ex):
                if v in mapping:
                    if k:
                        term = term * pw(v, k)
                else:
                    mono[v] = k
            if mono:
                shift = tuple(mono.get(v, 0) for v in allvars)
                moved = {}
                for e1, q in term.coeffs.items():
                    e2 = tuple(a + b for a, b in zip(e1, shift))
                    if sum(e2) < order:
                        moved[e2] = q
                term = HSeries(allvars, order, moved)
            total = total + term
        return total


def _mono(vars, ex):
    parts = [f"{v}^{k}" if k > 1 else v for v, k in zip(vars, ex) if k]
    return "*".join(parts) or "1"


def _unit(p: NCPoly):
    c = p.terms.get("")
    if c is None or set(p.terms) != {""} or not c.is_constant() or not c.const_term():
        return None
    return Fraction(c.const_term())


def geom_inverse(f: HSeries) -> HSeries:
    c0 = _unit(f.const_term())
    if c0 is None:
        raise NonInvertibleConstant(f"constant term {f.const_term()} is not a nonzero rational")
    inv0 = 1 / c0
    rest = f.without_const().scale(-inv0)  # f = c0 (1 - rest)
    out = HSeries.const(ONE_POLY, f.order, f.vars)
    pw = out
    for _ in range(1, f.order):
        pw = pw * rest
        if pw.is_zero():
            break
        out = out + pw
    return out.scale(inv0)


def geo(S: HSeries) -> HSeries:
    """1 / (1 - S) for S without constant term."""
    return geom_inverse(HSeries.const(ONE_POLY, S.order, S.vars) - S)


def exp_prod(f: HSeries, mode: str, N: int | None = None) -> HSeries:
    if N is not None:
        f = f.truncate(N)
    if not f.const_term().is_zero():
        raise NonzeroConstantTerm("exp needs a series without constant term")
    op = qharm if mode == "star" else qshuf
    out = HSeries.const(ONE_POLY, f.order, f.vars)
    pw = out
    for n in range(1, f.order):
        pw = pw.bilinear(f, op)
        if pw.is_zero():
            break
        out = out + pw.scale(Fraction(1, factorial(n)))
    return out


# ---------------------------------------------------------------- named series

def X(order, name="X", coeff=ONE_POLY):
    return HSeries.var(name, order, coeff)


def one(order, vars=()):
    return HSeries.const(ONE_POLY, order, vars)


def R_series(N: int, var: str = "X") -> HSeries:
    return HSeries((var,), N, {(n,): (H ** (n - 1)).scale(Fraction(1, factorial(n)))
                               for n in range(1, N)})


def R_over_X(N: int, var: str = "X") -> HSeries:
    return HSeries((var,), N, {(n - 1,): (H ** (n - 1)).scale(Fraction(1, factorial(n)))
                               for n in range(1, N + 1)})


def E_series(N: int, var: str = "X") -> HSeries:
    """E(X) from the closed form (1 - R(X) g_1)^(-1) R(X)/X."""
    return geo(R_series(N, var) * g(1)) * R_over_X(N, var)


def E_series_from_ones(N: int, var: str = "X") -> HSeries:
    return HSeries((var,), N, {(m,): E_ones(m) for m in range(N)})


def e0_series(N: int, var: str = "X") -> HSeries:
    return HSeries((var,), N, {(k - 2,): e_single(k) for k in range(2, N + 2)})


def exp_hb(N: int, var: str = "X") -> HSeries:
    return HSeries((var,), N, {(n,): (H ** n).scale(Fraction(1, factorial(n))) for n in range(N)})


def neg_var(S: HSeries, var: str) -> HSeries:
    return S.subs({var: X(S.order, var).scale(-1)})


def _check_U(U: HSeries):
    if not U.const_term().is_zero():
        raise BadU("U must have zero constant term")
    for p in U.coeffs.values():
        if any("a" in w for w in p.terms):
            raise BadU("coefficients of U must be polynomials in b")


def rho_def(w, U: HSeries) -> HSeries:
    """((1 - U g_1)^(-1) sh w)(1 - U g_1)."""
    _check_U(U)
    G = one(U.order, U.vars) - U * g(1)
    return geom_inverse(G).shuffle(w) * G


def rho_letter_images(U: HSeries):
    _check_U(U)
    G = one(U.order, U.vars) - U * g(1)
    Ginv = geom_inverse(G)
    img_a = Ginv * (one(U.order, U.vars) + U.scale(HBAR) * B_WORD) * A_WORD
    img_b = Ginv * B_WORD * G
    return img_a, img_b


def rho_U(w, U: HSeries, N: int | None = None) -> HSeries:
    """rho_U via the homomorphism property and the images of a and b."""
    if N is not None:
        U = U.truncate(N)
    img_a, img_b = rho_letter_images(U)
    cache = {"": one(U.order, U.vars)}

    def word_image(word):
        if word not in cache:
            prev = word_image(word[:-1])
            cache[word] = prev * (img_a if word[-1] == "a" else img_b)
        return cache[word]

    out = HSeries(U.vars, U.order)
    for word, c in NCPoly.lift(w).terms.items():
        out = out + word_image(word).scale(c)
    return out


def K_sh(w, middle, w2) -> NCPoly:
    """sum_i w u_1..u_i sh psi^sh(u_{i+1}..u_r w2), linear in the middle argument."""
    from .freealg import aword_poly
    w, w2 = NCPoly.lift(w), NCPoly.lift(w2)
    out = ZERO_POLY
    for aw, c in NCPoly.lift(middle).a_view().items():
        for i in range(len(aw) + 1):
            left = w * aword_poly(aw[:i])
            right = psi_sh(aword_poly(aw[i:]) * w2)
            out = out + qshuf(left, right).scale(c)
    return out


# Xi / partial / Lambda on series arguments

def Xi(A, B):
    E1 = E_ones(1)
    return _ser(A).shuffle(_ser(B) * E1) + (_ser(A) * E1).shuffle(_ser(B))


def partial(A, B):
    A, B = _ser(A), _ser(B)
    return (A * g(1)).shuffle(B) - A.shuffle(B) * g(1)


def Lambda(Yname, A, B, order):
    RY = R_series(order, Yname)
    G = one(order, (Yname,)) - RY * g(1)
    return (_ser(A) * geom_inverse(G)).shuffle(_ser(B)) * G


def _ser(A):
    if isinstance(A, HSeries):
        return A
    return HSeries.const(A, 10 ** 6)


# ---------------------------------------------------------------- identity catalog

DEFAULT_WORDS = {
    "1": ONE_POLY,
    "g1": g(1),
    "H": H,
    "g2": g(2),
    "e2": e(2),
    "g1*H": g(1) * H,
    "g3": g(3),
    "a": A_WORD,
}

DEFAULT_PAIRS = [("1", "1"), ("g1", "1"), ("1", "H"), ("g1", "H"), ("H", "g2"),
                 ("g2", "g1"), ("e2", "g1*H"), ("g3", "1"), ("a", "g1")]
ADMISSIBLE_KS = [(2,), (3,), (1, 2), (2, 2)]


def _pairs_in_subalgebra():
    from .freealg import in_subalgebra
    return [(a, b) for a, b in DEFAULT_PAIRS
            if in_subalgebra(DEFAULT_WORDS[a]) and in_subalgebra(DEFAULT_WORDS[b])]


def _cmp(lhs: HSeries, rhs: HSeries, mode: str = "eq"):
    """Return (ok, detail)."""
    diff = lhs - rhs
    checked = len(set(lhs.coeffs) | set(rhs.coeffs))
    for ex, p in diff.items():
        if mode == "eq":
            return False, f"coefficient {_mono(diff.vars, ex)} differs by {p}"
        if not membership(p, "n"):
            bad = offending_terms(p, "n")
            return False, f"coefficient {_mono(diff.vars, ex)} not in n: {bad[:3]}"
    what = "equal" if mode == "eq" else "congruent mod n"
    return True, f"{checked} coefficients {what}"


def _id_B1(N, w, w2):
    out = []
    for label, U, V in (("X,Y", X(N, "X"), X(N, "Y")), ("R(X),R(Y)", R_series(N, "X"), R_series(N, "Y"))):
        Ua, Va = U * A_WORD, V * A_WORD
        Iu, Iv = geo(Ua), geo(Va)
        lhs = (HSeries.const(w, N) * Iu).shuffle(HSeries.const(w2, N) * Iv) \
            * (one(N) - (U + V + (U * V).scale(HBAR)) * A_WORD)
        rhs = -HSeries.const(qshuf(w, w2), N) \
            + (HSeries.const(w, N) * Iu).shuffle(HSeries.const(w2, N)) * (one(N) - Ua) \
            + HSeries.const(w, N).shuffle(HSeries.const(w2, N) * Iv) * (one(N) - Va)
        out.append((label, lhs, rhs, "eq"))
    return out


def _id_B2(N, w, w2):
    out = []
    for label, U in (("X", X(N)), ("R(X)", R_series(N))):
        Iu = geo(U * A_WORD)
        W = HSeries.const(w, N)
        lhs = (W * Iu).shuffle(HSeries.const(w2 * A_WORD, N)) * (one(N) - U * A_WORD)
        rhs = HSeries.const(qshuf(w, w2 * A_WORD) - qshuf(w, w2) * A_WORD, N) \
            + (W * Iu).shuffle(HSeries.const(w2, N)) * (one(N) + U.scale(HBAR)) * A_WORD
        out.append((label, lhs, rhs, "eq"))
    return out


def _id_B3(N, w, w2):
    out = []
    for label, U in (("X", X(N)), ("R(X)", R_series(N))):
        img_a, img_b = rho_letter_images(U)
        out.append((label + ":a", rho_def(A_WORD, U), img_a, "eq"))
        out.append((label + ":b", rho_def(B_WORD, U), img_b, "eq"))
        out.append((label + ":hom", rho_def(w * w2, U), rho_def(w, U) * rho_def(w2, U), "eq"))
        out.append((label + ":images", rho_U(w * w2, U), rho_def(w * w2, U), "eq"))
    return out


def _id_B4(N, u, v):
    x, y = X(N, "X"), X(N, "Y")
    Ix, Iy = geo(x * A_WORD), geo(y * A_WORD)
    left = HSeries.const(u * g(1), N) * Ix
    right = HSeries.const(v * g(1), N) * Iy
    lhs = left.shuffle(right)
    S = x + y + (x * y).scale(HBAR)
    brace = (one(N) + x.scale(HBAR)) * left.shuffle(HSeries.const(v, N)) \
        + (one(N) + y.scale(HBAR)) * HSeries.const(u, N).shuffle(right) \
        + HSeries.const(qshuf(u, v) * H, N)
    rhs = brace * g(1) * geo(S * A_WORD)
    return [("", lhs, rhs, "eq")]


def _id_B5(N):
    x = X(N)
    return [("", exp_prod(x * g(1), "sh"), geo(R_series(N) * g(1)), "eq")]


def _id_B6(N):
    return [("", E_series(N), E_series_from_ones(N), "eq")]


def _id_B7(N):
    E = E_series(N)
    return [("", E.map(psi_sh), neg_var(E, "X"), "eq")]


def _id_B8(N, w, w2):
    E = E_series(N)
    lhs = E.map(lambda p: K_sh(w, p, w2))
    R = R_series(N)
    rhs = (HSeries.const(w, N) * geo(R * g(1))).shuffle(
        HSeries.const(psi_sh(w2), N) * geo(neg_var(R, "X") * g(1)))
    return [("", lhs, rhs, "eq")]


def _id_B9(N):
    R = R_series(N)
    lhs = one(N) + R * e(1)
    rhs = exp_hb(N) * (one(N) - neg_var(R, "X") * g(1))
    return [("", lhs, rhs, "eq")]


def _id_B10(N, k):
    lhs = rho_U(g(k), R_series(N))
    rhs = rho_U(E_index(k), X(N))
    return [("", lhs, rhs, "mod_n")]


def E_two(N: int) -> HSeries:
    """E(Y1, Y2) = (1/(Y1 Y2)) sum_j Y_j (E(Y1 + Y2) - E(Y_j)), to order N."""
    M = N + 2
    y1, y2 = X(M, "Y1"), X(M, "Y2")
    Esum = E_series(M, "Y").subs({"Y": y1 + y2})
    num = y1 * (Esum - E_series(M, "Y1")) + y2 * (Esum - E_series(M, "Y2"))
    return num.with_vars(("Y1", "Y2")).div_monomial((1, 1))


def _id_B11(N, w, w2):
    E1, E2 = E_series(N, "Y1"), E_series(N, "Y2")
    W, W2 = HSeries.const(w, N), HSeries.const(w2, N)
    lhs = Xi(W * E1, W2 * E2)
    rhs = partial(W2 * E2, W) * E1 + partial(W * E1, W2) * E2 \
        + (-HSeries.const(qshuf(w, w2), N) + Lambda("Y1", w, w2, N) + Lambda("Y2", w2, w, N)) * E_two(N)
    return [("", lhs, rhs, "eq")]


def _id_B12(N, w, w2):
    x = X(N)
    e0 = e0_series(N)
    W, W2 = HSeries.const(w, N), HSeries.const(w2, N)
    we0 = W2 * e0
    lhs1 = partial(W, we0)
    rhs1 = (Xi(W, W2) + x * W.shuffle(we0)) * e0
    EY = E_series(N, "Y")
    y = X(N, "Y")
    lhs2 = Lambda("Y", W, we0, N)
    rhs2 = W.shuffle(we0) + y * partial(W * EY, we0)
    return [("partial", lhs1, rhs1, "eq"), ("Lambda", lhs2, rhs2, "eq")]


def _id_B13(N, w, w2):
    x, y = X(N), X(N, "Y")
    e0 = e0_series(N)
    EY = E_series(N, "Y")
    W, W2 = HSeries.const(w, N), HSeries.const(w2, N)
    lhs = (W * EY).shuffle(W2 * e0)
    brace = W.shuffle(W2 * e0) + y * Xi(W * EY, W2) * e0
    rhs = brace * EY * geo(x * y * e0 * EY)
    return [("", lhs, rhs, "eq")]


def _id_B14(N, w, w2):
    # both sides multiplied by X1 X2 and compared to order N + 2
    M = N + 2
    x1, x2 = X(M, "X1"), X(M, "X2")
    e01, e02 = e0_series(M, "X1"), e0_series(M, "X2")
    W, W2 = HSeries.const(w, M), HSeries.const(w2, M)
    S = x1 + x2 + (x1 * x2).scale(HBAR)
    lhs = x1 * x2 * (W * e01).shuffle(W2 * e02)
    brace = -(S * Xi(W, W2) * e(2)) \
        + x1 * (one(M) + x2.scale(HBAR)) * partial(W, W2 * e02) \
        + x2 * (one(M) + x1.scale(HBAR)) * partial(W2, W * e01)
    rhs = brace * geo(S * A_WORD)
    return [("times X1*X2", lhs, rhs, "eq")]


def _id_B15(N):
    R1, R2 = R_series(N, "Y1"), R_series(N, "Y2")
    lhs = R1 + R2 + HSeries.const(H, N) * R1 * R2
    rhs = R_series(N, "Y").subs({"Y": X(N, "Y1") + X(N, "Y2")})
    return [("", lhs, rhs, "eq")]


def _id_B16(N):
    out = []
    for k in (1, 2, 3):
        log_series = HSeries(("X",), N, {(n,): g(n * k).scale(Fraction((-1) ** (n - 1), n))
                                         for n in range(1, N)})
        out.append((f"k={k}", geo(X(N) * g(k)), exp_prod(log_series, "star"), "eq"))
    return out


def _id_L58(N, k):
    x = X(N)
    R = R_series(N)
    lhs = geo(R * g(1)).shuffle(HSeries.const(g(k), N) * geo(x * g(1)))
    rhs = geo(x * g(1)).shuffle(HSeries.const(E_index(k), N) * geo(R * g(1)))
    return [("", lhs, rhs, "mod_n")]


def _poly_series(p):
    return HSeries.const(p, 1)


def _id_SG1(N, w, w2):
    g1 = g(1)
    lhs = qshuf(w * g1, w2 * g1)
    rhs = (qshuf(w, w2 * g1) + qshuf(w * g1, w2) + qshuf(w, w2) * H) * g1
    return [("", _poly_series(lhs), _poly_series(rhs), "eq")]


def _id_SG2(N, w, w2):
    out = []
    g1 = g(1)
    for k in (1, 2, 3):
        lhs = qshuf(w * g1, w2 * g(k + 1))
        rhs = qshuf(w, w2 * g(k + 1)) * g1 + qshuf(w * g1, w2 * g(k)) * A_WORD \
            + (qshuf(w, w2 * g(k)) * g1).scale(HBAR)
        out.append((f"k={k}", _poly_series(lhs), _poly_series(rhs), "eq"))
    return out


def _id_SG3(N, w, w2):
    out = []
    for k in (1, 2, 3):
        for l in (1, 2, 3):
            lhs = qshuf(w * g(k + 1), w2 * g(l + 1))
            rhs = (qshuf(w * g(k), w2 * g(l + 1)) + qshuf(w * g(k + 1), w2 * g(l))
                   + qshuf(w * g(k), w2 * g(l)).scale(HBAR)) * A_WORD
            out.append((f"k={k},l={l}", _poly_series(lhs), _poly_series(rhs), "eq"))
    return out


# arity: "pair" = two words, "pairA" = two words in C<A>, "index", or "none"
CATALOG = {
    "B1": (_id_B1, "pair"),
    "B2": (_id_B2, "pair"),
    "B3": (_id_B3, "pair"),
    "B4": (_id_B4, "pair"),
    "B5": (_id_B5, "none"),
    "B6": (_id_B6, "none"),
    "B7": (_id_B7, "none"),
    "B8": (_id_B8, "pairA"),
    "B9": (_id_B9, "none"),
    "B10": (_id_B10, "index"),
    "B11": (_id_B11, "pair"),
    "B12": (_id_B12, "pair"),
    "B13": (_id_B13, "pair"),
    "B14": (_id_B14, "pair"),
    "B15": (_id_B15, "none"),
    "B16": (_id_B16, "none"),
    "L58": (_id_L58, "index"),
    "SG1": (_id_SG1, "pair"),
    "SG2": (_id_SG2, "pair"),
    "SG3": (_id_SG3, "pair"),
}


def default_params(identity: str):
    _, arity = CATALOG[identity]
    if arity == "pair":
        return [(DEFAULT_WORDS[a], DEFAULT_WORDS[b], f"{a},{b}") for a, b in DEFAULT_PAIRS]
    if arity == "pairA":
        return [(DEFAULT_WORDS[a], DEFAULT_WORDS[b], f"{a},{b}") for a, b in _pairs_in_subalgebra()]
    if arity == "index":
        return [(k, ",".join(map(str, k))) for k in ADMISSIBLE_KS]
    return [("",)]


def _normalize_params(identity, params):
    _, arity = CATALOG[identity]
    if not params:
        return default_params(identity)
    if arity in ("pair", "pairA"):
        if len(params) != 2:
            raise ArityMismatch(f"{identity} takes two words, got {len(params)}")
        w, w2 = (NCPoly.lift(p) for p in params)
        return [(w, w2, f"{w},{w2}")]
    if arity == "index":
        if len(params) != 1:
            raise ArityMismatch(f"{identity} takes one index, got {len(params)}")
        k = tuple(params[0])
        return [(k, ",".join(map(str, k)))]
    raise ArityMismatch(f"{identity} takes no parameters")


def check_identity(identity: str, N: int = 5, params=None) -> Report:
    if identity not in CATALOG:
        raise UnknownIdentity(identity)
    fn, _ = CATALOG[identity]
    rep = Report(suite=f"identity:{identity}", params={"order": N})
    for entry in _normalize_params(identity, params):
        *args, label = entry
        for sub, lhs, rhs, mode in fn(N, *args):
            ok, detail = _cmp(lhs, rhs, mode)
            cid = identity + (f"[{label}]" if label else "") + (f"({sub})" if sub else "")
            rep.add(cid, ok, detail=detail)
    return rep
