"""A small expression language over q-words, classical words and evaluators.

Grammar (offsets in diagnostics are 1-based character columns)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | NAME | NAME '[' ints ']' | NAME '(' args ')' | '(' expr ')'

Names: g[..], e[..], E[..] (q-side), z[..] (classical), H, a, b, x, y, hbar.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from . import classical as cl
from .coeffring import HBAR, HPoly, format_rational
from .errors import ExprTypeError, NotInH1, NotInSubalgebra, ParseError
from .evaluation import (QContext, T_qM, ZqM, ZSqM, Zq, kontsevich_ZS_star)
from .freealg import A_WORD, B_WORD, H, NCPoly, e, g
from .qops import E_index, circ, iota, psi_sh, psi_star, qharm, qshuf, wS_q

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()\[\],])
""", re.VERBOSE)


@dataclass
class Tok:
    kind: str
    text: str
    pos: int  # 1-based


def tokenize(src: str):
    out = []
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if not m:
            raise ParseError(f"unexpected character {src[i]!r}", i + 1)
        if m.lastgroup != "ws":
            out.append(Tok(m.lastgroup, m.group(), i + 1))
        i = m.end()
    out.append(Tok("eof", "", len(src) + 1))
    return out


# AST nodes are tuples whose second entry is the source position:
# ("num", pos, value) ("name", pos, id) ("index", pos, id, ints)
# ("call", pos, id, args) ("bin", pos, op, lhs, rhs) ("neg", pos, x) ("pow", pos, x, n)

class Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    @property
    def cur(self) -> Tok:
        return self.toks[self.i]

    def take(self) -> Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> Tok:
        t = self.cur
        if t.text != text or t.kind == "num":
            got = "end of input" if t.kind == "eof" else repr(t.text)
            raise ParseError(f"expected {text!r}, got {got}", t.pos)
        return self.take()

    def parse(self):
        node = self.expr()
        if self.cur.kind != "eof":
            raise ParseError(f"unexpected {self.cur.text!r}", self.cur.pos)
        return node

    def expr(self):
        node = self.term()
        while self.cur.text in ("+", "-") and self.cur.kind == "op":
            t = self.take()
            node = ("bin", t.pos, t.text, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.cur.text in ("*", "/") and self.cur.kind == "op":
            t = self.take()
            node = ("bin", t.pos, t.text, node, self.unary())
        return node

    def unary(self):
        if self.cur.kind == "op" and self.cur.text == "-":
            t = self.take()
            return ("neg", t.pos, self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            t = self.take()
            n = self.cur
            if n.kind != "num" or not n.text.isdigit():
                raise ParseError("exponent must be a non-negative integer", n.pos)
            self.take()
            node = ("pow", t.pos, node, int(n.text))
        return node

    def atom(self):
        t = self.cur
        if t.kind == "num":
            self.take()
            if any(ch in t.text for ch in ".eE"):
                return ("num", t.pos, float(t.text))
            return ("num", t.pos, Fraction(int(t.text)))
        if t.kind == "name":
            self.take()
            if self.cur.text == "[":
                return ("index", t.pos, t.text, self.int_list())
            if self.cur.text == "(":
                return ("call", t.pos, t.text, self.args())
            return ("name", t.pos, t.text)
        if t.text == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        got = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"unexpected {got}", t.pos)

    def int_list(self):
        self.expect("[")
        vals = []
        if self.cur.text != "]":
            while True:
                t = self.cur
                if t.kind != "num" or not t.text.isdigit() or int(t.text) < 1:
                    raise ParseError("index entries must be positive integers", t.pos)
                self.take()
                vals.append(int(t.text))
                if self.cur.text == ",":
                    self.take()
                    continue
                break
        self.expect("]")
        return tuple(vals)

    def args(self):
        self.expect("(")
        out = []
        if self.cur.text != ")":
            while True:
                out.append(self.expr())
                if self.cur.text == ",":
                    self.take()
                    continue
                break
        self.expect(")")
        return out


def parse(src: str):
    return Parser(src).parse()


# ---------------------------------------------------------------- evaluation

@dataclass
class Env:
    ctx: QContext | None = None
    M: int | None = None


MODES = ("star", "sh")


def _kind(v) -> str:
    if isinstance(v, NCPoly):
        return "q-word"
    if isinstance(v, cl.ClassicalPoly):
        return "classical word"
    if isinstance(v, str):
        return "mode"
    return "scalar"


def _fail(pos, msg):
    raise ExprTypeError(f"{msg} at offset {pos}")


def _as_q(v, pos, what):
    if isinstance(v, NCPoly):
        return v
    if isinstance(v, (int, Fraction, HPoly)):
        return NCPoly.lift(v)
    _fail(pos, f"{what} expects a q-side word, got a {_kind(v)}")


def _as_c(v, pos, what):
    if isinstance(v, cl.ClassicalPoly):
        return v
    if isinstance(v, (int, Fraction)):
        return cl.ClassicalPoly.const(v)
    _fail(pos, f"{what} expects a classical word, got a {_kind(v)}")


def _as_int(v, pos, what):
    if isinstance(v, (int, Fraction)) and Fraction(v).denominator == 1 and v >= 1:
        return int(v)
    _fail(pos, f"{what} expects a positive integer")


def _mode(node, pos):
    if node[0] == "name" and node[2] in MODES:
        return node[2]
    _fail(pos, "expected a mode, star or sh")


def _combine(op, x, y, pos):
    kinds = {_kind(x), _kind(y)}
    if "mode" in kinds:
        _fail(pos, "a mode cannot be used in arithmetic")
    if kinds == {"q-word", "classical word"}:
        _fail(pos, "cannot mix q-side and classical words")
    if "q-word" in kinds:
        x, y = NCPoly.lift(x), NCPoly.lift(y)
    elif "classical word" in kinds:
        for v in (x, y):
            if isinstance(v, (HPoly, float)):
                _fail(pos, "classical words take rational coefficients only")
        x, y = cl.ClassicalPoly.lift(x), cl.ClassicalPoly.lift(y)
    elif isinstance(x, HPoly) or isinstance(y, HPoly):
        if isinstance(x, float) or isinstance(y, float):
            _fail(pos, "hbar cannot be combined with floating-point numbers")
        x, y = HPoly.lift(x), HPoly.lift(y)
    if op == "+":
        return x + y
    if op == "-":
        return x - y
    return x * y


_CONSTRUCTORS = {
    "g": lambda k: g(*k),
    "e": lambda k: e(*k),
    "E": lambda k: E_index(k),
    "z": lambda k: cl.z(k),
}

_NAMES = {
    "H": lambda: H,
    "a": lambda: A_WORD,
    "b": lambda: B_WORD,
    "x": lambda: cl.ClassicalPoly.word("x"),
    "y": lambda: cl.ClassicalPoly.word("y"),
    "hbar": lambda: HBAR,
}


class Evaluator:
    def __init__(self, env: Env | None = None):
        self.env = env or Env()

    def ctx(self, pos):
        if self.env.ctx is None:
            _fail(pos, "evaluation needs a value of q (use --q)")
        return self.env.ctx

    def M(self, args, i, pos):
        if len(args) > i:
            return _as_int(self.ev(args[i]), args[i][1], "truncation")
        if self.env.M is None:
            _fail(pos, "truncation M is required (pass it or use --M)")
        return self.env.M

    def ev(self, node):
        kind, pos = node[0], node[1]
        if kind == "num":
            return node[2]
        if kind == "name":
            name = node[2]
            if name in _NAMES:
                return _NAMES[name]()
            if name in MODES:
                return name
            _fail(pos, f"unknown name {name!r}")
        if kind == "index":
            name, k = node[2], node[3]
            if name not in _CONSTRUCTORS:
                _fail(pos, f"{name!r} does not take an index")
            return _CONSTRUCTORS[name](k)
        if kind == "neg":
            v = self.ev(node[2])
            if isinstance(v, str):
                _fail(pos, "a mode cannot be negated")
            return -v
        if kind == "pow":
            v = self.ev(node[2])
            n = node[3]
            if isinstance(v, str):
                _fail(pos, "a mode cannot be raised to a power")
            if isinstance(v, float):
                return v ** n
            out = NCPoly.lift(1) if isinstance(v, NCPoly) else (
                cl.ClassicalPoly.const(1) if isinstance(v, cl.ClassicalPoly) else Fraction(1))
            if isinstance(v, HPoly):
                out = HPoly.lift(1)
            for _ in range(n):
                out = out * v
            return out
        if kind == "bin":
            op, x, y = node[2], self.ev(node[3]), self.ev(node[4])
            if op == "/":
                if not isinstance(y, (int, Fraction, float)):
                    _fail(pos, "division only by a number")
                if y == 0:
                    _fail(pos, "division by zero")
                if isinstance(x, (NCPoly, cl.ClassicalPoly)):
                    if isinstance(y, float):
                        _fail(pos, "words take exact coefficients")
                    return x * (Fraction(1) / Fraction(y))
                if isinstance(x, HPoly):
                    return x * HPoly.lift(Fraction(1) / Fraction(y))
                return x / y
            return _combine(op, x, y, pos)
        if kind == "call":
            return self.call(node[2], node[3], pos)
        raise AssertionError(kind)

    def call(self, name, args, pos):
        fn = _FUNCTIONS.get(name)
        if fn is None:
            _fail(pos, f"unknown function {name!r}")
        arity, impl = fn
        lo, hi = arity
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo} to {hi}"
            _fail(pos, f"{name} takes {want} arguments, got {len(args)}")
        try:
            return impl(self, args, pos)
        except NotInH1 as exc:
            _fail(pos, f"{name}: {exc} (classical word not in h^1)")
        except NotInSubalgebra as exc:
            _fail(pos, f"{name}: {exc}")


def _q2(name, op):
    def impl(ev, args, pos):
        u = _as_q(ev.ev(args[0]), args[0][1], name)
        v = _as_q(ev.ev(args[1]), args[1][1], name)
        return op(u, v)
    return (2, 2), impl


def _c2(name, op):
    def impl(ev, args, pos):
        u = _as_c(ev.ev(args[0]), args[0][1], name)
        v = _as_c(ev.ev(args[1]), args[1][1], name)
        return op(u, v)
    return (2, 2), impl


def _q1(name, op):
    def impl(ev, args, pos):
        return op(_as_q(ev.ev(args[0]), args[0][1], name))
    return (1, 1), impl


def _wS(ev, args, pos):
    mode = _mode(args[0], args[0][1])
    w = ev.ev(args[1])
    if isinstance(w, cl.ClassicalPoly):
        return cl.wS_classical(w, mode)
    return wS_q(_as_q(w, args[1][1], "wS"), mode)


def _psi(ev, args, pos):
    return cl.psi(_as_c(ev.ev(args[0]), args[0][1], "psi"))


def _ZqM(ev, args, pos):
    w = _as_q(ev.ev(args[0]), args[0][1], "ZqM")
    return ZqM(w, ev.M(args, 1, pos), ev.ctx(pos))


def _Zq(ev, args, pos):
    w = _as_q(ev.ev(args[0]), args[0][1], "Zq")
    # the limit is only known to within the tail bound, so report a float
    return float(Zq(w, ev.ctx(pos)).value)


def _ZSqM(ev, args, pos):
    mode = _mode(args[0], args[0][1])
    w = _as_q(ev.ev(args[1]), args[1][1], "ZSqM")
    return ZSqM(w, ev.M(args, 2, pos), mode, ev.ctx(pos))


def _kont(ev, args, pos):
    w = _as_q(ev.ev(args[0]), args[0][1], "kontsevich")
    return kontsevich_ZS_star(w, ev.M(args, 1, pos), ev.ctx(pos))


def _T(ev, args, pos):
    u, v, w = (_as_q(ev.ev(a), a[1], "T") for a in args[:3])
    return T_qM(u, v, w, ev.M(args, 3, pos), ev.ctx(pos))


def _ZM(ev, args, pos):
    w = _as_c(ev.ev(args[0]), args[0][1], "ZM")
    return cl.ZM(w, ev.M(args, 1, pos))


def _ZMS(ev, args, pos):
    mode = _mode(args[0], args[0][1])
    w = _as_c(ev.ev(args[1]), args[1][1], "ZMS")
    return cl.ZM_S_classical(w, ev.M(args, 2, pos), mode)


def _iota(ev, args, pos):
    return iota(_as_q(ev.ev(args[0]), args[0][1], "iota"))


_FUNCTIONS = {
    "qharm": _q2("qharm", qharm),
    "qshuf": _q2("qshuf", qshuf),
    "circ": _q2("circ", circ),
    "psistar": _q1("psistar", psi_star),
    "psish": _q1("psish", psi_sh),
    "iota": ((1, 1), _iota),
    "harm": _c2("harm", cl.harm),
    "shuf": _c2("shuf", cl.shuf),
    "psi": ((1, 1), _psi),
    "wS": ((2, 2), _wS),
    "ZqM": ((1, 2), _ZqM),
    "Zq": ((1, 1), _Zq),
    "ZSqM": ((2, 3), _ZSqM),
    "kontsevich": ((1, 2), _kont),
    "T": ((3, 4), _T),
    "ZM": ((1, 2), _ZM),
    "ZMS": ((2, 3), _ZMS),
}

FUNCTION_NAMES = tuple(sorted(_FUNCTIONS))


def evaluate(src: str, env: Env | None = None):
    return Evaluator(env).ev(parse(src))


def format_value(v) -> str:
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def cli_eval(src: str, q=None, M=None, tol=None) -> str:
    """Parse, type-check and evaluate src; returns the printed value."""
    ctx = None
    if q is not None:
        kw = {} if tol is None else {"tail_tol": float(tol)}
        ctx = QContext.parse(str(q), **kw)
    return format_value(evaluate(src, Env(ctx=ctx, M=M)))
