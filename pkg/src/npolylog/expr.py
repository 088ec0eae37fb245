"""Tiny expression grammar for catalog arguments and constants.

expr    := term (('+'|'-') term)*
term    := factor (('*'|'/') factor)*
factor  := '-' factor | power
power   := atom ('^' signed-integer)?
atom    := integer | name | '(' expr ')'

Names: free parameters (z, t, u, ...) resolved through an environment, plus
the built-in constants phi, sqrt2, sqrt5, alpha (= sqrt2 - 1), beta (= sqrt2),
omega (real root of u^3 + u^2 - 1), zeta6 (= exp(2 pi i/6)), i, pi.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .precision import DomainError, PrecisionContext

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|\*\*|[-+*/^()])")

CONSTANT_NAMES = ("phi", "sqrt2", "sqrt5", "alpha", "beta", "omega", "zeta6", "i", "pi")


def tokenize(s: str):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            raise DomainError(f"bad expression near {s[pos:]!r}")
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.i += 1
        return t

    def parse(self):
        node = self.expr()
        if self.peek() is not None:
            raise DomainError(f"trailing tokens: {self.toks[self.i:]}")
        return node

    def expr(self):
        node = self.term()
        while self.peek() in ("+", "-"):
            op = self.next()
            rhs = self.term()
            node = (op, node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            rhs = self.factor()
            node = (op, node, rhs)
        return node

    def factor(self):
        if self.peek() == "-":
            self.next()
            return ("neg", self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() == "-":
                self.next()
                sign = -1
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise DomainError("exponent must be an integer")
            return ("pow", base, sign * int(tok))
        return base

    def atom(self):
        tok = self.next()
        if tok is None:
            raise DomainError("unexpected end of expression")
        if tok == "(":
            node = self.expr()
            if self.next() != ")":
                raise DomainError("missing closing parenthesis")
            return node
        if tok.isdigit():
            return ("num", Fraction(int(tok)))
        if re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            return ("name", tok)
        raise DomainError(f"unexpected token {tok!r}")


def parse(s: str):
    return _Parser(tokenize(str(s))).parse()


def _constants(ctx: PrecisionContext):
    mp = ctx.mp
    s5 = mp.sqrt(5)
    s2 = mp.sqrt(2)
    return {
        "phi": (1 + s5) / 2,
        "sqrt2": s2,
        "sqrt5": s5,
        "alpha": s2 - 1,
        "beta": s2,
        "omega": mp.findroot(lambda u: u**3 + u**2 - 1, mp.mpf("0.7548776662")),
        "zeta6": mp.expjpi(mp.mpf(1) / 3),
        "i": mp.mpc(0, 1),
        "pi": +mp.pi,
    }


_const_cache = {}


def eval_numeric(node, ctx: PrecisionContext, env=None):
    """Evaluate an AST (or expression string) to an mpf/mpc under ctx."""
    if isinstance(node, str):
        node = parse(node)
    key = ctx.dps
    if key not in _const_cache:
        _const_cache[key] = _constants(ctx)
    consts = _const_cache[key]
    env = env or {}

    def ev(n):
        op = n[0]
        if op == "num":
            return ctx.mpf(n[1])
        if op == "name":
            if n[1] in env:
                v = env[n[1]]
                return ctx.mpf(v) if isinstance(v, Fraction) else v
            if n[1] in consts:
                return consts[n[1]]
            raise DomainError(f"unknown name {n[1]!r}")
        if op == "neg":
            return -ev(n[1])
        if op == "pow":
            return ev(n[1]) ** n[2]
        a, b = ev(n[1]), ev(n[2])
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if op == "/":
            return a / b
        raise DomainError(f"bad node {n!r}")

    return ev(node)


def eval_exact(node, env=None):
    """Evaluate to a Fraction, or None if irrational names occur."""
    if isinstance(node, str):
        node = parse(node)
    env = env or {}

    def ev(n):
        op = n[0]
        if op == "num":
            return n[1]
        if op == "name":
            v = env.get(n[1])
            if isinstance(v, (Fraction, int)):
                return Fraction(v)
            return None
        if op == "neg":
            a = ev(n[1])
            return None if a is None else -a
        if op == "pow":
            a = ev(n[1])
            return None if a is None else a ** n[2]
        a, b = ev(n[1]), ev(n[2])
        if a is None or b is None:
            return None
        if op == "+":
            return a + b
        if op == "-":
            return a - b
        if op == "*":
            return a * b
        if op == "/":
            return a / b
        raise DomainError(f"bad node {n!r}")

    return ev(node)
