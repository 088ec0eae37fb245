"""Exact mod-products symbol calculus.

Tensor slots live in the free abelian group (with rational exponents) on a
declared atom set, with signs dropped (the mod-2-torsion identification of
x and -x).  A :class:`SymbolExpr` is a rational linear combination of tensor
words; equality is canonical-form equality.

The mod-products symbol of an iterated integral I(x0; x1..xN; xN+1) is
computed by the deconcatenation recursion with regularized weight-1 values;
products of positive-weight pieces annihilate automatically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .precision import DomainError

# ---------------------------------------------------------------------------
# group elements and symbol expressions
# ---------------------------------------------------------------------------


class GroupElt:
    """Finitely supported rational exponent vector over atom labels."""

    __slots__ = ("exps", "_key")

    def __init__(self, exps=None):
        d = {}
        if exps:
            for a, e in (exps.items() if isinstance(exps, dict) else exps):
                if not isinstance(e, (int, Fraction)):
                    e = Fraction(e)
                if e != 0:
                    d[a] = d.get(a, 0) + e
                    if d[a] == 0:
                        del d[a]
        self.exps = d
        self._key = tuple(sorted(d.items()))

    @property
    def key(self):
        return self._key

    def __mul__(self, other):
        d = dict(self.exps)
        for a, e in other.exps.items():
            d[a] = d.get(a, 0) + e
            if d[a] == 0:
                del d[a]
        g = GroupElt.__new__(GroupElt)
        g.exps = d
        g._key = tuple(sorted(d.items()))
        return g

    def __pow__(self, k):
        if not isinstance(k, (int, Fraction)):
            k = Fraction(k)
        return GroupElt({a: e * k for a, e in self.exps.items()})

    def inv(self):
        return self**-1

    def is_identity(self):
        return not self.exps

    def __eq__(self, other):
        return isinstance(other, GroupElt) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if not self.exps:
            return "1"
        return "*".join(
            f"{a}^{e}" if e != 1 else str(a) for a, e in self._key
        )


def atom(name) -> GroupElt:
    return GroupElt({name: 1})


class SymbolExpr:
    """Rational linear combination of tensor words.

    Each word is a tuple of atom labels: tensor slots are expanded linearly
    over the atom basis, so a slot holding a product contributes the sum of
    its atoms weighted by their exponents (the tensor algebra of the group
    tensored with Q).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items() if isinstance(terms, dict) else terms:
                if not isinstance(c, (int, Fraction)):
                    c = Fraction(c)
                if c == 0:
                    continue
                self.terms[w] = self.terms.get(w, 0) + c
                if self.terms[w] == 0:
                    del self.terms[w]

    @staticmethod
    def zero():
        return SymbolExpr()

    @staticmethod
    def word(elts, coeff=1):
        """Expand a word of GroupElts into pure atom words."""
        words = {(): coeff}
        for e in elts:
            if not e.exps:
                return SymbolExpr()  # a log(1) slot kills the term
            new = {}
            for w, c in words.items():
                for a, ex in e.exps.items():
                    ww = w + (a,)
                    new[ww] = new.get(ww, 0) + c * ex
            words = new
        return SymbolExpr(words)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v == 0:
                out.pop(w, None)
            else:
                out[w] = v
        s = SymbolExpr.__new__(SymbolExpr)
        s.terms = out
        return s

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, c):
        if not isinstance(c, (int, Fraction)):
            c = Fraction(c)
        if c == 0:
            return SymbolExpr()
        s = SymbolExpr.__new__(SymbolExpr)
        s.terms = {w: cc * c for w, cc in self.terms.items()}
        return s

    __rmul__ = __mul__

    def append_slot(self, g: GroupElt):
        """Tensor this expression with one extra right-hand slot."""
        if g.is_identity():
            return SymbolExpr()
        acc = {}
        for w, c in self.terms.items():
            for a, ex in g.exps.items():
                ww = w + (a,)
                acc[ww] = acc.get(ww, 0) + c * ex
        s = SymbolExpr.__new__(SymbolExpr)
        s.terms = {w: c for w, c in acc.items() if c != 0}
        return s

    def tensor(self, other: "SymbolExpr"):
        out = SymbolExpr()
        acc = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + c1 * c2
        out.terms = {w: c for w, c in acc.items() if c != 0}
        return out

    def __eq__(self, other):
        return isinstance(other, SymbolExpr) and self.terms == other.terms

    def weight(self):
        ws = {len(w) for w in self.terms}
        if len(ws) > 1:
            raise DomainError("mixed-weight symbol expression")
        return ws.pop() if ws else None

    def __len__(self):
        return len(self.terms)

    def dump(self) -> str:
        """One word per line: coefficient, then the atom in each slot."""
        lines = []
        for w in sorted(self.terms):
            lines.append(f"{self.terms[w]}\t" + " | ".join(str(a) for a in w))
        return "\n".join(lines)

    def __repr__(self):
        if not self.terms:
            return "SymbolExpr(0)"
        return f"SymbolExpr({len(self.terms)} words, weight {self.weight()})"


def wedge(a: GroupElt, b: GroupElt) -> SymbolExpr:
    """a (x) b - b (x) a."""
    return SymbolExpr.word([a, b]) - SymbolExpr.word([b, a])


def shuffle_words(w1, w2) -> list:
    """All interleavings of two tuples, preserving internal order."""
    n1, n2 = len(w1), len(w2)
    out = []
    for pos in itertools.combinations(range(n1 + n2), n1):
        word = [None] * (n1 + n2)
        it1 = iter(w1)
        for i in pos:
            word[i] = next(it1)
        it2 = iter(w2)
        for i in range(n1 + n2):
            if word[i] is None:
                word[i] = next(it2)
        out.append(tuple(word))
    return out


def shuffle(w1, w2) -> SymbolExpr:
    """Shuffle product of two tensor words of GroupElts."""
    acc = SymbolExpr()
    for word in shuffle_words(tuple(w1), tuple(w2)):
        acc = acc + SymbolExpr.word(word)
    return acc


# ---------------------------------------------------------------------------
# iterated-integral words, coproduct, infinitesimal coproduct
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IIWord:
    """I(x0; x1,...,xN; x_{N+1}) with hashable symbolic points."""

    x0: object
    letters: tuple
    x1: object

    @property
    def weight(self) -> int:
        return len(self.letters)

    def key(self):
        return (self.x0, self.letters, self.x1)


def coproduct(w: IIWord):
    """Goncharov coproduct: sum over kept index subsets.

    Returns a list of (main IIWord, tuple of cut-off IIWords), one entry per
    subset of {1..N} (the empty subset and the full subset included).
    """
    N = w.weight
    pts = (w.x0,) + w.letters + (w.x1,)
    out = []
    for rmask in range(1 << N):
        kept = [i + 1 for i in range(N) if rmask >> i & 1]
        main = IIWord(w.x0, tuple(pts[i] for i in kept), w.x1)
        bounds = [0] + kept + [N + 1]
        cuts = []
        for a, b in zip(bounds[:-1], bounds[1:]):
            if b - a > 1:
                cuts.append(IIWord(pts[a], tuple(pts[i] for i in range(a + 1, b)), pts[b]))
        out.append((main, tuple(cuts)))
    return out


def infinitesimal_D(w: IIWord):
    """All single-segment cuts: list of (main IIWord, cut IIWord).

    Term count is sum over r = 1..N-1 of (N - r + 1).
    """
    N = w.weight
    pts = (w.x0,) + w.letters + (w.x1,)
    out = []
    for r in range(1, N):
        for p in range(0, N - r + 1):
            main = IIWord(
                w.x0,
                tuple(pts[i] for i in range(1, p + 1))
                + tuple(pts[i] for i in range(p + r + 1, N + 1)),
                w.x1,
            )
            cut = IIWord(pts[p], tuple(pts[i] for i in range(p + 1, p + r + 1)), pts[p + r + 1])
            out.append((main, cut))
    return out


# ---------------------------------------------------------------------------
# the mod-products symbol
# ---------------------------------------------------------------------------


def reg_weight1(a, b, c, oracle):
    """Regularized I(a; b; c) as a GroupElt, or None when it is log(1) = 0."""
    if a == b and b == c:
        return None
    if a != b and b == c:
        g = oracle(b, a).inv()
    elif a == b and b != c:
        g = oracle(b, c)
    else:
        g = oracle(b, c) * oracle(b, a).inv()
    return None if g.is_identity() else g


def symb_sh(w: IIWord, oracle, _memo=None) -> SymbolExpr:
    """Mod-products symbol of an iterated-integral word.

    ``oracle(u, v)`` must return the GroupElt of the difference u - v with
    sign dropped (atoms are declared per computation).
    """
    if _memo is None:
        _memo = {}
    key = w.key()
    if key in _memo:
        return _memo[key]
    N = w.weight
    if N == 0:
        res = SymbolExpr({(): Fraction(1)})
    elif N == 1:
        g = reg_weight1(w.x0, w.letters[0], w.x1, oracle)
        res = SymbolExpr() if g is None else SymbolExpr.word([g])
    else:
        pts = (w.x0,) + w.letters + (w.x1,)
        res = SymbolExpr()
        for j in range(1, N + 1):
            g = reg_weight1(pts[j - 1], pts[j], pts[j + 1], oracle)
            if g is None:
                continue
            sub = IIWord(w.x0, w.letters[: j - 1] + w.letters[j:], w.x1)
            res = res + symb_sh(sub, oracle, _memo).append_slot(g)
        g = reg_weight1(w.x0, w.letters[0], w.x1, oracle)
        if g is not None:
            sub = IIWord(w.letters[0], w.letters[1:], w.x1)
            res = res - symb_sh(sub, oracle, _memo).append_slot(g)
        g = reg_weight1(w.x0, w.letters[-1], w.x1, oracle)
        if g is not None:
            sub = IIWord(w.x0, w.letters[:-1], w.letters[-1])
            res = res - symb_sh(sub, oracle, _memo).append_slot(g)
    _memo[key] = res
    return res


def nielsen_symbol(idx, arg: GroupElt, one_minus_arg: GroupElt) -> SymbolExpr:
    """Closed-form mod-products symbol of S_{n,p}(z):

    -(1-z) ^ z (x) ( (1-z)^{(x)(p-1)} shuffle z^{(x)(n-1)} )
    """
    n, p = (idx.n, idx.p) if hasattr(idx, "n") else idx
    if n < 1 or p < 1:
        return SymbolExpr()  # products only
    head = wedge(one_minus_arg, arg) * -1
    tail = shuffle((one_minus_arg,) * (p - 1), (arg,) * (n - 1))
    return head.tensor(tail)


def li_symbol(m: int, arg: GroupElt, one_minus_arg: GroupElt) -> SymbolExpr:
    """Mod-products symbol of Li_m(z) = S_{m-1,1}(z)."""
    return nielsen_symbol((m - 1, 1), arg, one_minus_arg)


# ---------------------------------------------------------------------------
# concrete atom oracles
# ---------------------------------------------------------------------------


def oracle_01z(u, v):
    """Difference oracle for points {0, 1, 'z'}, atoms 'z' and '1-z'."""
    pair = frozenset((u, v))
    if pair == frozenset((0, 1)):
        return GroupElt()
    if pair == frozenset((0, "z")):
        return atom("z")
    if pair == frozenset((1, "z")):
        return atom("1-z")
    raise DomainError(f"cannot factor difference of {u!r} and {v!r}")


def rational_oracle(u, v):
    """Difference oracle for rational points; atoms are prime strings."""
    d = Fraction(u) - Fraction(v)
    if d == 0:
        raise DomainError("zero difference has no group element")
    exps = {}
    for val, sgn in ((abs(d.numerator), 1), (d.denominator, -1)):
        m = val
        f = 2
        while f * f <= m:
            while m % f == 0:
                exps[str(f)] = exps.get(str(f), 0) + sgn
                m //= f
            f += 1
        if m > 1:
            exps[str(m)] = exps.get(str(m), 0) + sgn
    return GroupElt(exps)


# ---------------------------------------------------------------------------
# antisymmetrization
# ---------------------------------------------------------------------------


def perm_sign(perm) -> int:
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        clen = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def symmetric_group(n):
    """All permutations of range(n) with their sign characters."""
    return [(p, perm_sign(p)) for p in itertools.permutations(range(n))]


def alternate(group, expr_fn) -> SymbolExpr:
    """Signed sum of expr_fn(perm) over a group given as (perm, sign) pairs."""
    acc = SymbolExpr()
    for perm, sign in group:
        acc = acc + expr_fn(perm) * sign
    return acc


# ---------------------------------------------------------------------------
# multivariate integer polynomials (for factoring the five-term ratios)
# ---------------------------------------------------------------------------


class MPoly:
    """Dense-dict polynomial over Z in a fixed number of variables."""

    __slots__ = ("nvars", "c")

    def __init__(self, nvars, c=None):
        self.nvars = nvars
        self.c = {m: v for m, v in (c or {}).items() if v != 0}

    @staticmethod
    def const(nvars, v):
        return MPoly(nvars, {(0,) * nvars: v} if v else {})

    @staticmethod
    def linear_diff(nvars, i, j):
        """x_i - x_j."""
        mi = tuple(1 if k == i else 0 for k in range(nvars))
        mj = tuple(1 if k == j else 0 for k in range(nvars))
        return MPoly(nvars, {mi: 1, mj: -1})

    def is_zero(self):
        return not self.c

    def is_const(self):
        return all(sum(m) == 0 for m in self.c)

    def const_value(self):
        return self.c.get((0,) * self.nvars, 0)

    def __add__(self, o):
        out = dict(self.c)
        for m, v in o.c.items():
            out[m] = out.get(m, 0) + v
            if out[m] == 0:
                del out[m]
        return MPoly(self.nvars, out)

    def __sub__(self, o):
        return self + (o * -1)

    def __mul__(self, o):
        if isinstance(o, int):
            return MPoly(self.nvars, {m: v * o for m, v in self.c.items()})
        out = {}
        for m1, v1 in self.c.items():
            for m2, v2 in o.c.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + v1 * v2
        return MPoly(self.nvars, out)

    def lead(self):
        m = max(self.c)
        return m, self.c[m]

    def divexact(self, g):
        """Quotient self / g if it divides exactly, else None."""
        if g.is_zero():
            raise ZeroDivisionError
        rem = MPoly(self.nvars, dict(self.c))
        q = {}
        gm, gc = g.lead()
        while not rem.is_zero():
            rm, rc = rem.lead()
            mq = tuple(a - b for a, b in zip(rm, gm))
            if any(e < 0 for e in mq) or rc % gc != 0:
                return None
            cq = rc // gc
            q[mq] = q.get(mq, 0) + cq
            rem = rem - g * MPoly(self.nvars, {mq: cq})
        return MPoly(self.nvars, q)

    def content_and_sign(self):
        from math import gcd

        g = 0
        for v in self.c.values():
            g = gcd(g, abs(v))
        if g == 0:
            return 0, 1, self
        _, lc = self.lead()
        sgn = 1 if lc > 0 else -1
        norm = MPoly(self.nvars, {m: v // (g * sgn) for m, v in self.c.items()})
        return g, sgn, norm

    def canonical_key(self):
        _, _, norm = self.content_and_sign()
        return tuple(sorted(norm.c.items()))

    def permuted(self, perm):
        """Apply x_i -> x_{perm[i]} to the variables."""
        out = {}
        for m, v in self.c.items():
            mm = [0] * self.nvars
            for i, e in enumerate(m):
                mm[perm[i]] += e
            out[tuple(mm)] = out.get(tuple(mm), 0) + v
        return MPoly(self.nvars, out)


class PolyAtomRegistry:
    """Factorization of integer polynomials over linear differences plus a
    growing registry of irreducible non-linear atom polynomials."""

    def __init__(self, nvars):
        self.nvars = nvars
        self.linears = {}
        for i in range(nvars):
            for j in range(i + 1, nvars):
                self.linears[(i, j)] = MPoly.linear_diff(nvars, i, j)
        self.registry = {}  # canonical key -> atom name
        self.polys = {}     # atom name -> normalized MPoly

    def _register(self, poly: MPoly) -> str:
        key = poly.canonical_key()
        if key in self.registry:
            return self.registry[key]
        name = f"P{len(self.registry)}"
        self.registry[key] = name
        _, _, norm = poly.content_and_sign()
        self.polys[name] = norm
        return name

    def factor(self, poly: MPoly) -> GroupElt:
        """Factor into linear atoms x{i}{j}, primes, and registered polys."""
        exps = {}
        g, _, rem = poly.content_and_sign()
        if g == 0:
            raise DomainError("cannot factor the zero polynomial")
        m = g
        f = 2
        while f * f <= m:
            while m % f == 0:
                exps[str(f)] = exps.get(str(f), 0) + 1
                m //= f
            f += 1
        if m > 1:
            exps[str(m)] = exps.get(str(m), 0) + 1
        changed = True
        while changed and not rem.is_const():
            changed = False
            for (i, j), lin in self.linears.items():
                while True:
                    q = rem.divexact(lin)
                    if q is None:
                        break
                    nm = f"x{i + 1}{j + 1}"
                    exps[nm] = exps.get(nm, 0) + 1
                    rem = q
                    changed = True
            for name, ap in list(self.polys.items()):
                while True:
                    q = rem.divexact(ap)
                    if q is None:
                        break
                    exps[name] = exps.get(name, 0) + 1
                    rem = q
                    changed = True
        if not rem.is_const():
            name = self._register(rem)
            exps[name] = exps.get(name, 0) + 1
        else:
            v = abs(rem.const_value())
            f = 2
            while f * f <= v:
                while v % f == 0:
                    exps[str(f)] = exps.get(str(f), 0) + 1
                    v //= f
                f += 1
            if v > 1:
                exps[str(v)] = exps.get(str(v), 0) + 1
        return GroupElt(exps)


# ---------------------------------------------------------------------------
# cross-ratio, higher ratios, five-term theorem
# ---------------------------------------------------------------------------


def _xatom(i, j):
    """Atom for x_i - x_j (1-based, unordered, sign dropped)."""
    i, j = min(i, j), max(i, j)
    return f"x{i}{j}"


def cr_elt(i, j, k, l) -> GroupElt:
    """Cross-ratio (x_i-x_k)(x_j-x_l) / ((x_i-x_l)(x_j-x_k)) as a GroupElt."""
    return GroupElt(
        {_xatom(i, k): 1, _xatom(j, l): 1, _xatom(i, l): -1, _xatom(j, k): -1}
    )


def one_minus_cr_elt(i, j, k, l) -> GroupElt:
    """1 - CR = -(x_i-x_j)(x_k-x_l) / ((x_i-x_l)(x_j-x_k))."""
    return GroupElt(
        {_xatom(i, j): 1, _xatom(k, l): 1, _xatom(i, l): -1, _xatom(j, k): -1}
    )


# exponent tables over pairs (i, j), 1-based, of the three higher ratios;
# each ratio also carries a -1 prefactor (dropped in GroupElts, kept in polys)
_R_EXPS = {
    1: {(1, 2): 1, (1, 4): 1, (3, 5): 1, (1, 3): -1, (1, 5): -1, (2, 4): -1},
    2: {(1, 2): 2, (3, 4): 1, (3, 5): 1, (1, 3): -1, (1, 4): -1, (2, 3): -1, (2, 5): -1},
    3: {(1, 2): 3, (1, 5): 1, (3, 4): 2, (3, 5): 1, (1, 3): -3, (1, 4): -1, (2, 4): -1, (2, 5): -2},
}


def higher_ratios(points=(1, 2, 3, 4, 5)):
    """(CR, R1, R2, R3) as GroupElts over the atoms x_i - x_j."""
    p = points

    def ratio(table):
        return GroupElt(
            {_xatom(p[i - 1], p[j - 1]): e for (i, j), e in table.items()}
        )

    cr = cr_elt(p[0], p[1], p[2], p[3])
    return (cr, ratio(_R_EXPS[1]), ratio(_R_EXPS[2]), ratio(_R_EXPS[3]))


class FiveTermEnv:
    """Shared polynomial registry for symbols over Q(x_1..x_n)."""

    def __init__(self, npoints=5):
        self.n = npoints
        self.reg = PolyAtomRegistry(npoints)

    def ratio_and_complement(self, which, perm):
        """R_which(x_{perm(1..5)}) and 1 - R_which, both as GroupElts.

        ``perm`` is a tuple of 1-based point labels.
        """
        table = _R_EXPS[which]
        exps = {}
        num = MPoly.const(self.n, -1)
        den = MPoly.const(self.n, 1)
        for (i, j), e in table.items():
            a, b = perm[i - 1], perm[j - 1]
            exps[_xatom(a, b)] = exps.get(_xatom(a, b), 0) + e
            lin = MPoly.linear_diff(self.n, a - 1, b - 1)
            for _ in range(abs(e)):
                if e > 0:
                    num = num * lin
                else:
                    den = den * lin
        r_elt = GroupElt(exps)
        one_minus = self.reg.factor(den - num)
        den_elt = GroupElt(
            {
                _xatom(perm[i - 1], perm[j - 1]): -e
                for (i, j), e in table.items()
                if e < 0
            }
        )
        return r_elt, one_minus * den_elt.inv()


def five_term_symbol(env: FiveTermEnv = None) -> SymbolExpr:
    """Mod-products symbol of the alternated five-term combination.

    Alt_5 ( 11 S_{3,2}(CR(x1..x4)) + Li_5(15[R1] - 9[R2] + [R3]) );
    the result is exactly zero.
    """
    env = env or FiveTermEnv(5)
    group = symmetric_group(5)
    # register the irreducible ratio complements in a deterministic order
    cache = {}
    for which in (1, 2, 3):
        for perm, _ in group:
            labels = tuple(q + 1 for q in perm)
            cache[(which, labels)] = env.ratio_and_complement(which, labels)
    acc = SymbolExpr()
    for perm, sign in group:
        labels = tuple(q + 1 for q in perm)
        cr = cr_elt(*labels[:4])
        crm = one_minus_cr_elt(*labels[:4])
        term = nielsen_symbol((3, 2), cr, crm) * 11
        for which, coef in ((1, 15), (2, -9), (3, 1)):
            r, rm = cache[(which, labels)]
            term = term + li_symbol(5, r, rm) * coef
        acc = acc + term * sign
    return acc


def five_term_check():
    """Exact zero check of the five-term theorem; returns (bool, residual)."""
    res = five_term_symbol()
    return res.is_zero(), res


def relabel_points(expr: SymbolExpr, point_perm, env: FiveTermEnv) -> SymbolExpr:
    """Apply a relabeling of points (1-based images) to every atom.

    Linear atoms x{i}{j} map to x{perm i}{perm j}; registered polynomial atoms
    map through the permuted polynomial's canonical form; primes are fixed.
    """
    zero_based = [p - 1 for p in point_perm]
    amap = {}

    def map_atom(a):
        if a in amap:
            return amap[a]
        if a.startswith("x") and len(a) == 3 and a[1:].isdigit():
            i, j = int(a[1]), int(a[2])
            out = _xatom(point_perm[i - 1], point_perm[j - 1])
        elif a.startswith("P"):
            poly = env.reg.polys[a].permuted(zero_based)
            out = env.reg._register(poly)
        else:
            out = a
        amap[a] = out
        return out

    acc = {}
    for w, c in expr.terms.items():
        ww = tuple(map_atom(a) for a in w)
        acc[ww] = acc.get(ww, 0) + c
    return SymbolExpr(acc)


def li5_alt6_symbol() -> SymbolExpr:
    """Alt_6 of the Li_5 part alone (a pure, exactly-zero Li_5 equation).

    Computed as the sum of (k 6)-relabelings of the Alt_5 expression over the
    six cosets of S_5 in S_6.
    """
    env = FiveTermEnv(6)
    group5 = symmetric_group(5)
    cache = {}
    for which in (1, 2, 3):
        for perm, _ in group5:
            labels = tuple(q + 1 for q in perm)
            cache[(which, labels)] = env.ratio_and_complement(which, labels)
    acc = SymbolExpr()
    for perm, sign in group5:
        labels = tuple(q + 1 for q in perm)
        term = SymbolExpr()
        for which, coef in ((1, 15), (2, -9), (3, 1)):
            r, rm = cache[(which, labels)]
            term = term + li_symbol(5, r, rm) * coef
        acc = acc + term * sign
    total = SymbolExpr()
    for k in range(1, 7):
        if k == 6:
            total = total + acc
        else:
            pm = list(range(1, 7))
            pm[k - 1], pm[5] = pm[5], pm[k - 1]
            total = total - relabel_points(acc, tuple(pm), env)
    return total
