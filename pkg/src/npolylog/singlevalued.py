"""Single-valued and clean single-valued polylogarithms.

Implements, for p <= 2 only (explicit formulas exist only there):

* ``zagier_L``    -- the classical single-valued L_n (Re/Im projection)
* ``sv_li``       -- the single-valued Li_n
* ``clean_L``     -- the clean single-valued polylogarithm
* ``sv_nielsen2`` -- the single-valued S_{n,2}
* ``clean_S2``    -- the clean single-valued Nielsen polylogarithm

A clean function turns every mod-products symbol identity among its heads
into an analytic identity up to an additive constant.

All formulas are sums of holomorphic building blocks at z and conj(z); an
``Evaluator`` supplies those blocks, so branch-coherent evaluation along
explicit paths (for single-valuedness tests) reuses the same assembly.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .precision import DomainError, PrecisionContext, bernoulli, zeta
from . import polylog as _pl


def zeta_sv(n: int) -> Fraction:
    """Coefficient c with zeta^sv(n) = c * zeta(n): 2 for odd n, 0 for even."""
    if n < 2:
        raise DomainError("zeta_sv needs n >= 2")
    return Fraction(2) if n % 2 else Fraction(0)


def zeta_sv_value(n: int, ctx: PrecisionContext):
    return ctx.mpf(zeta_sv(n)) * zeta(n, ctx)


class Evaluator:
    """Principal-branch building blocks at a fixed precision context."""

    def __init__(self, ctx: PrecisionContext, side=None):
        self.ctx = ctx
        self.side = side

    def li(self, m, z):
        if m == 1:
            return -self.log1m(z)
        return _pl.li(m, z, self.ctx, side=self.side)

    def s2(self, n, z):
        # S_{n,2}(z) with the S_{0,2} convention at n = 0
        return _pl.nielsen((n, 2), z, self.ctx, side=self.side)

    def log(self, z):
        return self.ctx.mp.log(z)

    def log1m(self, z):
        zc = self.ctx.mp.mpc(z)
        if zc.imag == 0 and zc.real >= 1:
            zc = _pl._apply_side(zc, self.side, self.ctx)
        return self.ctx.mp.log(1 - zc)


class PathEvaluator(Evaluator):
    """Blocks continued along an explicit polyline from 0 (for branch tests).

    ``waypoints`` fixes the homotopy class used for every iterated-integral
    block; log(z) keeps its principal branch (valid while the path does not
    wind around 0).
    """

    def __init__(self, ctx: PrecisionContext, waypoints):
        super().__init__(ctx)
        self.waypoints = list(waypoints)

    def _ii(self, word, z):
        return _pl.iterated_integral(word, z, self.ctx, waypoints=self.waypoints)

    def li(self, m, z):
        return -self._ii((1,) + (0,) * (m - 1), z)

    def s2(self, n, z):
        if n == 0:
            return self.log1m(z) ** 2 / 2
        return self._ii((1, 1) + (0,) * n, z)

    def log1m(self, z):
        return self._ii((1,), z)


def _pair(ctx, z, ev=None, ev_conj=None):
    # the assembled functions are single-valued, so points on the classical
    # cut are fine: both side limits agree, and we fix side=+1 internally
    mp = ctx.mp
    zc = mp.mpc(z)
    ev = ev or Evaluator(ctx, side=+1)
    ev_conj = ev_conj or Evaluator(ctx, side=-1)
    return mp, zc, mp.conj(zc), ev, ev_conj


def _logsq(mp, zc):
    # log|z|^2 is real and globally single-valued; never assemble it from
    # principal logs (they disagree with conjugation on the negative axis)
    return 2 * mp.log(abs(zc))


def zagier_L(n: int, z, ctx: PrecisionContext, ev=None):
    """Zagier's single-valued polylogarithm: Re/Im of a Bernoulli-weighted sum."""
    if n < 2:
        raise DomainError("zagier_L needs n >= 2")
    mp = ctx.mp
    zc = mp.mpc(z)
    if zc == 0:
        return mp.mpf(0)
    if zc == 1:
        return zeta(n, ctx) if n % 2 else mp.mpf(0)
    if mp.isinf(zc):
        return mp.mpf(0)
    ev = ev or Evaluator(ctx, side=+1)
    lz = mp.log(abs(zc))
    acc = mp.mpc(0)
    for j in range(n):
        c = ctx.mpf(bernoulli(j) * Fraction(2**j, factorial(j)))
        acc += c * lz**j * ev.li(n - j, zc)
    return acc.real if n % 2 else acc.imag


def sv_li(n: int, z, ctx: PrecisionContext, ev=None, ev_conj=None):
    """Single-valued Li_n (not yet clean)."""
    if n < 2:
        raise DomainError("sv_li needs n >= 2")
    mp, zc, zb, ev, ev_conj = _pair(ctx, z, ev, ev_conj)
    if zc == 0:
        return mp.mpc(0)
    if zc == 1:
        return mp.mpc(zeta_sv_value(n, ctx))
    L2 = _logsq(mp, zc)
    acc = ev.li(n, zc) - (-1) ** n * ev_conj.li(n, zb)
    for j in range(1, n):
        acc -= ctx.mpf(Fraction((-1) ** j, factorial(n - j))) * ev_conj.li(
            j, zb
        ) * L2 ** (n - j)
    return acc


def clean_L(n: int, z, ctx: PrecisionContext, ev=None, ev_conj=None):
    """Clean single-valued polylogarithm."""
    if n < 2:
        raise DomainError("clean_L needs n >= 2")
    mp = ctx.mp
    if mp.mpc(z) == 0:
        return mp.mpc(0)
    if z == "inf" or mp.isinf(mp.mpc(z)):
        return mp.mpc(0)
    if mp.mpc(z) == 1:
        return mp.mpc(zeta_sv_value(n, ctx))
    mp, zc, zb, ev, ev_conj = _pair(ctx, z, ev, ev_conj)
    L2 = _logsq(mp, zc)
    acc = ev.li(n, zc) - (-1) ** n * ev_conj.li(n, zb)
    acc -= ev.li(n - 1, zc) * L2 / n
    for j in range(1, n):
        acc -= ctx.mpf(Fraction(j * (-1) ** j, n * factorial(n - j))) * ev_conj.li(
            j, zb
        ) * L2 ** (n - j)
    return acc


def sv_nielsen2(n: int, z, ctx: PrecisionContext, ev=None, ev_conj=None):
    """Single-valued S_{n,2} from the explicit formula."""
    if n < 1:
        raise DomainError("sv_nielsen2 needs n >= 1")
    mp = ctx.mp
    if mp.mpc(z) == 0:
        return mp.mpc(0)
    if mp.mpc(z) == 1:
        if n % 2 == 0:
            raise DomainError("sv S_{n,2}(1) diverges for even n")
        ks = mp.mpc(2 * _pl.nielsen_at_one((n, 2), ctx))
        for k in range(1, n, 2):
            ks += 2 * (-1) ** (n - k) * zeta(k + 2, ctx) * zeta(n - k, ctx)
        return ks
    mp, zc, zb, ev, ev_conj = _pair(ctx, z, ev, ev_conj)
    L2 = _logsq(mp, zc)
    l1b = ev_conj.log1m(zb)
    acc = ev.s2(n, zc) + (-1) ** (n + 1) * ev_conj.s2(n, zb)
    acc -= l1b * (ev.li(n + 1, zc) + (-1) ** n * ev_conj.li(n + 1, zb))
    for j in range(0, n):
        acc -= (
            ctx.mpf(Fraction((-1) ** j, factorial(n - j)))
            * L2 ** (n - j)
            * (ev_conj.s2(j, zb) + l1b * ev_conj.li(j + 1, zb))
        )
    for k in range(1, n, 2):
        for j in range(1, n - k + 1):
            acc += (
                ctx.mpf(Fraction(2 * (-1) ** j, factorial(n - j - k)))
                * zeta(k + 2, ctx)
                * ev_conj.li(j, zb)
                * L2 ** (n - j - k)
            )
    return acc


def clean_S2(n: int, z, ctx: PrecisionContext, ev=None, ev_conj=None):
    """Clean single-valued Nielsen polylogarithm S^sh_{n,2}; main term Re_{n+2} S_{n,2}."""
    if n < 1:
        raise DomainError("clean_S2 needs n >= 1")
    mp = ctx.mp
    if mp.mpc(z) == 0:
        return mp.mpc(0)
    if z == "inf" or mp.isinf(mp.mpc(z)):
        return mp.mpc(zeta_sv_value(n + 2, ctx)) if n % 2 else mp.mpc(0)
    if mp.mpc(z) == 1:
        acc = (1 - (-1) ** n) * mp.mpc(_pl.nielsen_at_one((n, 2), ctx))
        for k in range(1, n, 2):
            if n - k < 2:
                continue  # the k = n-1 block cancels against the Li_{n+1} term
            acc += (
                ctx.mpf(Fraction(2, n + 2))
                * zeta(k + 2, ctx)
                * ((k + 2) + (n - k) * (-1) ** (n - k))
                * zeta(n - k, ctx)
            )
        return acc
    mp, zc, zb, ev, ev_conj = _pair(ctx, z, ev, ev_conj)
    L2 = _logsq(mp, zc)
    l1 = ev.log1m(zc)
    l1b = ev_conj.log1m(zb)
    acc = ev.s2(n, zc) - (-1) ** n * ev_conj.s2(n, zb)
    acc -= L2 / (n + 2) * (ev.s2(n - 1, zc) + l1 * ev.li(n, zc))
    acc += (
        ((n + 1) * l1 - l1b)
        / (n + 2)
        * (ev.li(n + 1, zc) - (-1) ** (n + 1) * ev_conj.li(n + 1, zb))
    )
    for j in range(1, n + 1):
        acc += (
            ctx.mpf(Fraction((-1) ** j, (n + 2) * factorial(n - j + 1)))
            * ((j + 1) * ev_conj.s2(j - 1, zb) - (j * l1 - l1b) * ev_conj.li(j, zb))
            * L2 ** (n - j + 1)
        )
    for k in range(1, n, 2):
        inner = (k + 2) * ev.li(n - k, zc)
        for j in range(1, n - k + 1):
            inner += (
                ctx.mpf(Fraction(j * (-1) ** j, factorial(n - j - k)))
                * L2 ** (n - j - k)
                * ev_conj.li(j, zb)
            )
        acc += ctx.mpf(Fraction(2, n + 2)) * zeta(k + 2, ctx) * inner
    return acc


def clean_combination(head, arg_list, ctx: PrecisionContext):
    """Evaluate a clean head over a formal combination [(coeff, z), ...]."""
    mp = ctx.mp
    acc = mp.mpc(0)
    for c, x in arg_list:
        acc += ctx.to_number(c) * head(x, ctx)
    return acc


# ---------------------------------------------------------------------------
# symbolic reconstruction of the clean S_{n,2} coefficients
# ---------------------------------------------------------------------------


def _classify_cut(w, n_total):
    """Value of an iterated-integral factor over points {0, 1, 'z'}.

    Returns a dict mapping product-monomial labels to rational coefficients,
    working modulo products of positive-weight pieces and modulo even zetas
    (both die under the cleaning/single-valued maps).  Labels:

    ('logz',), ('li', m), ('zeta', m), ('s2', n) -- and combinations thereof
    are formed by the caller.
    """
    from . import symbol as _sym

    a, letters, b = w.x0, w.letters, w.x1
    r = len(letters)
    if r == 0:
        return {(): Fraction(1)}
    if a == b:
        return {}
    if (
        a == 0
        and b == "z"
        and r >= 2
        and letters[0] == 1
        and letters[1] == 1
        and all(x == 0 for x in letters[2:])
    ):
        return {("s2", r - 2): Fraction(1)}  # I(0;1,1,0^m;z) = S_{m,2}(z)
    if all(x == letters[0] for x in letters):
        # I(a; c^r; b) = I(a;c;b)^r / r!: a product for r >= 2
        if r >= 2:
            return {}
        g = _sym.reg_weight1(a, letters[0], b, _sym.oracle_01z)
        if g is None:
            return {}
        if g.key == (("z", 1),):
            return {("logz",): Fraction(1)}
        if g.key == (("1-z", 1),):
            return {("li", 1): Fraction(-1)}  # log(1-z) = -Li_1(z)
        raise DomainError(f"unexpected weight-1 value {g!r}")
    if a == 0 and b == "z" and letters[0] == 1 and all(x == 0 for x in letters[1:]):
        return {("li", r): Fraction(-1)}  # I(0; 1, 0^{r-1}; z) = -Li_r(z)
    if a == 1 and b == 0 and letters[0] == 1 and all(x == 0 for x in letters[1:]):
        # I(1; 1, 0^m; 0) = zeta(m+1); even zetas die under the sv map
        m = r - 1
        if m >= 2 and m % 2 == 0:
            return {("zeta", m + 1): Fraction(1)}
        return {}
    if a == 1 and b == "z" and letters[0] == 1 and all(x == 0 for x in letters[1:]):
        # I(1; 1, 0^m; z) = -Li_{m+1}(z) + zeta(m+1) modulo products
        m = r - 1
        out = {("li", m + 1): Fraction(-1)}
        if m >= 2 and m % 2 == 0:
            out[("zeta", m + 1)] = Fraction(1)
        return out
    raise DomainError(f"unclassified iterated integral {w}")


def _apply_R(label):
    """The cleaning map on a right-hand factor label: list of (coeff, monomial)."""
    kind = label[0]
    if kind == "logz":
        return [(Fraction(1), (("logz",),))]
    if kind == "zeta":
        m = label[1]
        return [(Fraction(m), (label,))]
    if kind == "li":
        m = label[1]
        out = [(Fraction(m), (label,))]
        if m >= 2:
            out.append((Fraction(-1), (("logz",), ("li", m - 1))))
        else:
            # R log(1-z): Li_1 = -log(1-z) is weight one, R = id
            out = [(Fraction(1), (label,))]
        return out
    raise DomainError(f"no cleaning rule for {label}")


def derive_clean_sn2(n: int):
    """Reconstruct the clean S_{n,2} correction terms from the infinitesimal
    coproduct and the cleaning recursion; returns {monomial: coefficient}.

    Monomials are sorted tuples of labels ('s2', k), ('li', m), ('logz',),
    ('zeta', m); the identity part S_{n,2} itself is not included.  Raises if
    the result disagrees with the closed-form coefficients.
    """
    from . import symbol as _sym

    if n < 1:
        raise DomainError("needs n >= 1")
    word = _sym.IIWord(0, (1, 1) + (0,) * n, "z")
    corr = {}
    for main, cut in _sym.infinitesimal_D(word):
        left = _classify_cut(main, n)
        right = _classify_cut(cut, n)
        if not left or not right:
            continue
        for llab, lc in left.items():
            for rlab, rc in right.items():
                for rr, mono in _apply_R(rlab if isinstance(rlab, tuple) else rlab):
                    key_parts = []
                    if llab != ():
                        key_parts.append(llab)
                    key_parts.extend(mono)
                    key = tuple(sorted(key_parts))
                    corr[key] = corr.get(key, Fraction(0)) - lc * rc * rr / (n + 2)
    corr = {k: v for k, v in corr.items() if v != 0}

    expected = {}

    def put(parts, c):
        key = tuple(sorted(parts))
        expected[key] = expected.get(key, Fraction(0)) + c

    # displayed closed form of the clean correction
    put([("s2", n - 1), ("logz",)], Fraction(-1, n + 2))
    put([("li", 1), ("li", n + 1)], Fraction(-(n + 1), n + 2))
    put([("li", 1), ("logz",), ("li", n)], Fraction(1, n + 2))
    for j in range(1, n // 2 + 1):
        put([("zeta", 2 * j + 1), ("li", n + 1 - 2 * j)], Fraction(2 * j + 1, n + 2))
    expected = {k: v for k, v in expected.items() if v != 0}
    if corr != expected:
        raise DomainError(
            f"clean S_{{{n},2}} derivation mismatch:\n{corr}\nvs\n{expected}"
        )
    return corr
