"""High-precision evaluation of Li_m, Nielsen S_{n,p}, and (alternating) MZVs.

Evaluation regions for S_{n,p}(z):

* |z| <= 1/2              direct multiple-polylogarithm series
* |1-z| <= 1/2            reflection identity (values at 1-z near 0)
* |z| >= 2                inversion identity (values at 1/z near 0)
* otherwise               split-path evaluation of the defining iterated
                          integral I(0; {1}^p {0}^n; z), with geometric
                          convergence on every path segment

The classical branch cut is [1, oo); points on the cut need a ``side``
(+1 above, -1 below), otherwise a :class:`BranchAmbiguityError` is raised.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .precision import (
    DomainError,
    PrecisionContext,
    bernoulli,
    bernoulli_poly,
    zeta,
    zeta_any,
)


class BranchAmbiguityError(DomainError):
    """Argument on a branch cut without a side flag."""


@dataclass(frozen=True)
class NielsenIndex:
    """Index (n, p) of S_{n,p}; weight n+p, depth bounded by p."""

    n: int
    p: int

    def __post_init__(self):
        if self.n < 0 or self.p < 0 or self.n + self.p < 1:
            raise DomainError("Nielsen index needs n, p >= 0 and weight >= 1")

    @property
    def weight(self) -> int:
        return self.n + self.p


@dataclass(frozen=True)
class MZVIndex:
    """Multiple zeta index (k_1,...,k_r), innermost first, with optional signs.

    zeta(k_1,...,k_r) = sum over 0 < m_1 < ... < m_r of prod sign_i^{m_i} / m_i^{k_i}.
    """

    ks: tuple
    signs: tuple = None

    def __post_init__(self):
        ks = tuple(int(k) for k in self.ks)
        object.__setattr__(self, "ks", ks)
        signs = self.signs
        if signs is None:
            signs = tuple(1 for _ in ks)
        signs = tuple(int(s) for s in signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) != len(ks):
            raise DomainError("signs length must match index length")
        if any(k < 1 for k in ks) or any(s not in (1, -1) for s in signs):
            raise DomainError("invalid MZV index")
        if ks[-1] == 1 and signs[-1] == 1:
            raise DomainError("divergent MZV index")

    @property
    def weight(self) -> int:
        return sum(self.ks)


# ---------------------------------------------------------------------------
# series engines
# ---------------------------------------------------------------------------


def _mpl_series(ns, xs, mp, tol):
    """Li_{n_1..n_d}(x_1..x_d) = sum_{0<k_1<...<k_d} prod x_i^{k_i} / k_i^{n_i}.

    Requires every partial product |x_j ... x_d| < 1 (geometric convergence).
    Evaluated with rolling partial sums, O(terms * depth) arithmetic.
    """
    d = len(ns)
    if d == 0:
        return mp.mpf(1)
    one = mp.mpf(1)
    r = mp.mpf(0)
    prod = one
    for x in reversed(xs):
        prod = prod * abs(x)
        r = max(r, prod)
    if not r < 1:
        raise DomainError("multiple polylog series out of convergence domain")
    kmin = int(mp.log(tol) / mp.log(r)) + 3 * d + 6 if r > 0 else d + 4
    cum = [one] + [mp.mpf(0)] * d  # cum[i] = C_i(k-1) entering step k
    pows = [one] * (d + 1)
    small_run = 0
    k = 0
    while True:
        k += 1
        prev_last = cum[d]
        for i in range(d, 0, -1):
            pows[i] = pows[i] * xs[i - 1]
            cum[i] = cum[i] + pows[i] / mp.mpf(k) ** ns[i - 1] * cum[i - 1]
        inc = abs(cum[d] - prev_last)
        if inc < tol:
            small_run += 1
            if small_run >= 3 and k >= kmin:
                break
        else:
            small_run = 0
        if k > 2_000_000:
            raise DomainError("multiple polylog series failed to converge")
    return cum[d]


def _word_to_mpl(word, mp):
    """Rewrite I(0; word; 1), first letter nonzero, as (-1)^d Li_{ns}(xs)."""
    groups = []  # (rho, zero_count)
    for a in word:
        if a == 0:
            if not groups:
                raise DomainError("iterated-integral word starts at a pole")
            rho, e = groups[-1]
            groups[-1] = (rho, e + 1)
        else:
            groups.append((a, 0))
    d = len(groups)
    ns = [e + 1 for _, e in groups]
    xs = []
    for j in range(d - 1):
        xs.append(mp.mpc(groups[j + 1][0]) / groups[j][0])
    xs.append(1 / mp.mpc(groups[d - 1][0]))
    return d, ns, xs


def _nielsen_series(n, p, z, mp, tol):
    """S_{n,p}(z) by its multiple-polylog series, |z| < 1 (geometric for < 1)."""
    if abs(z) >= 1:
        raise DomainError("Nielsen series requires |z| < 1")
    # E[j] = sum over 0<k_1<...<k_j<k of 1/(k_1...k_j), updated as k grows
    E = [mp.mpf(1)] + [mp.mpf(0)] * max(p - 1, 0)
    acc = mp.mpc(0)
    zk = mp.mpc(1)
    k = 0
    small_run = 0
    while True:
        k += 1
        zk = zk * z
        acc += zk / mp.mpf(k) ** (n + 1) * E[p - 1]
        for j in range(p - 1, 0, -1):
            E[j] = E[j] + E[j - 1] / k
        # E[p-1] vanishes for k < p, so termination may only begin past there
        if k > p and abs(zk) * E[p - 1] < tol * mp.mpf(k) ** (n + 1):
            small_run += 1
            if small_run >= 3:
                break
        else:
            small_run = 0
        if k > 2_000_000:
            raise DomainError("Nielsen series failed to converge")
    return acc


# ---------------------------------------------------------------------------
# split-path iterated integrals
# ---------------------------------------------------------------------------

_RATIO_MAX = 0.60


def _segment_value(word_part, y, w, letters_all, mp, tol):
    """I(y; word_part; w) along the straight segment from y to w."""
    m = len(word_part)
    if m == 0:
        return mp.mpf(1)
    span = w - y
    if span == 0:
        return mp.mpf(0)

    def ratio_from(anchor, other, first_letter):
        if first_letter == anchor:
            return None
        worst = mp.mpf(0)
        for b in word_part:
            if b == anchor:
                continue
            q = abs(other - anchor) / abs(mp.mpc(b) - anchor)
            worst = max(worst, q)
        return worst

    r_dir = ratio_from(y, w, word_part[0])
    r_rev = ratio_from(w, y, word_part[-1])
    use_rev = r_dir is None or (r_rev is not None and r_rev < r_dir)
    if use_rev:
        if r_rev is None or not r_rev < 1:
            raise DomainError("segment not evaluable from either end")
        wd = tuple((mp.mpc(b) - w) / (y - w) for b in reversed(word_part))
        sign = -1 if m % 2 else 1
    else:
        if not r_dir < 1:
            raise DomainError("segment not evaluable from either end")
        wd = tuple((mp.mpc(b) - y) / span for b in word_part)
        sign = 1
    d, ns, xs = _word_to_mpl(wd, mp)
    val = _mpl_series(ns, xs, mp, tol)
    if d % 2:
        val = -val
    return sign * val


def _seg_ok(u, v, word, letters, mp, is_first, is_last, z):
    """Whether the straight segment [u, v] admits a geometric evaluation."""
    length = abs(v - u)

    def dist_to_letters(x, skip_equal):
        d = None
        for L in letters:
            a = abs(x - mp.mpc(L))
            if skip_equal and a == 0:
                continue
            d = a if d is None else min(d, a)
        return d

    # anchored at u
    du = dist_to_letters(u, skip_equal=True)
    ok_u = False
    if all(abs(u - mp.mpc(L)) > 0 for L in letters):
        ok_u = du is not None and length <= _RATIO_MAX * du
    elif is_first and u == 0 and word[0] != 0:
        ok_u = length <= _RATIO_MAX * du
    # anchored at v
    dv = dist_to_letters(v, skip_equal=True)
    ok_v = False
    if all(abs(v - mp.mpc(L)) > 0 for L in letters):
        ok_v = dv is not None and length <= _RATIO_MAX * dv
    elif is_last and any(v == mp.mpc(L) for L in letters) and word[-1] != z:
        ok_v = length <= _RATIO_MAX * dv
    return ok_u or ok_v


def _subdivide(pts, word, letters, mp, z):
    final = [pts[0]]
    work = list(zip(pts[:-1], pts[1:]))
    guard = 0
    while work:
        a, b = work.pop(0)
        if _seg_ok(a, b, word, letters, mp, a == 0, b == z, z):
            final.append(b)
        else:
            mid = (a + b) / 2
            work.insert(0, (mid, b))
            work.insert(0, (a, mid))
            guard += 1
            if guard > 800:
                raise DomainError("path subdivision failed")
    return final


def _build_path(word, z, mp, side=None):
    """Waypoints 0 -> z whose segments all converge geometrically.

    Straight line when possible; a detour is inserted around any letter close
    to the segment, on the side matching Im(z) (or the explicit side flag) so
    no extra winding is introduced.
    """
    letters = sorted({complex(a) for a in word} | {0}, key=lambda t: (t.real, t.imag))
    pts = [mp.mpc(0), mp.mpc(z)]
    for L in letters:
        Lc = mp.mpc(L)
        if Lc == 0 or Lc == pts[-1]:
            continue
        seg = pts[-1] - pts[0]
        t = ((Lc - pts[0]) * mp.conj(seg)).real / abs(seg) ** 2
        if 0 < t < 1 and abs(pts[0] + t * seg - Lc) < mp.mpf("0.2"):
            if side is not None:
                sgn = 1 if side >= 0 else -1
            elif mp.mpc(z).imag != 0:
                sgn = 1 if mp.mpc(z).imag > 0 else -1
            else:
                sgn = 1
            pts = [pts[0], Lc + mp.mpc(0, sgn) / 2, pts[-1]]
    return _subdivide(pts, word, letters, mp, mp.mpc(z))


def iterated_integral(word, z, ctx: PrecisionContext, side=None, waypoints=None):
    """I(0; word; z) along a polyline from 0 to z (default: auto-built path).

    ``word`` is a sequence of letters (numbers); the homotopy class of the
    polyline determines the branch.  The default path is straight where
    possible, which realizes the principal branch on the cut plane.
    """
    mp = ctx.mp
    word = tuple(word)
    N = len(word)
    if N == 0:
        return mp.mpf(1)
    tol = ctx.tail_tol()
    zc = mp.mpc(z)
    if waypoints is None:
        pts = _build_path(word, zc, mp, side=side)
    else:
        pts = [mp.mpc(w) for w in waypoints]
        if pts[0] != 0:
            pts = [mp.mpc(0)] + pts
        if pts[-1] != zc:
            pts = pts + [zc]
        letters = sorted({complex(x) for x in word} | {0}, key=lambda t: (t.real, t.imag))
        pts = _subdivide(pts, word, letters, mp, zc)
    letters_all = tuple(word)
    # chain the deconcatenation: vec[b] = I(0; word[0:b]; current point).
    # On the final segment only b = N is needed; this also avoids subwords
    # that are inadmissible when z itself is a letter (MZV endpoints).
    vec = [mp.mpf(1) if b == 0 else mp.mpf(0) for b in range(N + 1)]
    cur = pts[0]
    for seg_i, nxt in enumerate(pts[1:]):
        last = seg_i == len(pts) - 2
        seg_cache = {}
        b_range = [N] if last else range(N + 1)
        newvec = [mp.mpc(0)] * (N + 1)
        for b in b_range:
            acc = mp.mpc(0)
            for a in range(b + 1):
                if vec[a] == 0:
                    continue
                key = (a, b)
                if key not in seg_cache:
                    seg_cache[key] = _segment_value(
                        word[a:b], cur, nxt, letters_all, mp, tol
                    )
                acc += vec[a] * seg_cache[key]
            newvec[b] = acc
        vec = newvec
        cur = nxt
    return vec[N]


# ---------------------------------------------------------------------------
# classical polylogarithm
# ---------------------------------------------------------------------------


def _on_cut(z) -> bool:
    return z.imag == 0 and z.real >= 1


def _apply_side(z, side, ctx):
    if side not in (1, -1):
        raise BranchAmbiguityError(
            "argument on the branch cut [1, oo); pass side=+1 (above) or side=-1"
        )
    eps = ctx.mp.mpf(10) ** (-(ctx.dps + ctx.dps // 2 + 10))
    return ctx.mp.mpc(z.real, side * eps)


def li(m: int, z, ctx: PrecisionContext, side=None):
    """Principal branch of Li_m on the plane cut along [1, oo)."""
    if not isinstance(m, int) or m < 1:
        raise DomainError("li requires an integer order m >= 1")
    mp = ctx.mp
    zc = mp.mpc(z)
    if zc == 0:
        return mp.mpc(0)
    if _on_cut(zc) and zc.real > 1:
        zc = _apply_side(zc, side, ctx)
    if m == 1:
        if zc == 1:
            raise DomainError("Li_1(1) diverges")
        return -mp.log(1 - zc)
    if zc == 1:
        return mp.mpc(zeta(m, ctx))
    tol = ctx.tail_tol()
    az = abs(zc)
    if az <= mp.mpf("0.5"):
        return _mpl_series([m], [zc], mp, tol)
    if az >= 2:
        # Jonquiere inversion via the Bernoulli polynomial
        lz = mp.log(-zc)
        two_pi_i = mp.mpc(0, 2) * mp.pi
        b = bernoulli_poly(m, mp.mpf("0.5") + lz / two_pi_i, ctx)
        val = -(two_pi_i**m) / factorial(m) * b
        rec = _mpl_series([m], [1 / zc], mp, tol)
        return (-1) ** (m - 1) * rec + val
    # annulus: expansion of Li_m(e^w) around w = 0, convergent for |w| < 2*pi
    w = mp.log(zc)
    acc = mp.mpc(0)
    wk = mp.mpc(1)
    k = 0
    small_run = 0
    while True:
        if k == m - 1:
            H = sum(Fraction(1, i) for i in range(1, m))
            acc += wk / factorial(m - 1) * (ctx.mpf(H) - mp.log(-w))
        else:
            term = mp.mpc(zeta_any(m - k, ctx)) * wk / factorial(k)
            acc += term
            if k > m:
                if abs(term) < tol:
                    small_run += 1
                    if small_run >= 3:
                        break
                else:
                    small_run = 0
        k += 1
        wk = wk * w
        if k > 6000:
            raise DomainError("polylog annulus expansion failed to converge")
    return acc


# ---------------------------------------------------------------------------
# Nielsen polylogarithms
# ---------------------------------------------------------------------------

_one_poly_cache: dict = {}
_one_poly_lock = threading.Lock()


def nielsen_one_expr(n: int, p: int):
    """S_{n,p}(1) as an exact polynomial in zeta values.

    Returns a dict mapping sorted tuples of zeta indices, e.g. (2, 3) for
    zeta(2)*zeta(3), to rational coefficients.  Obtained from the exponential
    generating function for zeta({1}^a, b).
    """
    if n < 1 or p < 1:
        raise DomainError("nielsen_one_expr requires n, p >= 1")
    key = (n, p)
    with _one_poly_lock:
        if key in _one_poly_cache:
            return _one_poly_cache[key]
    W = n + p

    # bivariate series with zeta-monomial coefficients, truncated at degree W
    def mul(Pa, Pb):
        out = {}
        for (i1, j1), m1 in Pa.items():
            for (i2, j2), m2 in Pb.items():
                if i1 + i2 > W or j1 + j2 > W or i1 + i2 + j1 + j2 > W:
                    continue
                tgt = out.setdefault((i1 + i2, j1 + j2), {})
                for mo1, c1 in m1.items():
                    for mo2, c2 in m2.items():
                        mo = tuple(sorted(mo1 + mo2))
                        tgt[mo] = tgt.get(mo, Fraction(0)) + c1 * c2
        return out

    T = {}
    for k in range(2, W + 1):
        for i in range(1, k):
            deg = (i, k - i)
            tgt = T.setdefault(deg, {})
            mono = (k,)
            tgt[mono] = tgt.get(mono, Fraction(0)) - Fraction(comb(k, i), k)
    # G = 1 - exp(T); exp via truncated powers (T has valuation 2)
    expT = {(0, 0): {(): Fraction(1)}}
    power = {(0, 0): {(): Fraction(1)}}
    fact = 1
    for mdeg in range(1, W // 2 + 1):
        power = mul(power, T)
        fact *= mdeg
        for dd, monos in power.items():
            tgt = expT.setdefault(dd, {})
            for mo, c in monos.items():
                tgt[mo] = tgt.get(mo, Fraction(0)) + c / fact
    coeff = expT.get((n, p), {})
    result = {mo: -c for mo, c in coeff.items() if c != 0}
    with _one_poly_lock:
        _one_poly_cache[key] = result
    return result


def eval_zeta_monomials(expr, ctx: PrecisionContext):
    """Evaluate a dict {zeta-index tuple: Fraction} numerically."""
    mp = ctx.mp
    acc = mp.mpf(0)
    for mono, c in expr.items():
        term = ctx.mpf(c)
        for k in mono:
            term = term * zeta(k, ctx)
        acc += term
    return acc


def nielsen_at_one(idx, ctx: PrecisionContext):
    """S_{n,p}(1) = zeta({1}^{p-1}, n+1), expanded in zeta values."""
    n, p = _coerce_index(idx)
    return eval_zeta_monomials(nielsen_one_expr(n, p), ctx)


def _coerce_index(idx):
    if isinstance(idx, NielsenIndex):
        return idx.n, idx.p
    n, p = idx
    return int(n), int(p)


def _nielsen_word(n, p):
    return (1,) * p + (0,) * n


def _nielsen_path(n, p, z, ctx, side=None, waypoints=None):
    val = iterated_integral(_nielsen_word(n, p), z, ctx, side=side, waypoints=waypoints)
    return val if p % 2 == 0 else -val


_minus_one_cache: dict = {}
_c_cache: dict = {}
_cache_lock = threading.Lock()


def _alternating_sum(terms, mp):
    """Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k a_k, k >= 0.

    ``terms`` is the list a_0..a_{n-1}; error is O((3+sqrt8)^(-n)) for
    coefficient sequences of functions analytic off [1, oo).
    """
    n = len(terms)
    d = (3 + mp.sqrt(8)) ** n
    d = (d + 1 / d) / 2
    b = mp.mpf(-1)
    c = -d
    s = mp.mpf(0)
    for k in range(n):
        c = b - c
        s = s + c * terms[k]
        b = (k + n) * (k - n) * b / ((k + mp.mpf("0.5")) * (k + 1))
    return s / d


def nielsen_alternating(n, p, ctx: PrecisionContext):
    """S_{n,p}(-1) by acceleration of the alternating series."""
    mp = ctx.mp
    if p == 0:
        return mp.log(mp.mpc(-1)) ** n / factorial(n)
    if n == 0:
        return (-1) ** p * mp.log(mp.mpf(2)) ** p / factorial(p)
    terms_needed = int(mp.mpf("1.32") * (ctx.dps + 6)) + 12
    E = [mp.mpf(1)] + [mp.mpf(0)] * max(p - 1, 0)
    terms = []
    for k in range(1, terms_needed + 1):
        terms.append(E[p - 1] / mp.mpf(k) ** (n + 1))
        for j in range(p - 1, 0, -1):
            E[j] = E[j] + E[j - 1] / k
    # sum_{k>=1} (-1)^k a_k = -sum_{j>=0} (-1)^j a_{j+1}
    return -_alternating_sum(terms, mp)


def _nielsen_minus_one(n, p, ctx: PrecisionContext):
    key = (n, p, ctx.dps)
    with _cache_lock:
        if key in _minus_one_cache:
            return _minus_one_cache[key]
    if p == 0:
        val = ctx.mp.mpc(0, ctx.mp.pi) ** n / factorial(n)
    elif n == 0:
        val = ctx.mpf(Fraction((-1) ** p, factorial(p))) * ctx.mp.log(2) ** p
    else:
        val = nielsen_alternating(n, p, ctx)
    with _cache_lock:
        _minus_one_cache[key] = val
    return val


def _single_point_constant(n, p, ctx):
    """C_{n,p} from the identity at z = -1, where all log(-1/z) powers vanish."""
    mp = ctx.mp
    lhs = _nielsen_minus_one(n, p, ctx)
    acc = mp.mpc(0)
    # k runs to p-1: every S in the sum keeps depth >= 1, constants come out real
    for k in range(0, p):
        acc += (-1) ** k * comb(n + k - 1, k) * _nielsen_minus_one(n + k, p - k, ctx)
    val = (-1) ** p * (lhs - (-1) ** n * acc)
    if abs(val.imag) > ctx.delivered_eps() * (1 + abs(val)):
        raise DomainError("inversion constant unexpectedly non-real")
    return val.real


def _inversion_mainsum(n, p, z, ctx, method=None):
    """The S-value part of the inversion identity, evaluated at z = 1/Z."""
    mp = ctx.mp
    Lm = mp.log(-1 / mp.mpc(z))
    acc = mp.mpc(0)
    for k in range(0, p):
        for m in range(0, k + 1):
            c = comb(n + k - m - 1, k - m)
            if c == 0:
                continue
            s_val = nielsen((n + k - m, p - k), z, ctx, method=method)
            acc += (-1) ** k * Lm**m / factorial(m) * c * s_val
    return (-1) ** n * acc


def inversion_tail(n: int, p: int, ctx: PrecisionContext):
    """Constants (C^0, ..., C^{n-1}) of the inversion identity's tail.

    S_{n,p}(1/z) - (main S sum) = (-1)^p ( L^{n+p}/(n+p)! + sum_j L^j/j! C^j )
    with L = log(-1/z).  For p <= 2 each C^j is the lower constant C_{n-j,p},
    fixed at the reference point z = -1 (where L = 0); for higher p the whole
    tail is fitted at n real reference points in (-1, 0), where both sides of
    the identity are real, and then holds on the cut plane by analytic
    continuation.
    """
    key = (n, p, ctx.dps)
    with _cache_lock:
        if key in _c_cache:
            return _c_cache[key]
    mp = ctx.mp
    if p <= 2:
        tail = tuple(_single_point_constant(n - j, p, ctx) for j in range(n))
    else:
        work = PrecisionContext(ctx.working_digits + 12, ctx.guard_digits)
        wmp = work.mp
        pts = [-wmp.mpf(30 + 9 * r) / 100 for r in range(n)]
        rows, rhs = [], []
        for z in pts:
            Lm = wmp.log(-1 / z)
            F = (-1) ** p * (
                _nielsen_path(n, p, 1 / z, work)
                - _inversion_mainsum(n, p, z, work, method="series")
            ) - Lm ** (n + p) / factorial(n + p)
            if abs(F.imag) > work.delivered_eps() * (1 + abs(F)):
                raise DomainError("inversion tail fit produced non-real data")
            rows.append([Lm**j / factorial(j) for j in range(n)])
            rhs.append(F.real)
        sol = wmp.lu_solve(wmp.matrix(rows), wmp.matrix(rhs))
        tail = tuple(mp.mpf(sol[j]) for j in range(n))
    with _cache_lock:
        _c_cache[key] = tail
    return tail


def inversion_constant(n: int, p: int, ctx: PrecisionContext):
    """The additive constant C_{n,p} (weight n+p) of the inversion identity."""
    return inversion_tail(n, p, ctx)[0]


def _nielsen_reflect(n, p, Z, ctx):
    """S_{n,p}(Z) via the reflection identity, for w = 1-Z near 0."""
    mp = ctx.mp
    w = 1 - Z
    L1 = mp.log(Z)        # log(1-w)
    L0 = mp.log(w)        # log of the small quantity
    acc = ctx.mpf(Fraction((-1) ** p)) / (
        factorial(n) * factorial(p)
    ) * L1**n * L0**p
    for j in range(n):
        inner = mp.mpc(nielsen_at_one((n - j, p), ctx))
        for k in range(p):
            inner -= (-1) ** k * L0**k / factorial(k) * nielsen(
                (p - k, n - j), w, ctx
            )
        acc += L1**j / factorial(j) * inner
    return acc


def _nielsen_invert(n, p, Z, ctx):
    """S_{n,p}(Z) via the inversion identity, for z = 1/Z near 0."""
    mp = ctx.mp
    z = 1 / Z
    Lm = mp.log(-Z)  # equals log(-1/z) with principal branches off [0, oo)
    acc = _inversion_mainsum(n, p, z, ctx)
    consts = inversion_tail(n, p, ctx)
    tail = Lm ** (n + p) / factorial(n + p)
    for j in range(0, n):
        tail += Lm**j / factorial(j) * consts[j]
    return acc + (-1) ** p * tail


def nielsen(idx, z, ctx: PrecisionContext, side=None, method=None):
    """S_{n,p}(z) on the plane cut along [1, oo)."""
    n, p = _coerce_index(idx)
    mp = ctx.mp
    zc = mp.mpc(z)
    if p == 0:
        if zc == 0:
            raise DomainError("S_{n,0}(0) undefined (log of zero)")
        return mp.log(zc) ** n / factorial(n)
    if n == 0:
        if zc == 1:
            raise DomainError("S_{0,p}(1) undefined (log of zero)")
        if _on_cut(zc):
            zc = _apply_side(zc, side, ctx)
        return ctx.mpf(Fraction((-1) ** p, factorial(p))) * mp.log(1 - zc) ** p
    if zc == 0:
        return mp.mpc(0)
    if zc == 1:
        return mp.mpc(nielsen_at_one((n, p), ctx))
    if _on_cut(zc):
        zc = _apply_side(zc, side, ctx)
    if method is None:
        az = abs(zc)
        if az <= mp.mpf("0.5"):
            method = "series"
        elif abs(1 - zc) <= mp.mpf("0.5"):
            method = "reflection"
        elif az >= 2:
            method = "inversion"
        else:
            method = "path"
    if method == "series":
        if p == 1:
            return _mpl_series([n + 1], [zc], mp, ctx.tail_tol())
        return _nielsen_series(n, p, zc, mp, ctx.tail_tol())
    if method == "reflection":
        return _nielsen_reflect(n, p, zc, ctx)
    if method == "inversion":
        return _nielsen_invert(n, p, zc, ctx)
    if method == "path":
        return _nielsen_path(n, p, zc, ctx)
    raise DomainError(f"unknown method {method!r}")


def nielsen_combination(idx, combo, ctx: PrecisionContext):
    """S_{n,p} extended by linearity to a list of (coeff, argument) pairs."""
    mp = ctx.mp
    acc = mp.mpc(0)
    for c, x in combo:
        acc += ctx.to_number(c) * nielsen(idx, x, ctx)
    return acc


# ---------------------------------------------------------------------------
# multiple zeta values
# ---------------------------------------------------------------------------


def _mzv_word(idx: MZVIndex):
    """Iterated-integral word with I(0; word; 1) = (-1)^depth * zeta(idx)."""
    d = len(idx.ks)
    rhos = []
    run = 1
    for s in reversed(idx.signs):
        run *= s
        rhos.append(run)
    rhos.reverse()  # rho_j = prod_{i>=j} sign_i
    word = []
    for j in range(d):
        word.append(rhos[j])
        word.extend([0] * (idx.ks[j] - 1))
    return tuple(word)


def mzv(idx, ctx: PrecisionContext):
    """(Alternating) multiple zeta value via split-path iterated integrals."""
    if not isinstance(idx, MZVIndex):
        idx = MZVIndex(tuple(idx))
    d = len(idx.ks)
    if d == 1 and idx.signs[0] == 1:
        return zeta(idx.ks[0], ctx)
    if all(s == 1 for s in idx.signs) and all(k == 1 for k in idx.ks[:-1]):
        # zeta({1}^{p-1}, n+1) = S_{n,p}(1), a polynomial in zeta values
        return nielsen_at_one((idx.ks[-1] - 1, d), ctx)
    val = iterated_integral(_mzv_word(idx), 1, ctx)
    val = val if d % 2 == 0 else -val
    if abs(val.imag) > ctx.delivered_eps() * (1 + abs(val)):
        raise DomainError("MZV evaluation returned a non-real value")
    return val.real


def mzv_em_double(k1: int, k2: int, ctx: PrecisionContext, head: int = 200):
    """Independent Euler-Maclaurin oracle for depth-2 zeta(k1, k2), k2 >= 2.

    Writes zeta(k1,k2) = sum_m m^{-k1} zeta(k2, m+1) with a Hurwitz-zeta head
    and an exact asymptotic tail, never touching the iterated-integral path
    machinery.
    """
    if k2 < 2:
        raise DomainError("needs k2 >= 2")
    mp = ctx.mp
    M = head
    acc = mp.mpf(0)
    for m in range(1, M + 1):
        acc += mp.zeta(k2, m + 1) / mp.mpf(m) ** k1
    # asymptotic expansion of zeta(k2, m+1) in powers of 1/m, exact coefficients
    order = ctx.dps + 40
    coeffs = {}  # power of 1/m -> Fraction

    def add_apow(t_exp, pref):
        # pref * (m+1)^(-t_exp) = pref * sum_j binom(-t,j) m^(-t-j)
        sign = Fraction(1)
        c = Fraction(1)
        for j in range(0, order - t_exp + 1):
            if j > 0:
                c = c * Fraction(-(t_exp + j - 1), j)
            coeffs[t_exp + j] = coeffs.get(t_exp + j, Fraction(0)) + pref * c

    add_apow(k2 - 1, Fraction(1, k2 - 1))
    add_apow(k2, Fraction(1, 2))
    poch = Fraction(1)
    i = 1
    while k2 + 2 * i - 1 <= order:
        poch = Fraction(1)
        for t in range(2 * i - 1):
            poch *= k2 + t
        add_apow(k2 + 2 * i - 1, bernoulli(2 * i) / factorial(2 * i) * poch)
        i += 1
    tail = mp.mpf(0)
    for q, c in sorted(coeffs.items()):
        if c == 0:
            continue
        tail += ctx.mpf(c) * mp.zeta(k1 + q, M + 1)
    return acc + tail


# ---------------------------------------------------------------------------
# derivative residual
# ---------------------------------------------------------------------------


def derivative_check(idx, z, ctx: PrecisionContext):
    """Residual |z * d/dz S_{n,p}(z) - S_{n-1,p}(z)| via a Cauchy integral."""
    n, p = _coerce_index(idx)
    if n < 1:
        raise DomainError("derivative relation needs n >= 1")
    work = ctx.bumped(10)
    mp = work.mp
    zc = mp.mpc(z)
    rad = min(abs(zc), abs(1 - zc)) / 2
    if rad == 0:
        raise DomainError("cannot differentiate at a singular point")
    digits = ctx.working_digits + 8
    K = int(digits * mp.log(10) / mp.log(2)) + 8  # (1/2)^K truncation
    acc = mp.mpc(0)
    for k in range(K):
        w = mp.expjpi(mp.mpf(2 * k) / K)
        acc += nielsen((n, p), zc + rad * w, work) / w
    deriv = acc / (K * rad)
    if n == 1:
        target = nielsen((0, p), zc, work)
    else:
        target = nielsen((n - 1, p), zc, work)
    return ctx.mp.mpf(abs(zc * deriv - target))
