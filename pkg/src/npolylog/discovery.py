"""Discovery toolkit: integer-relation detection, Bloch-group kernel searches
over S-units, and the generalized-Vandermonde construction of simultaneous
polylogarithm functional equations.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm

from . import invariant as _inv
from . import singlevalued as _sv
from .precision import DomainError, PrecisionContext, zeta


class InsufficientPrecision(DomainError):
    pass


# ---------------------------------------------------------------------------
# PSLQ (library core) and an LLL fallback (own implementation)
# ---------------------------------------------------------------------------


@dataclass
class RelationProblem:
    """Labeled constants for an integer-relation search."""

    labels: list
    values: list  # mpf values at the stated precision
    bound: int = 10**6
    # reliability heuristic: working digits >= 10 + digits(bound) * count

    def required_digits(self) -> int:
        return 10 + len(str(self.bound)) * len(self.values)


def pslq_raw(values, ctx: PrecisionContext, maxcoeff=10**14, maxsteps=None):
    """mpmath PSLQ with a residual check; None when no reliable relation."""
    mp = ctx.mp
    vals = []
    for v in values:
        im = getattr(v, "imag", 0)
        if im and abs(mp.mpf(im)) > mp.mpf(10) ** (-(ctx.working_digits - 2)):
            raise DomainError("PSLQ needs real constants")
        vals.append(mp.mpf(getattr(v, "real", v)))
    rel = mp.pslq(vals, maxcoeff=maxcoeff, maxsteps=maxsteps or 10000)
    if rel is None:
        return None
    resid = abs(mp.fsum(r * v for r, v in zip(rel, vals)))
    if resid > mp.mpf(10) ** (-(ctx.working_digits - ctx.guard_digits)):
        return None
    g = 0
    for r in rel:
        g = gcd(g, abs(r))
    if g > 1:
        rel = [r // g for r in rel]
    return list(rel)


def pslq(problem: RelationProblem, ctx: PrecisionContext):
    """Integer relation for the problem's constants, or None.

    Refuses (raises InsufficientPrecision) when the working precision is
    below the documented reliability heuristic; never returns a vector whose
    residual exceeds 10^-(working - guard).
    """
    need = problem.required_digits()
    if ctx.working_digits < need:
        raise InsufficientPrecision(
            f"need >= {need} working digits for {len(problem.values)} constants "
            f"at coefficient bound {problem.bound}"
        )
    return pslq_raw(problem.values, ctx, maxcoeff=problem.bound)


def lll_reduce(basis, delta=Fraction(99, 100)):
    """Textbook LLL on integer row vectors (exact Gram-Schmidt over Q)."""
    b = [[Fraction(x) for x in row] for row in basis]
    n = len(b)

    def dot(u, v):
        return sum(x * y for x, y in zip(u, v))

    def gs():
        bstar, mu, norms = [], [[Fraction(0)] * n for _ in range(n)], []
        for i in range(n):
            v = list(b[i])
            for j in range(i):
                if norms[j] == 0:
                    mu[i][j] = Fraction(0)
                    continue
                mu[i][j] = dot(b[i], bstar[j]) / norms[j]
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            bstar.append(v)
            norms.append(dot(v, v))
        return bstar, mu, norms

    bstar, mu, norms = gs()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = mu[k][j]
            r = int(q) if q == int(q) else int(q + Fraction(1, 2)) if q > 0 else -int(-q + Fraction(1, 2))
            if r != 0:
                b[k] = [x - r * y for x, y in zip(b[k], b[j])]
        bstar, mu, norms = gs()
        if norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            bstar, mu, norms = gs()
            k = max(k - 1, 1)
    return [[int(x) for x in row] for row in b]


def lll_relation(values, ctx: PrecisionContext, scale_digits=None):
    """Relation search on the standard lattice [I | 10^P c], as a cross-check."""
    mp = ctx.mp
    n = len(values)
    P = scale_digits or (ctx.working_digits - 8)
    scale = mp.mpf(10) ** P
    rows = []
    for i, v in enumerate(values):
        row = [0] * n + [int(mp.nint(mp.mpf(v) * scale))]
        row[i] = 1
        rows.append(row)
    red = lll_reduce(rows)
    best = None
    for row in red:
        vec = row[:n]
        if all(x == 0 for x in vec):
            continue
        resid = abs(mp.fsum(c * mp.mpf(v) for c, v in zip(vec, values)))
        if resid < mp.mpf(10) ** (-(ctx.working_digits - ctx.guard_digits)):
            size = max(abs(x) for x in vec)
            if best is None or size < best[0]:
                best = (size, vec)
    if best is None:
        return None
    g = 0
    for x in best[1]:
        g = gcd(g, abs(x))
    return [x // (g or 1) for x in best[1]]


# ---------------------------------------------------------------------------
# Bloch-group machinery over S-units
# ---------------------------------------------------------------------------


def factor_over(x: Fraction, primes) -> dict:
    """Exponents of |x| over the prime set; raises if anything is left over."""
    x = Fraction(x)
    if x == 0:
        raise DomainError("cannot factor zero")
    num, den = abs(x.numerator), x.denominator
    out = {}
    for p in primes:
        while num % p == 0:
            out[p] = out.get(p, 0) + 1
            num //= p
        while den % p == 0:
            out[p] = out.get(p, 0) - 1
            den //= p
    if num != 1 or den != 1:
        raise DomainError(f"{x} is not an S-unit over {tuple(primes)}")
    return out


def is_s_unit(x: Fraction, primes) -> bool:
    try:
        factor_over(x, primes)
        return True
    except DomainError:
        return False


def beta_map(combo, m: int, x_primes, wedge_primes=None) -> dict:
    """Exact image sum n_j [x_j]^(m-2) (x) ([x_j] ^ [1-x_j]).

    ``combo`` is a list of (coeff, Fraction x).  Keys of the result are
    (monomial, (q, q')) with ``monomial`` a sorted tuple of m-2 primes from
    the x-support and q < q' primes indexing the wedge slot.
    """
    if m < 2:
        raise DomainError("beta map needs weight >= 2")
    wedge_primes = wedge_primes or x_primes
    out = {}
    for coeff, x in combo:
        x = Fraction(x)
        vx = factor_over(x, x_primes)
        vy = factor_over(1 - x, wedge_primes)
        vx_w = {p: vx.get(p, 0) for p in wedge_primes}
        # symmetric power monomials of the x-vector
        monos = _sym_power(vx, m - 2, x_primes)
        wedge = {}
        for i, p in enumerate(wedge_primes):
            for q in wedge_primes[i + 1:]:
                w = vx_w.get(p, 0) * vy.get(q, 0) - vx_w.get(q, 0) * vy.get(p, 0)
                if w:
                    wedge[(p, q)] = w
        for mono, mc in monos.items():
            for pq, wc in wedge.items():
                key = (mono, pq)
                val = out.get(key, Fraction(0)) + Fraction(coeff) * mc * wc
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return out


def _sym_power(vec: dict, k: int, primes) -> dict:
    """Monomial coefficients of v^k in Sym^k over the given prime basis."""
    from math import factorial

    if k == 0:
        return {(): Fraction(1)}
    items = [(p, vec.get(p, 0)) for p in primes]
    out = {}

    def rec(idx, left, mono, coeff):
        if idx == len(items):
            if left == 0 and coeff:
                out[tuple(mono)] = out.get(tuple(mono), Fraction(0)) + coeff
            return
        p, v = items[idx]
        c = Fraction(1)
        for a in range(left + 1):
            if a > 0:
                c = c * v / a
            rec(idx + 1, left - a, mono + [p] * a, coeff * c)

    rec(0, k, [], Fraction(factorial(k)))
    return out


def enumerate_exceptional_units(
    primes=(2, 3),
    lo=Fraction(-1),
    hi=Fraction(1),
    include_lo=False,
    include_hi=False,
    exp_bounds=(12, 8),
    extra_primes=(),
    exclude_squares=False,
):
    """All x = +-2^a 3^b in the interval with 1-x an S-unit over
    primes + extra_primes; exhaustive over the exponent box."""
    p1, p2 = primes
    b1, b2 = exp_bounds
    s_set = tuple(primes) + tuple(extra_primes)
    found = set()
    for e1 in range(-b1, b1 + 1):
        for e2 in range(-b2, b2 + 1):
            mag = Fraction(p1) ** e1 * Fraction(p2) ** e2
            for sgn in (1, -1):
                x = sgn * mag
                if x == 0 or x == 1:
                    continue
                if not (lo < x < hi or (include_lo and x == lo) or (include_hi and x == hi)):
                    continue
                if exclude_squares and x > 0 and e1 % 2 == 0 and e2 % 2 == 0:
                    continue
                if not is_s_unit(1 - x, s_set):
                    continue
                found.add(x)
    return sorted(found)


@dataclass
class BlochProblem:
    primes: tuple
    candidates: list
    beta_weights: list
    numeric_conditions: list = field(default_factory=list)  # (k, {prime: power})
    extra_primes: tuple = ()

    @staticmethod
    def from_json(d: dict) -> "BlochProblem":
        primes = tuple(d["primes"])
        extra = tuple(d.get("extra_primes", ()))
        if "candidates" in d:
            cands = [Fraction(c) for c in d["candidates"]]
        else:
            box = d["candidate_box"]
            cands = enumerate_exceptional_units(
                primes=primes,
                lo=Fraction(box.get("lo", "-1")),
                hi=Fraction(box.get("hi", "1")),
                include_lo=box.get("include_lo", False),
                include_hi=box.get("include_hi", False),
                exp_bounds=tuple(box.get("exp_bounds", (12, 8))),
                extra_primes=extra,
                exclude_squares=box.get("exclude_squares", False),
            )
        conds = [
            (c["k"], {int(p): int(e) for p, e in c["nu"].items()})
            for c in d.get("numeric_conditions", [])
        ]
        return BlochProblem(primes, cands, list(d["beta_weights"]), conds, extra)


_L_cache = {}


def _zagier_at(k, x, ctx):
    key = (k, Fraction(x), ctx.dps)
    if key not in _L_cache:
        _L_cache[key] = _sv.zagier_L(k, ctx.mpf(Fraction(x)), ctx)
    return _L_cache[key]


def valuation_condition(combo, k: int, p: int, ctx: PrecisionContext):
    """sum n_j L_k(x_j) nu_p(x_j) for a combination of rationals."""
    mp = ctx.mp
    acc = mp.mpf(0)
    for coeff, x in combo:
        nu = factor_over(Fraction(x), (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31)).get(p, 0)
        if nu:
            acc += ctx.mpf(Fraction(coeff)) * nu * _zagier_at(k, x, ctx)
    return acc


def _condition_values(problem, vectors, k, numono, ctx):
    """gamma_i = condition functional applied to each basis vector."""
    weights = []
    for x in problem.candidates:
        vx = factor_over(Fraction(x), problem.primes)
        w = Fraction(1)
        for p, e in numono.items():
            w *= Fraction(vx.get(p, 0)) ** e
        weights.append(w)
    out = []
    for vec in vectors:
        acc = ctx.mp.mpf(0)
        for vj, x, w in zip(vec, problem.candidates, weights):
            if vj and w:
                acc += ctx.mpf(Fraction(vj) * w) * _zagier_at(k, x, ctx)
        out.append(acc)
    return out


def _primitive(vec):
    den = 1
    for v in vec:
        den = den * Fraction(v).denominator // gcd(den, Fraction(v).denominator)
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-u for u in ints]
            break
    return ints


def bloch_kernel_search(problem: BlochProblem, ctx: PrecisionContext, maxcoeff=10**40):
    """Exact basis of the solution space of the Bloch-group conditions.

    The beta-map conditions are imposed by exact linear algebra; each numeric
    condition is converted to exact constraints by PSLQ-confirming the
    pairwise ratios of its values on the current basis, at two precisions at
    least 20 digits apart.  Unresolvable conditions are reported in the
    returned info dict and kept numeric-only.
    """
    info = {"candidates": len(problem.candidates), "unresolved": []}
    rows_keys = {}
    per_cand = []
    for x in problem.candidates:
        img = {}
        for m in problem.beta_weights:
            part = beta_map(
                [(1, x)], m, list(problem.primes),
                wedge_primes=sorted(set(problem.primes) | set(problem.extra_primes)),
            )
            for key, val in part.items():
                img[(m,) + key] = val
                rows_keys[(m,) + key] = True
        per_cand.append(img)
    keys = sorted(rows_keys)
    matrix = [[img.get(key, Fraction(0)) for img in per_cand] for key in keys]
    kernel = _inv.mat_nullspace(matrix) if matrix else [
        [Fraction(i == j) for j in range(len(per_cand))] for i in range(len(per_cand))
    ]
    basis = [_primitive(v) for v in kernel]
    info["beta_kernel_dim"] = len(basis)
    hi_ctx = PrecisionContext(ctx.working_digits + 25, ctx.guard_digits)
    for k, numono in problem.numeric_conditions:
        if not basis:
            break
        gam = _condition_values(problem, basis, k, numono, ctx)
        tol = ctx.mpf(10) ** (-(ctx.working_digits - ctx.guard_digits))
        scale = max(abs(g) for g in gam)
        if scale < tol:
            continue  # condition already satisfied on this space
        i0 = max(range(len(gam)), key=lambda i: abs(gam[i]))
        new_basis = []
        ok_all = True
        for i in range(len(basis)):
            if i == i0:
                continue
            if abs(gam[i]) < tol * scale:
                new_basis.append(basis[i])
                continue
            rel = pslq_raw([gam[i], gam[i0]], ctx, maxcoeff=maxcoeff)
            if rel is None:
                ok_all = False
                info["unresolved"].append({"k": k, "nu": numono, "index": i})
                new_basis.append(basis[i])
                continue
            a, b = rel
            vec = [a * u + b * v for u, v in zip(basis[i], basis[i0])]
            # confirm at a second precision >= 20 digits higher
            g2 = _condition_values(problem, [vec], k, numono, hi_ctx)[0]
            tol2 = hi_ctx.mpf(10) ** (-(hi_ctx.working_digits - hi_ctx.guard_digits - 5))
            if abs(g2) > tol2 * max(1, scale):
                ok_all = False
                info["unresolved"].append({"k": k, "nu": numono, "index": i, "stage": "confirm"})
                new_basis.append(basis[i])
                continue
            new_basis.append(_primitive(vec))
        basis = new_basis
        if not ok_all:
            info.setdefault("numeric_only", []).append({"k": k, "nu": numono})
    info["dimension"] = len(basis)
    return basis, info


def in_span(vec, basis) -> bool:
    """Exact rational span membership test."""
    if not basis:
        return all(Fraction(v) == 0 for v in vec)
    rows = [[Fraction(b[j]) for b in basis] for j in range(len(vec))]
    try:
        sol = _solve_least(rows, [Fraction(v) for v in vec])
    except DomainError:
        return False
    return sol is not None


def _solve_least(rows, rhs):
    nr, nc = len(rows), len(rows[0])
    aug = [[r for r in row] + [b] for row, b in zip(rows, rhs)]
    rank = 0
    pivots = []
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if aug[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        aug[rank], aug[piv] = aug[piv], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [v / pv for v in aug[rank]]
        for r in range(nr):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * u for v, u in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, nr):
        if aug[r][nc] != 0:
            return None
    x = [Fraction(0)] * nc
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][nc]
    return x


# ---------------------------------------------------------------------------
# generalized Vandermonde functional equations
# ---------------------------------------------------------------------------


def vandermonde_matrix(orders, levels):
    return [
        [Fraction(1, Fraction(N) ** (a - 1)) for N in levels] for a in orders
    ]


def vandermonde_fe(orders, levels, isolate=0, dist_order=2):
    """Simultaneous Li_{a_1} + ... + Li_{a_n} functional-equation template.

    Returns a dict with the exact matrix and its inverse, plus the induced
    equation as a list of (coeff, power, rot) triples meaning
    coeff * [ exp(2 pi i rot) * v^power ], built from a distribution relation
    of order ``dist_order`` in the variable u = v^M, M = lcm(levels).
    """
    orders = list(orders)
    levels = list(levels)
    if len(set(orders)) != len(orders) or len(set(levels)) != len(levels):
        raise DomainError("orders and levels must be distinct")
    n = len(orders)
    V = vandermonde_matrix(orders, levels)
    det = _inv.mat_det(V)
    if det == 0:
        raise DomainError("Vandermonde matrix is singular")
    # weights w over levels with sum_j w_j f^(N_j) = mu * Li_{a_isolate}:
    # f^(N_j) = sum_i V[i][j] mu_i Li_{a_i}, so solve V w = e_isolate
    w = _inv.mat_solve(V, [Fraction(j == isolate) for j in range(n)])
    M = lcm(*levels) if n > 1 else levels[0]
    a_iso = orders[isolate]
    k = dist_order
    # distribution relation in u = v^M: sum_l [u zeta_k^l] - k^{1-a} [u^k]
    lam = [(Fraction(1), 1, Fraction(l, k)) for l in range(k)]
    lam.append((-Fraction(1, Fraction(k) ** (a_iso - 1)), k, Fraction(0)))
    eq = {}
    for lc, upow, urot in lam:
        for wi, N in zip(w, levels):
            if wi == 0:
                continue
            for ell in range(N):
                e = upow * M // N
                rot = Fraction(urot + ell, N) % 1
                key = (e, rot)
                eq[key] = eq.get(key, Fraction(0)) + lc * wi
    equation = [
        (c, e, rot) for (e, rot), c in sorted(eq.items()) if c != 0
    ]
    return {
        "orders": orders,
        "levels": levels,
        "matrix": V,
        "det": det,
        "weights": w,
        "lcm": M,
        "equation": equation,
    }


def vandermonde_check(template, order_index, z, ctx: PrecisionContext):
    """Evaluate the template under the clean head of one order; ~0 if valid."""
    mp = ctx.mp
    a = template["orders"][order_index]
    acc = mp.mpc(0)
    for c, e, rot in template["equation"]:
        arg = mp.expjpi(2 * ctx.mpf(rot)) * mp.mpc(z) ** e
        acc += ctx.mpf(c) * _sv.clean_L(a, arg, ctx)
    return acc
