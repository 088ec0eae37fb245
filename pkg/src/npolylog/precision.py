"""Arbitrary-precision arithmetic shared by every module.

All numerics run through an explicit :class:`PrecisionContext`; there is no
global mutable precision state.  Each context owns a private mpmath context
whose precision is ``working_digits + guard_digits`` decimal digits, and the
error contract is that delivered results are accurate to roughly
``10**(guard_digits - working_digits)`` in relative terms.

Exact arithmetic is plain ``int`` and :class:`fractions.Fraction`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import mpmath
from mpmath.ctx_mp import MPContext

Rational = Fraction
BigInt = int


class DomainError(ValueError):
    """Argument outside an operation's stated domain."""


_ctx_cache: dict[int, MPContext] = {}
_ctx_lock = threading.Lock()


def _mp_for_dps(dps: int) -> MPContext:
    # One immutable-by-convention mpmath context per precision; contexts are
    # created once and their dps is never changed afterwards.
    with _ctx_lock:
        ctx = _ctx_cache.get(dps)
        if ctx is None:
            ctx = MPContext()
            ctx.dps = dps
            _ctx_cache[dps] = ctx
        return ctx


@dataclass(frozen=True)
class PrecisionContext:
    """Decimal working precision plus guard digits.

    ``working_digits`` is the number of digits the caller may rely on;
    ``guard_digits`` extra digits are carried internally.
    """

    working_digits: int
    guard_digits: int = 10

    def __post_init__(self):
        if self.working_digits < 20:
            raise DomainError("working_digits must be at least 20")
        if self.guard_digits < 1:
            raise DomainError("guard_digits must be positive")

    @property
    def dps(self) -> int:
        return self.working_digits + self.guard_digits

    @property
    def mp(self) -> MPContext:
        return _mp_for_dps(self.dps)

    def delivered_eps(self):
        """Relative accuracy bound of delivered results."""
        return self.mp.mpf(10) ** (self.guard_digits - self.working_digits)

    def tail_tol(self):
        """Truncation target for internal series (below delivered accuracy)."""
        return self.mp.mpf(10) ** (-(self.dps + 2))

    def bumped(self, extra: int) -> "PrecisionContext":
        return PrecisionContext(self.working_digits + extra, self.guard_digits)

    # -- conversions ------------------------------------------------------

    def mpf(self, x):
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def mpc(self, x, y=0):
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            return self.mp.mpc(self.mpf(x), self.mpf(y))
        return self.mp.mpc(x, y)

    def to_number(self, x):
        """Coerce int/Fraction/float/complex/mpf/mpc to this context."""
        if isinstance(x, Fraction):
            return self.mpf(x)
        if isinstance(x, complex) or (hasattr(x, "imag") and x.imag != 0):
            return self.mp.mpc(x)
        return self.mp.mpf(x)


# -- Bernoulli numbers -----------------------------------------------------

_bernoulli_cache: list[Fraction] = [Fraction(1)]


def bernoulli(j: int) -> Fraction:
    """Exact Bernoulli number under the t/(e^t - 1) convention, B_1 = -1/2.

    Computed by the defining recurrence sum(binom(j+1, k) B_k, k=0..j) = 0.
    """
    if j < 0:
        raise DomainError("bernoulli index must be nonnegative")
    while len(_bernoulli_cache) <= j:
        m = len(_bernoulli_cache)
        acc = sum(
            Fraction(comb(m + 1, k)) * _bernoulli_cache[k] for k in range(m)
        )
        _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[j]


def bernoulli_poly(m: int, x, ctx: PrecisionContext):
    """Bernoulli polynomial B_m(x) evaluated at an mpf/mpc point."""
    mp = ctx.mp
    acc = mp.mpf(0)
    for k in range(m + 1):
        acc = acc + ctx.mpf(bernoulli(k) * comb(m, k)) * x ** (m - k)
    return acc


# -- zeta values and elementary functions ----------------------------------

_zeta_cache: dict[tuple[int, int], object] = {}
_zeta_lock = threading.Lock()


def zeta(n: int, ctx: PrecisionContext):
    """Riemann zeta at an integer n >= 2, to working precision."""
    if not isinstance(n, int) or n < 2:
        raise DomainError("zeta requires an integer n >= 2")
    key = (n, ctx.dps)
    with _zeta_lock:
        val = _zeta_cache.get(key)
    if val is None:
        val = ctx.mp.zeta(n)
        with _zeta_lock:
            _zeta_cache[key] = val
    return val


def zeta_any(n: int, ctx: PrecisionContext):
    """zeta at any integer: closed-form rationals at n <= 1, zeta() above."""
    if n >= 2:
        return zeta(n, ctx)
    if n == 1:
        raise DomainError("zeta(1) diverges")
    if n == 0:
        return ctx.mpf(Fraction(-1, 2))
    return ctx.mpf(-bernoulli(1 - n) / (1 - n))


def log_principal(z, ctx: PrecisionContext):
    """Principal logarithm, Im in (-pi, pi]."""
    zz = ctx.to_number(z)
    if zz == 0:
        raise DomainError("log of zero")
    return ctx.mp.log(zz)


def exp(z, ctx: PrecisionContext):
    return ctx.mp.exp(ctx.to_number(z))


def pi(ctx: PrecisionContext):
    return +ctx.mp.pi
