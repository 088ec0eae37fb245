#!/usr/bin/env python3
"""Regenerate the identity-catalog JSON data files under src/npolylog/data/.

The records are written here as Python structures for readability and
dumped to JSON; run from the repository root:

    python scripts/build_catalog_data.py
"""

import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "npolylog", "data")


def T(coeff, head, **kw):
    d = {"coeff": str(coeff), "head": head}
    d.update(kw)
    return d


def S(n, p, arg, coeff="1"):
    return T(coeff, "S", n=n, p=p, arg=arg)


def Li(m, arg, coeff="1"):
    return T(coeff, "Li", m=m, arg=arg)


def cS2(n, arg, coeff="1"):
    return T(coeff, "cleanS2", n=n, arg=arg)


def cL(n, arg, coeff="1"):
    return T(coeff, "cleanL", n=n, arg=arg)


def zL(n, arg, coeff="1"):
    return T(coeff, "zagierL", n=n, arg=arg)


def LOG(arg, pow=1):
    d = {"head": "log", "arg": arg}
    if pow != 1:
        d["pow"] = pow
    return d


def ZETA(n, pow=1):
    d = {"head": "zeta", "n": n}
    if pow != 1:
        d["pow"] = pow
    return d


def P(coeff, *factors):
    return {"coeff": str(coeff), "head": "prod", "factors": list(factors)}


def Z(coeff, n):
    return T(coeff, "zeta", n=n)


def NUM(coeff, expr="1"):
    return T(coeff, "num", arg=expr)


ZP = {"name": "z", "domain": "cutplane"}
ZI = {"name": "z", "domain": "inversion"}

records = {"general": [], "weight5": [], "weight6": [], "weight7": [],
           "weight8": [], "anyweight": [], "conjectural": []}

# ---------------------------------------------------------------------- w4
records["general"].append(dict(
    id="s22-reduction", weight=4, status="proved",
    anchor="reduction of S(2,2) to the classical weight-4 polylogarithm",
    params=[ZP], modes=["numeric", "symbol", "invariant"],
    lhs=[S(2, 2, "z")],
    rhs=[
        Li(4, "1-z", "-1"), Li(4, "z"), Li(4, "z/(z-1)"),
        P("-1", Li(3, "z"), LOG("1-z")),
        P("1/24", LOG("1-z", 4)),
        P("-1/6", LOG("z"), LOG("1-z", 3)),
        P("1/2", ZETA(2), LOG("1-z", 2)),
        P("1", ZETA(3), LOG("1-z")),
        Z(1, 4),
    ],
))

# ---------------------------------------------------------------------- w5
records["weight5"].append(dict(
    id="s32-inversion", weight=5, status="proved",
    anchor="inversion identity for S(3,2): S(3,2)(z) + S(3,2)(1/z) in Li_5 and logs",
    params=[ZI], modes=["numeric", "symbol", "invariant"],
    lhs=[S(3, 2, "z"), S(3, 2, "1/z")],
    rhs=[
        Li(5, "z", "3"),
        P("-1", Li(4, "z"), LOG("-z")),
        P("-1/120", LOG("-z", 5)),
        P("1/2", ZETA(3), LOG("-z", 2)),
        P("7/4", ZETA(4), LOG("-z")),
        Z(1, 5), P(1, ZETA(2), ZETA(3)),
    ],
))

records["weight5"].append(dict(
    id="s32-twoterm", weight=5, status="proved",
    anchor="two-term reflection identity for S(3,2) with explicit Li_5 terms",
    params=[ZP], modes=["numeric", "symbol", "invariant"],
    lhs=[S(3, 2, "1-z"), S(3, 2, "z")],
    rhs=[
        Li(5, "1-z"), Li(5, "1-1/z"), Li(5, "z"),
        P("-1", Li(4, "1-z"), LOG("z")),
        P("-1", Li(4, "z"), LOG("1-z")),
        P("-1/120", LOG("z", 5)),
        P("1/24", LOG("z", 4), LOG("1-z")),
        P("-1/12", LOG("z", 3), LOG("1-z", 2)),
        P("-1/6", ZETA(2), LOG("z", 3)),
        P("1/2", ZETA(2), LOG("z", 2), LOG("1-z")),
        P("1", ZETA(3), LOG("z"), LOG("1-z")),
        P("1", ZETA(4), LOG("1-z")),
        P("-3/4", ZETA(4), LOG("z")),
        Z(1, 5), P("-1", ZETA(2), ZETA(3)),
    ],
))

records["weight5"].append(dict(
    id="s32-m1", weight=5, status="proved",
    anchor="special value S(3,2)(-1)",
    params=[], modes=["numeric"],
    lhs=[S(3, 2, "-1")],
    rhs=[Z("-29/32", 5), P("1/2", ZETA(2), ZETA(3))],
))

records["weight5"].append(dict(
    id="s32-half", weight=5, status="proved",
    anchor="special value S(3,2)(1/2)",
    params=[], modes=["numeric"],
    lhs=[S(3, 2, "1/2")],
    rhs=[
        Li(5, "1/2"),
        P("1", Li(4, "1/2"), LOG("2")),
        Z("1/32", 5), P("-1/2", ZETA(2), ZETA(3)),
        P("-1/8", ZETA(4), LOG("2")),
        P("1/2", ZETA(3), LOG("2", 2)),
        P("-1/6", ZETA(2), LOG("2", 3)),
        P("1/40", LOG("2", 5)),
    ],
))

records["weight5"].append(dict(
    id="s32-one", weight=5, status="proved",
    anchor="S(3,2)(1) as a zeta polynomial",
    params=[], modes=["numeric"],
    lhs=[S(3, 2, "1")],
    rhs=[Z(2, 5), P("-1", ZETA(2), ZETA(3))],
))

records["weight5"].append(dict(
    id="zeta14", weight=5, status="proved",
    anchor="double zeta value (1,4) as a zeta polynomial",
    params=[], modes=["numeric"],
    lhs=[T(1, "amzv", ks=[1, 4])],
    rhs=[Z(2, 5), P("-1", ZETA(2), ZETA(3))],
))

records["weight5"].append(dict(
    id="fiveterm-symb", weight=5, status="proved",
    anchor="five-term functional equation of S(3,2) modulo explicit Li_5 terms, exact symbol",
    params=[], modes=["symbol"], kind="fiveterm",
))

records["weight5"].append(dict(
    id="fiveterm-clean", weight=5, status="proved",
    anchor="clean single-valued five-term identity for S(3,2)",
    params=[], modes=["clean_numeric"], kind="fiveterm-clean",
))

records["weight5"].append(dict(
    id="li5-alt6", weight=5, status="proved",
    anchor="six-point alternation of the Li_5 part: a pure Li_5 functional equation",
    params=[], modes=["symbol", "clean_numeric"], kind="li5-alt6",
))

records["weight5"].append(dict(
    id="s32-dist-symb", weight=5, status="proved",
    anchor="order-2 distribution relation for S(3,2): the weight-2 obstruction "
           "symbol vanishes exactly, so the combination reduces to Li_5 terms "
           "(which are algorithmically determinable but not printed)",
    params=[], modes=["symbol"], kind="dist-s32",
))

for (a, b) in ((1, 1), (1, 2), (2, -3), (1, 3)):
    records["weight5"].append(dict(
        id=f"s32-family-{a}-{b}".replace("-", "m", 0), weight=5, status="proved",
        anchor=f"algebraic dilogarithm-family reduction of S(3,2), case a={a}, b={b}",
        params=[], modes=["symbol", "clean_numeric"], kind="family",
        family="s32", a=a, b=b,
    ))

_golden_clean = {
    "mphi": ("-phi", [("-8", "phi^-3"), ("-243", "phi^-1"), ("-219", "-phi"), ("8", "-phi^3")]),
    "phiinv2": ("phi^-2", [("-8", "phi^-3"), ("780", "phi^-1"), ("804", "-phi"), ("8", "-phi^3")]),
    "mphiinv": ("-phi^-1", [("8", "phi^-3"), ("243", "phi^-1"), ("318", "-phi"), ("-8", "-phi^3")]),
    "phiinv": ("phi^-1", [("8", "phi^-3"), ("-219", "phi^-1"), ("-243", "-phi"), ("-8", "-phi^3")]),
}
for tag, (arg, li5) in _golden_clean.items():
    records["weight5"].append(dict(
        id=f"golden-s32-clean-{tag}", weight=5, status="proved",
        anchor=f"clean golden-ratio evaluation of S(3,2) at {arg}",
        params=[], modes=["clean_numeric"],
        lhs=[cS2(3, arg)],
        rhs=[cL(5, x, f"({c})/33") for c, x in li5] + [Z(1, 5)],
    ))

_golden_analytic = {
    "mphi": ("-phi", [("-8", "phi^-3"), ("-243", "phi^-1"), ("-219", "-phi"), ("8", "-phi^3")],
             [P("-2", Li(4, "-phi"), LOG("phi")), Z("1/2", 5),
              P("-325/22", ZETA(4), LOG("phi")),
              P("-1", ZETA(3), Li(2, "-phi")),
              P("-16/11", ZETA(2), LOG("phi", 3)),
              P("8/15", LOG("phi", 5))]),
    "phiinv2": ("phi^-2", [("-8", "phi^-3"), ("780", "phi^-1"), ("804", "-phi"), ("8", "-phi^3")],
                [P("1", Li(4, "phi^-2"), LOG("phi")), Z("1/2", 5),
                 P("481/11", ZETA(4), LOG("phi")),
                 P("-1", ZETA(3), Li(2, "phi^-2")),
                 P("50/11", ZETA(2), LOG("phi", 3)),
                 P("14/15", LOG("phi", 5))]),
    "mphiinv": ("-phi^-1", [("8", "phi^-3"), ("243", "phi^-1"), ("318", "-phi"), ("-8", "-phi^3")],
                [P("-1", Li(4, "-phi^-1"), LOG("phi")), Z("1/2", 5),
                 P("325/22", ZETA(4), LOG("phi")),
                 P("-1", ZETA(3), Li(2, "-phi^-1")),
                 P("21/22", ZETA(2), LOG("phi", 3)),
                 P("-7/12", LOG("phi", 5))]),
    "phiinv": ("phi^-1", [("8", "phi^-3"), ("-219", "phi^-1"), ("-243", "-phi"), ("-8", "-phi^3")],
               [P("2", Li(4, "phi^-1"), LOG("phi")), Z("1/2", 5),
                P("-335/22", ZETA(4), LOG("phi")),
                P("-1", ZETA(3), Li(2, "phi^-1")),
                P("-28/11", ZETA(2), LOG("phi", 3)),
                P("-8/15", LOG("phi", 5))]),
}
for tag, (arg, li5, rest) in _golden_analytic.items():
    records["weight5"].append(dict(
        id=f"golden-s32-analytic-{tag}", weight=5, status="proved",
        anchor=f"analytic golden-ratio evaluation of S(3,2) at {arg}",
        params=[], modes=["numeric"],
        lhs=[S(3, 2, arg)],
        rhs=[Li(5, x, f"({c})/33") for c, x in li5] + rest,
    ))

records["weight5"].append(dict(
    id="li2-golden-mphi", weight=2, status="proved",
    anchor="dilogarithm value at minus the golden ratio",
    params=[], modes=["numeric"],
    lhs=[Li(2, "-phi")],
    rhs=[Z("-3/5", 2), P("-1", LOG("phi", 2))],
))
records["weight5"].append(dict(
    id="li2-golden-phiinv2", weight=2, status="proved",
    anchor="dilogarithm value at the inverse square of the golden ratio",
    params=[], modes=["numeric"],
    lhs=[Li(2, "phi^-2")],
    rhs=[Z("2/5", 2), P("-1", LOG("phi", 2))],
))
records["weight5"].append(dict(
    id="li2-golden-phiinv", weight=2, status="proved",
    anchor="dilogarithm value at the inverse golden ratio",
    params=[], modes=["numeric"],
    lhs=[Li(2, "phi^-1")],
    rhs=[Z("3/5", 2), P("-1", LOG("phi", 2))],
))
records["weight5"].append(dict(
    id="li2-golden-mphiinv", weight=2, status="proved",
    anchor="dilogarithm value at minus the inverse golden ratio",
    params=[], modes=["numeric"],
    lhs=[Li(2, "-phi^-1")],
    rhs=[Z("-2/5", 2), P("1/2", LOG("phi", 2))],
))

_thirds_li5 = [("1/16", "1/9"), ("21/2", "1/4"), ("36", "1/3"), ("-100", "1/2"),
               ("-60", "2/3"), ("69/2", "3/4"), ("-2", "8/9")]
records["weight5"].append(dict(
    id="ladder-thirds-clean", weight=5, status="proved",
    anchor="clean ladder for S(3,2) at 1/9 and 1/3",
    params=[], modes=["clean_numeric"],
    lhs=[cS2(3, "1/9"), cS2(3, "1/3", "-6")],
    rhs=[cL(5, x, f"({c})") for c, x in _thirds_li5] + [Z("1855/12", 5)],
))
records["weight5"].append(dict(
    id="ladder-thirds-analytic", weight=5, status="proved",
    anchor="analytic ladder for S(3,2) at 1/9 and 1/3 with explicit products",
    params=[], modes=["numeric"],
    lhs=[S(3, 2, "1/9"), S(3, 2, "1/3", "-6")],
    rhs=[Li(5, x, f"({c})") for c, x in _thirds_li5] + [
        Z("1855/24", 5),
        P("6", Li(4, "1/3"), LOG("2/3")),
        P("-1", Li(4, "1/9"), LOG("8/9")),
        P("128/3", ZETA(2), LOG("2", 3)),
        P("-84", ZETA(2), LOG("2", 2), LOG("3")),
        P("54", ZETA(2), LOG("2"), LOG("3", 2)),
        P("-61/6", ZETA(2), LOG("3", 3)),
        P("-1", ZETA(3), Li(2, "1/9")),
        P("6", ZETA(3), Li(2, "1/3")),
        P("52", ZETA(4), LOG("2")),
        P("-239/4", ZETA(4), LOG("3")),
        P("-67/6", LOG("2", 5)),
        P("23", LOG("2", 4), LOG("3")),
        P("-23", LOG("2", 3), LOG("3", 2)),
        P("17", LOG("2", 2), LOG("3", 3)),
        P("-33/4", LOG("2"), LOG("3", 4)),
        P("19/12", LOG("3", 5)),
    ],
))
records["weight5"].append(dict(
    id="li2-thirds", weight=2, status="proved",
    anchor="dilogarithm ladder at 1/9 and 1/3",
    params=[], modes=["numeric"],
    lhs=[Li(2, "1/9"), Li(2, "1/3", "-6")],
    rhs=[Z("-2", 2), P("1", LOG("3", 2))],
))

_sqrt2_terms = [
    ("14", "-beta^5/alpha"), ("28", "alpha*beta^4"), ("62", "alpha*beta^3"),
    ("-252", "-beta^3"), ("44", "beta^3/alpha"), ("-574", "alpha*beta^2"),
    ("-252", "beta^2/alpha"), ("-22", "-beta^2/alpha"), ("354", "alpha*beta"),
    ("-252", "-alpha*beta"), ("-2488", "beta"), ("-2896", "-beta"),
    ("70", "beta/alpha"), ("28", "-beta/alpha^2"), ("1260", "alpha"),
    ("1824", "-alpha"),
]
records["weight5"].append(dict(
    id="ladder-sqrt2-clean", weight=5, status="proved",
    anchor="clean ladder for S(3,2) built on the sqrt(2)-1 dilogarithm ladder",
    params=[], modes=["clean_numeric"],
    lhs=[cS2(3, "alpha^2"), cS2(3, "alpha", "-4")],
    rhs=[cL(5, x, f"({c})/117") for c, x in _sqrt2_terms] + [Z("-659/117", 5)],
))
records["weight5"].append(dict(
    id="li2-sqrt2", weight=2, status="proved",
    anchor="dilogarithm ladder at sqrt(2)-1",
    params=[], modes=["numeric"],
    lhs=[Li(2, "alpha^2"), Li(2, "alpha", "-4")],
    rhs=[P("1", LOG("alpha", 2)), Z("-3/2", 2)],
))

records["weight5"].append(dict(
    id="omega-ladder", weight=5, status="proved",
    anchor="clean ladder for S(3,2) at powers of the real root of u^3+u^2-1 "
           "(depth-one coefficients fitted numerically, not printed values)",
    params=[], modes=["clean_numeric"], kind="omega-ladder",
))

records["weight5"].append(dict(
    id="zagier-w5-ladder", weight=5, status="proved",
    anchor="single-valued weight-5 ladder at -1/8, -1/2, 1/2",
    params=[], modes=["clean_numeric"],
    lhs=[zL(5, "-1/8"), zL(5, "-1/2", "-162"), zL(5, "1/2", "-126")],
    rhs=[Z("403/16", 5)],
))
records["weight5"].append(dict(
    id="li5-lewin-ladder", weight=5, status="proved",
    anchor="analytic weight-5 ladder at -1/8, -1/2, 1/2 with product terms",
    params=[], modes=["numeric"],
    lhs=[Li(5, "-1/8"), Li(5, "-1/2", "-162"), Li(5, "1/2", "-126")],
    rhs=[Z("403/16", 5), P("-3/8", LOG("2", 5)),
         P("3/2", ZETA(2), LOG("2", 3)), P("-15", ZETA(4), LOG("2"))],
))

# clean reflection / inversion of the clean Nielsen functions
records["weight5"].append(dict(
    id="clean-reflection-22", weight=4, status="proved",
    anchor="clean reflection: S^sh(2,2)(z) + S^sh(2,2)(1-z) is constant zero",
    params=[ZP], modes=["clean_numeric"],
    lhs=[cS2(2, "z"), cS2(2, "1-z")],
    rhs=[],
))
for n in (2, 3, 4):
    const = []
    if (n + 2) % 2 == 1:
        from fractions import Fraction as _F
        import math
        q = _F(2 * ((n + 2) + 2 * math.comb(n + 2, 2)), (n + 2) ** 2)
        const = [Z(str(q), n + 2)]
    records["weight5" if n == 3 else ("general" if n == 2 else "weight6")].append(dict(
        id=f"clean-inversion-{n}2", weight=n + 2, status="proved",
        anchor=f"clean inversion for S^sh({n},2) against S^sh({n},2) and the clean Li",
        params=[ZP], modes=["clean_numeric"],
        lhs=[cS2(n, "1/z")],
        rhs=[cS2(n, "z", str((-1) ** n)), cL(n + 2, "z", str(-n * (-1) ** n))] + const,
    ))

# ---------------------------------------------------------------------- w6
records["weight6"].append(dict(
    id="s33-reduce", weight=6, status="proved",
    anchor="depth reduction of S(3,3) to S(4,2) and Li_6",
    params=[ZP], modes=["numeric", "symbol", "invariant"],
    lhs=[S(3, 3, "z")],
    rhs=[
        S(4, 2, "z"), S(4, 2, "1-z", "-1"),
        Li(6, "1-z"), Li(6, "z", "-1"), Li(6, "z/(z-1)", "-1"),
        P("-1", S(3, 2, "z"), LOG("1-z")),
        P("1", Li(5, "z"), LOG("1-z")),
        P("-1", Li(5, "1-z"), LOG("z")),
        P("-1/2", Li(4, "z"), LOG("1-z", 2)),
        P("-1/720", LOG("1-z", 6)),
        P("1/120", LOG("z"), LOG("1-z", 5)),
        P("-1/48", LOG("z", 2), LOG("1-z", 4)),
        P("-1/24", ZETA(2), LOG("1-z", 4)),
        P("1/6", ZETA(2), LOG("z"), LOG("1-z", 3)),
        P("1/2", ZETA(3), LOG("z"), LOG("1-z", 2)),
        P("1", ZETA(4), LOG("z"), LOG("1-z")),
        P("-3/8", ZETA(4), LOG("1-z", 2)),
        P("1", ZETA(5), LOG("z")),
        P("1", ZETA(5), LOG("1-z")),
        P("-1", ZETA(2), ZETA(3), LOG("1-z")),
        Z("-1/4", 6), P("-1/2", ZETA(3, 2)),
    ],
))

records["weight6"].append(dict(
    id="s33-half", weight=6, status="proved",
    anchor="special value S(3,3)(1/2)",
    params=[], modes=["numeric"],
    lhs=[S(3, 3, "1/2")],
    rhs=[
        P("1", Li(5, "1/2"), LOG("2")),
        P("1/2", Li(4, "1/2"), LOG("2", 2)),
        Z("23/32", 6), P("-1/2", ZETA(3, 2)),
        P("-63/32", ZETA(5), LOG("2")),
        P("1/2", ZETA(2), ZETA(3), LOG("2")),
        P("1/2", ZETA(4), LOG("2", 2)),
        P("-1/24", ZETA(2), LOG("2", 4)),
        P("1/90", LOG("2", 6)),
    ],
))

records["weight6"].append(dict(
    id="s33-m1-via-s42", weight=6, status="proved",
    anchor="S(3,3)(-1) in terms of S(4,2)(-1) and S(4,2)(1/2)",
    params=[], modes=["numeric"],
    lhs=[S(3, 3, "-1")],
    rhs=[
        S(4, 2, "-1"), S(4, 2, "1/2", "-1"),
        Li(6, "1/2", "2"),
        P("1", Li(5, "1/2"), LOG("2")),
        Z("-41/32", 6), P("-1/2", ZETA(3, 2)),
        P("-1/32", ZETA(5), LOG("2")),
        P("1/2", ZETA(2), ZETA(3), LOG("2")),
        P("1/16", ZETA(4), LOG("2", 2)),
        P("-1/6", ZETA(3), LOG("2", 3)),
        P("1/24", ZETA(2), LOG("2", 4)),
        P("-1/240", LOG("2", 6)),
    ],
))

records["weight6"].append(dict(
    id="s42-threeterm", weight=6, status="proved",
    anchor="three-term identity for S(4,2) parallel to the trilogarithm relation",
    params=[ZP], modes=["numeric", "symbol", "invariant"],
    lhs=[S(4, 2, "1-z"), S(4, 2, "z"), S(4, 2, "z/(z-1)")],
    rhs=[
        Li(6, "1-z", "2"), Li(6, "z", "2"), Li(6, "z/(z-1)", "2"),
        P("-1", Li(5, "z"), LOG("1-z")),
        P("1", Li(5, "z/(z-1)"), LOG("1-z")),
        P("-1", Li(5, "1-z"), LOG("z")),
        P("-1/240", LOG("1-z", 6)),
        P("1/60", LOG("z"), LOG("1-z", 5)),
        P("-1/48", LOG("z", 2), LOG("1-z", 4)),
        P("-1/12", ZETA(2), LOG("1-z", 4)),
        P("1/6", ZETA(2), LOG("z"), LOG("1-z", 3)),
        P("-1/6", ZETA(3), LOG("1-z", 3)),
        P("1/2", ZETA(3), LOG("z"), LOG("1-z", 2)),
        P("-7/8", ZETA(4), LOG("1-z", 2)),
        P("1", ZETA(4), LOG("z"), LOG("1-z")),
        P("1", ZETA(5), LOG("z")),
        P("-1", ZETA(2), ZETA(3), LOG("1-z")),
        P("-1/2", ZETA(3, 2)), Z("-5/4", 6),
    ],
))

records["weight6"].append(dict(
    id="s33-m1-simpler", weight=6, status="proved",
    anchor="S(3,3)(-1) against S(4,2)(-1) alone",
    params=[], modes=["numeric"],
    lhs=[S(3, 3, "-1")],
    rhs=[S(4, 2, "-1", "3/2"), Z("5/16", 6), P("-1/4", ZETA(3, 2))],
))

records["weight6"].append(dict(
    id="s33-sixthroot", weight=6, status="proved",
    anchor="evaluation of S(3,3) at the primitive sixth root of unity",
    params=[], modes=["numeric"],
    lhs=[S(3, 3, "zeta6")],
    rhs=[
        Li(6, "zeta6", "3"),
        P("-1/2", ZETA(3, 2)),
        Z("-1829/1944", 6),
        P("1/3", NUM(1, "i*pi"), S(3, 2, "zeta6")),
        P("-2/3", NUM(1, "i*pi"), ZETA(5)),
        P("1/3", ZETA(2), Li(4, "zeta6")),
        P("1/324", NUM(1, "(2*i*pi)^3"), ZETA(3)),
    ],
))

records["weight6"].append(dict(
    id="s42-half-twoterm", weight=6, status="proved",
    anchor="two-term evaluation S(4,2)(-1) + 2 S(4,2)(1/2)",
    params=[], modes=["numeric"],
    lhs=[S(4, 2, "-1"), S(4, 2, "1/2", "2")],
    rhs=[
        Li(6, "1/2", "4"),
        P("2", Li(5, "1/2"), LOG("2")),
        Z("-51/16", 6), P("-1/2", ZETA(3, 2)),
        P("-1/16", ZETA(5), LOG("2")),
        P("1", ZETA(2), ZETA(3), LOG("2")),
        P("1/8", ZETA(4), LOG("2", 2)),
        P("-1/3", ZETA(3), LOG("2", 3)),
        P("1/12", ZETA(2), LOG("2", 4)),
        P("-1/120", LOG("2", 6)),
    ],
))

for (a, b) in ((1, 1), (1, 2), (2, -3), (1, 3)):
    records["weight6"].append(dict(
        id=f"s42-family-{a}-{b}", weight=6, status="proved",
        anchor=f"algebraic trilogarithm-family reduction of S(4,2), case a={a}, b={b}",
        params=[], modes=["symbol", "clean_numeric"], kind="family",
        family="s42", a=a, b=b,
    ))

records["conjectural"].append(dict(
    id="s42-m1-reduction", weight=6, status="conjectural",
    anchor="candidate reduction of S(4,2)(-1) to classical polylogarithms",
    params=[], modes=["numeric"],
    lhs=[S(4, 2, "-1")],
    rhs=[
        Li(6, "-1/8", "1/39"), Li(6, "-1/2", "-162/13"), Li(6, "1/2", "-126/13"),
        Z("-1787/624", 6), P("3/8", ZETA(3, 2)),
        P("31/16", ZETA(5), LOG("2")),
        P("-15/26", ZETA(4), LOG("2", 2)),
        P("3/104", ZETA(2), LOG("2", 4)),
        P("-1/208", LOG("2", 6)),
    ],
))
records["conjectural"].append(dict(
    id="s42-half-reduction", weight=6, status="conjectural",
    anchor="candidate reduction of S(4,2)(1/2) to classical polylogarithms",
    params=[], modes=["numeric"],
    lhs=[S(4, 2, "1/2")],
    rhs=[
        Li(6, "-1/8", "-1/78"), Li(6, "-1/2", "162/26"), Li(6, "1/2", "178/26"),
        P("-7/16", ZETA(3, 2)), Z("-101/624", 6),
        P("1", Li(5, "1/2"), LOG("2")),
        P("-1", ZETA(5), LOG("2")),
        P("1/2", ZETA(2), ZETA(3), LOG("2")),
        P("73/208", ZETA(4), LOG("2", 2)),
        P("-1/6", ZETA(3), LOG("2", 3)),
        P("17/624", ZETA(2), LOG("2", 4)),
        P("-11/6240", LOG("2", 6)),
    ],
))
records["conjectural"].append(dict(
    id="s33-m1-reduction", weight=6, status="conjectural",
    anchor="candidate reduction of S(3,3)(-1) to classical polylogarithms",
    params=[], modes=["numeric"],
    lhs=[S(3, 3, "-1")],
    rhs=[
        Li(6, "-1/8", "1/26"), Li(6, "-1/2", "-486/26"), Li(6, "1/2", "-378/26"),
        P("5/16", ZETA(3, 2)), Z("-1657/416", 6),
        P("93/32", ZETA(5), LOG("2")),
        P("-45/52", ZETA(4), LOG("2", 2)),
        P("9/208", ZETA(2), LOG("2", 4)),
        P("-3/416", LOG("2", 6)),
    ],
))

records["weight6"].append(dict(
    id="li3-m1", weight=3, status="proved",
    anchor="trilogarithm value at -1",
    params=[], modes=["numeric"],
    lhs=[Li(3, "-1")], rhs=[Z("-3/4", 3)],
))
records["weight6"].append(dict(
    id="li3-phiinv2", weight=3, status="proved",
    anchor="trilogarithm value at the inverse square of the golden ratio",
    params=[], modes=["numeric"],
    lhs=[Li(3, "phi^-2")],
    rhs=[Z("4/5", 3), P("-4/5", ZETA(2), LOG("phi")), P("2/3", LOG("phi", 3))],
))

records["weight6"].append(dict(
    id="zeta15bar-s42", weight=6, status="proved",
    anchor="the alternating double zeta (1, 5bar) equals S(4,2)(-1)",
    params=[], modes=["numeric"],
    lhs=[T(1, "amzv", ks=[1, 5], signs=[1, -1])],
    rhs=[S(4, 2, "-1")],
))
records["weight6"].append(dict(
    id="zeta1113bar", weight=6, status="proved",
    anchor="weight-6 alternating zeta combination reduced to polylogarithms",
    params=[], modes=["numeric"],
    lhs=[T(1, "amzv", ks=[1, 1, 1, 3], signs=[1, 1, 1, -1]),
         T("-1/2", "amzv", ks=[1, 5], signs=[1, -1])],
    rhs=[
        Li(6, "1/2", "2"),
        P("2", Li(5, "1/2"), LOG("2")),
        P("1", Li(4, "1/2"), LOG("2", 2)),
        P("-1/4", ZETA(3, 2)),
        P("7/24", ZETA(3), LOG("2", 3)),
        Z("-53/32", 6),
        P("1/36", LOG("2", 6)),
        P("-1/8", ZETA(2), LOG("2", 4)),
    ],
))
records["weight6"].append(dict(
    id="zeta13bar", weight=4, status="proved",
    anchor="the alternating double zeta (1, 3bar) in classical values",
    params=[], modes=["numeric"],
    lhs=[T(1, "amzv", ks=[1, 3], signs=[1, -1])],
    rhs=[
        Li(4, "1/2", "2"), Z("-15/8", 4),
        P("7/4", ZETA(3), LOG("2")),
        P("-1/2", ZETA(2), LOG("2", 2)),
        P("1/12", LOG("2", 4)),
    ],
))
records["weight6"].append(dict(
    id="zeta113bar", weight=5, status="proved",
    anchor="the alternating zeta (1, 1, 3bar) in classical values",
    params=[], modes=["numeric"],
    lhs=[T(1, "amzv", ks=[1, 1, 3], signs=[1, 1, -1])],
    rhs=[
        Li(5, "1/2", "-2"),
        P("-2", Li(4, "1/2"), LOG("2")),
        Z("33/32", 5),
        P("1/2", ZETA(2), ZETA(3)),
        P("-7/8", ZETA(3), LOG("2", 2)),
        P("1/3", ZETA(2), LOG("2", 3)),
        P("-1/15", LOG("2", 5)),
    ],
))

records["conjectural"].append(dict(
    id="s42-phi-reduction", weight=6, status="conjectural",
    anchor="candidate reduction of S(4,2) at the inverse square of the golden ratio",
    params=[], modes=["numeric"],
    lhs=[S(4, 2, "phi^-2")],
    rhs=[
        Li(6, "phi^-6", "2/396"), Li(6, "phi^-3", "-128/396"),
        Li(6, "phi^-2", "801/396"), Li(6, "phi^-1", "-576/396"),
        Z("35/99", 6), P("2/5", ZETA(3, 2)),
        P("1", Li(5, "phi^-2"), LOG("phi")),
        P("-1", ZETA(5), LOG("phi")),
        P("2/11", ZETA(4), LOG("phi", 2)),
        P("-1", ZETA(3), Li(3, "phi^-2")),
        P("10/33", ZETA(2), LOG("phi", 4)),
        P("-79/990", LOG("phi", 6)),
    ],
))

# ---------------------------------------------------------------------- w7
records["weight7"].append(dict(
    id="s43-reduce", weight=7, status="proved",
    anchor="depth reduction of S(4,3) to S(5,2) and Li_7, modulo products",
    params=[], modes=["symbol", "invariant"],
    lhs=[S(4, 3, "z")],
    rhs=[
        S(5, 2, "1-z", "-1"), S(5, 2, "z", "2"), S(5, 2, "z/(z-1)"),
        Li(7, "1-z", "2"), Li(7, "z", "-3"), Li(7, "z/(z-1)", "-3"),
    ],
))

records["weight7"].append(dict(
    id="s52-m1", weight=7, status="proved",
    anchor="special value S(5,2)(-1)",
    params=[], modes=["numeric"],
    lhs=[S(5, 2, "-1")],
    rhs=[Z("-251/128", 7), P("1/2", ZETA(2), ZETA(5)), P("7/8", ZETA(3), ZETA(4))],
))

records["weight7"].append(dict(
    id="s43-m1", weight=7, status="proved",
    anchor="evaluation of S(4,3)(-1) through S(5,2)(1/2)",
    params=[], modes=["numeric"],
    lhs=[S(4, 3, "-1")],
    rhs=[
        S(5, 2, "1/2", "2"), Li(7, "1/2", "-6"),
        P("2", S(4, 2, "1/2"), LOG("2")),
        P("-6", Li(6, "1/2"), LOG("2")),
        P("-2", Li(5, "1/2"), LOG("2", 2)),
        Z("-31/32", 7),
        P("2", ZETA(2), ZETA(5)),
        P("11/4", ZETA(4), ZETA(3)),
        P("1/32", ZETA(5), LOG("2", 2)),
        P("-1/2", ZETA(2), ZETA(3), LOG("2", 2)),
        P("-1/12", ZETA(4), LOG("2", 3)),
        P("1/4", ZETA(3), LOG("2", 4)),
        P("-1/15", ZETA(2), LOG("2", 5)),
        P("1/140", LOG("2", 7)),
    ],
))

records["weight7"].append(dict(
    id="s43-half", weight=7, status="proved",
    anchor="evaluation of S(4,3)(1/2) through S(5,2)(1/2)",
    params=[], modes=["numeric"],
    lhs=[S(4, 3, "1/2")],
    rhs=[
        S(5, 2, "1/2"), Li(7, "1/2", "-1"),
        P("-1", S(4, 2, "-1"), LOG("2")),
        P("-1", S(4, 2, "1/2"), LOG("2")),
        P("3", Li(6, "1/2"), LOG("2")),
        P("3/2", Li(5, "1/2"), LOG("2", 2)),
        Z("255/128", 7),
        P("-1/2", ZETA(2), ZETA(5)),
        P("-1/8", ZETA(4), ZETA(3)),
        P("-125/32", ZETA(6), LOG("2")),
        P("15/16", ZETA(5), LOG("2", 2)),
        P("1/2", ZETA(2), ZETA(3), LOG("2", 2)),
        P("-1/12", ZETA(4), LOG("2", 3)),
        P("-5/24", ZETA(3), LOG("2", 4)),
        P("7/120", ZETA(2), LOG("2", 5)),
        P("-2/315", LOG("2", 7)),
    ],
))

for (a, b) in ((1, 1), (1, 2), (2, -3), (1, 3)):
    records["weight7"].append(dict(
        id=f"s52-family-{a}-{b}", weight=7, status="proved",
        anchor=f"simultaneous weight-2/weight-4 family reduction of S(5,2), case a={a}, b={b}",
        params=[], modes=["symbol", "clean_numeric"], kind="family",
        family="s52", a=a, b=b,
    ))

records["weight7"].append(dict(
    id="s52-23units", weight=7, status="proved",
    anchor="clean S(5,2) evaluation on exceptional units supported at 2 and 3",
    params=[], modes=["clean_numeric"],
    lhs=[cS2(5, "-1/2", "2/3"), cS2(5, "-1/3", "-1"), cS2(5, "1/4", "-1/3"),
         cS2(5, "1/3"), cS2(5, "2/3", "-2"), cS2(5, "3/4", "-1/2")],
    rhs=[cL(7, "-1/2", "14/9"), cL(7, "1/4", "-8/9"),
         cL(7, "1/3", "3/2"), cL(7, "3/4", "-7/4"), Z("-10/3", 7)],
))

records["weight7"].append(dict(
    id="s52-m1-clean", weight=7, status="proved",
    anchor="clean special value S^sh(5,2)(-1)",
    params=[], modes=["clean_numeric"],
    lhs=[cS2(5, "-1")],
    rhs=[Z("-251/64", 7)],
))

_alpha2_terms = [
    ("1/1105", "-2048/2187"), ("-77443/195", "-3/4"), ("23501/663", "-2/3"),
    ("-32842/9945", "-9/16"), ("-1049696/255", "-1/2"), ("217/34", "-4/9"),
    ("217/765", "-27/64"), ("-26449/2210", "-3/8"), ("16321/9945", "-1/3"),
    ("-2420/1989", "-8/27"), ("-51647/884", "-1/4"), ("2648/221", "-2/9"),
    ("-3140/663", "-1/6"), ("-18/1105", "-32/243"), ("3932/1105", "-1/8"),
    ("-21139/9945", "-1/9"), ("-307/1530", "-3/32"), ("-217/51", "-1/12"),
    ("83/6630", "-27/512"), ("-3167/3978", "-1/24"), ("9359/9945", "-1/27"),
    ("-88/3315", "-1/32"), ("77/3978", "-1/48"), ("328/663", "-1/54"),
    ("217/3060", "-1/64"), ("-61/6630", "-2/243"), ("31/1020", "-1/324"),
    ("12/1105", "-1/384"), ("-7/2210", "-1/4374"), ("-29/1105", "1/243"),
    ("23/2210", "3/128"), ("-217/612", "1/27"), ("294/221", "2/27"),
    ("-5268/1105", "1/12"), ("-84341/19890", "1/8"), ("48827/1989", "1/6"),
    ("-217/102", "3/16"), ("4895/1989", "2/9"), ("-985027/39780", "1/3"),
    ("109586/9945", "3/8"), ("1253/13260", "32/81"), ("-1049557/255", "1/2"),
    ("-1174/3315", "16/27"), ("67273/663", "2/3"), ("-4447459/9945", "3/4"),
    ("7859/6630", "27/32"), ("643/306", "8/9"), ("-31/1020", "243/256"),
]
records["conjectural"].append(dict(
    id="alpha2-candidate", weight=7, status="conjectural",
    anchor="candidate clean S(5,2) reduction on the second Bloch kernel element",
    params=[], modes=["clean_numeric"],
    lhs=[cS2(5, "-1/2", "10"), cS2(5, "-1/8"), cS2(5, "1/4", "-8"), cS2(5, "1/2", "22")],
    rhs=[cL(7, x, f"({c})") for c, x in _alpha2_terms] + [Z("4241/1105", 7)],
))

# ---------------------------------------------------------------------- w8
records["weight8"].append(dict(
    id="s44-reduce", weight=8, status="proved",
    anchor="depth reduction of S(4,4) to S(5,3), S(6,2) and Li_8, modulo products",
    params=[], modes=["symbol", "invariant"],
    lhs=[S(4, 4, "z")],
    rhs=[
        S(5, 3, "z", "2"), S(6, 2, "1-z", "-1"), S(6, 2, "z", "-3"),
        S(6, 2, "z/(z-1)", "-1"),
        Li(8, "1-z", "2"), Li(8, "z", "4"), Li(8, "z/(z-1)", "4"),
    ],
))

records["weight8"].append(dict(
    id="s62-s53-m1", weight=8, status="proved",
    anchor="zeta evaluation of the coproduct-matched pair at -1",
    params=[], modes=["numeric"],
    lhs=[S(6, 2, "-1", "5/2"), S(5, 3, "-1", "-1")],
    rhs=[Z("-917/768", 8), P("1/2", ZETA(3), ZETA(5)),
         P("1/4", ZETA(2), ZETA(3, 2))],
))

records["weight8"].append(dict(
    id="s53-ref", weight=8, status="proved",
    anchor="two-term reflection for S(5,3) modulo products",
    params=[], modes=["symbol", "invariant"],
    lhs=[S(5, 3, "1-z"), S(5, 3, "z")],
    rhs=[
        S(6, 2, "1-z", "2"), S(6, 2, "z", "2"), S(6, 2, "z/(z-1)"),
        Li(8, "1-z", "-3"), Li(8, "z", "-3"), Li(8, "z/(z-1)", "-3"),
    ],
))

records["weight8"].append(dict(
    id="s53-half", weight=8, status="proved",
    anchor="evaluation of S(5,3)(1/2) through S(6,2)",
    params=[], modes=["numeric"],
    lhs=[S(5, 3, "1/2")],
    rhs=[
        S(6, 2, "1/2", "2"), S(6, 2, "-1", "1/2"),
        Li(8, "1/2", "-3"),
        P("-2", Li(7, "1/2"), LOG("2")),
        P("1", S(5, 2, "1/2"), LOG("2")),
        P("-1/2", Li(6, "1/2"), LOG("2", 2)),
        Z("2311/768", 8),
        P("1/4", ZETA(2), ZETA(3, 2)),
        P("-1/2", ZETA(3), ZETA(5)),
        P("-255/128", ZETA(7), LOG("2")),
        P("1/8", ZETA(4), ZETA(3), LOG("2")),
        P("1/2", ZETA(2), ZETA(5), LOG("2")),
        P("23/64", ZETA(6), LOG("2", 2)),
        P("-1/4", ZETA(3, 2), LOG("2", 2)),
        P("-1/3", ZETA(5), LOG("2", 3)),
        P("1/6", ZETA(2), ZETA(3), LOG("2", 3)),
        P("5/96", ZETA(4), LOG("2", 4)),
        P("-1/40", ZETA(3), LOG("2", 5)),
        P("1/240", ZETA(2), LOG("2", 6)),
        P("-1/4032", LOG("2", 8)),
    ],
))

for (a, b) in ((1, 1), (1, 2), (2, -3), (1, 3)):
    records["weight8"].append(dict(
        id=f"s53-family-{a}-{b}", weight=8, status="proved",
        anchor=f"algebraic family reduction of S(5,3) to S(6,2) and Li_8, case a={a}, b={b}",
        params=[], modes=["symbol"], kind="family",
        family="s53", a=a, b=b,
    ))

_lambda_terms = [
    ("50508755462288597796", -1, 11, -7),
    ("69841566365930200554764814", -1, -2, 1),
    ("-775364232778811798418105642", -1, 1, -1),
    ("9614338651927197388368", -1, -7, 4),
    ("356655652241330545382160", -1, -4, 2),
    ("22509382601419271262985124160", -1, -1, 0),
    ("126912035059272811134", -1, 10, -7),
    ("-94164506374654687219920", -1, 2, -2),
    ("-14944644124416655455996", -1, -6, 3),
    ("578363469392155525327836", -1, -3, 1),
    ("-1389650271294609827123449194", -1, 0, -1),
    ("142150983452642605772646", -1, 3, -3),
    ("234866506563215285097901896", -1, -2, 0),
    ("-2156235930824838852840480", -1, 1, -2),
    ("545472150324080280895440", -1, -4, 1),
    ("52935763185068637077963640", -1, -1, -1),
    ("-1637817842535871022208", -1, 5, -5),
    ("-3832788189554116913056832", -1, -3, 0),
    ("-7534735430532974309850624", -1, 0, -2),
    ("229760377972981805891088", -1, -5, 1),
    ("1824486564349437387795018", -1, -2, -1),
    ("146288680291430373180960", -1, -1, -2),
    ("-1841986300588118314548", -1, -9, 3),
    ("-449734750753601709254502", -1, -3, -1),
    ("1026645718908856249515210", -1, 0, -3),
    ("104005977148977093591408", -1, -5, 0),
    ("98806808342364061998789", -1, -4, -1),
    ("-90845492233250820003624", -1, -1, -3),
    ("-856806635887547864148", -1, 2, -5),
    ("-1618278846243184730952", -1, -6, 0),
    ("-19002715158472937734824", -1, 1, -5),
    ("-865828810038222668088", -1, -2, -4),
    ("-6222083524060876926624", -1, -7, -1),
    ("-1110630706006093486416", -1, -9, 0),
    ("-738916774978949856954", -1, -6, -3),
    ("256696765017519764574", -1, -1, -7),
    ("-538995368726709238620", 1, -3, -6),
    ("2659063284848174620104", 1, 0, -5),
    ("26750471369678154671328", 1, -5, -1),
    ("-22869536297787068698224", 1, -7, 1),
    ("26750471369678154671328", 1, 0, -3),
    ("1178782871405313104861940", 1, -1, -2),
    ("521062220884439910260592", 1, 1, -3),
    ("2935816641298266366693024", 1, -2, -1),
    ("-310513457035175924880", 1, -11, 5),
    ("-1295961764172934408392024", 1, -3, 0),
    ("47361088156862575216815120", 1, -1, -1),
    ("96143386519271973883680", 1, -4, 1),
    ("6405316545334014067721724", 1, 1, -2),
    ("25072646886079199648640", 1, 3, -3),
    ("-1384706396500391342516779656", 1, 0, -1),
    ("8128823582861345906142336", 1, -3, 1),
    ("-7000414961399434681344", 1, 5, -4),
    ("22794254041869638225651427336", 1, -1, 0),
    ("116644982485749618488112", 1, 4, -3),
    ("-791724010495502232049202784", 1, 1, -1),
    ("48384399276356552737368768", 1, -2, 1),
    ("-118427126740566034100976", 1, -5, 3),
    ("421717883947747928801820", 1, 3, -2),
    ("2651619475018716827904", 1, -8, 5),
]
_lambda_scale = "-175442386671378179202538515"


def _lam_arg(sign, e2, e3):
    parts = []
    if e2:
        parts.append(f"2^{e2}" if e2 != 1 else "2")
    if e3:
        parts.append(f"3^{e3}" if e3 != 1 else "3")
    s = "*".join(parts) if parts else "1"
    return f"-({s})" if sign < 0 else s


_s62_tail = [
    P("-19402627481307724677394420487/5658362329180826944988958720", ZETA(8)),
    P("-614191658599101564926973/2508139330310650241573120", ZETA(6), LOG("2", 2)),
    P("-2886590561748348125557503/5894127426230028067696832", ZETA(6), LOG("2"), LOG("3")),
    P("156730163328824575308249123/943060388196804490831493120", ZETA(6), LOG("3", 2)),
    P("4333162707367886155376747/58941274262300280676968320", ZETA(4), LOG("2", 4)),
    P("-5659544278330031492868951/29470637131150140338484160", ZETA(4), LOG("2", 3), LOG("3")),
    P("14956296074710188358483053/58941274262300280676968320", ZETA(4), LOG("2", 2), LOG("3", 2)),
    P("-4904619219145722353667/40041626536888777633810", ZETA(4), LOG("2"), LOG("3", 3)),
    P("18073086979999367134054497/943060388196804490831493120", ZETA(4), LOG("3", 4)),
    P("-91321852215653745732887/55257444620906513134657800", ZETA(2), LOG("2", 6)),
    P("-1295653753433384401869/75372473481202404957760", ZETA(2), LOG("2", 5), LOG("3")),
    P("339723349179163751737503/5894127426230028067696832", ZETA(2), LOG("2", 4), LOG("3", 2)),
    P("-1084240497917160885726101/14735318565575070169242080", ZETA(2), LOG("2", 3), LOG("3", 3)),
    P("2552445606672179607323583/58941274262300280676968320", ZETA(2), LOG("2", 2), LOG("3", 4)),
    P("-176801938693662694517853/14735318565575070169242080", ZETA(2), LOG("2"), LOG("3", 5)),
    P("3078249389028940034364037/2357650970492011227078732800", ZETA(2), LOG("3", 6)),
    P("66439339984835171875512961/7072952911476033681236198400", LOG("2", 8)),
    P("-93928768086503200785586131/2062944599180509823693891200", LOG("2", 7), LOG("3")),
    P("30360617039303735894889903/294706371311501403384841600", LOG("2", 6), LOG("3", 2)),
    P("-40045462381407097906386587/294706371311501403384841600", LOG("2", 5), LOG("3", 3)),
    P("6559870959604648612738713/58941274262300280676968320", LOG("2", 4), LOG("3", 4)),
    P("-16638301041582761143511231/294706371311501403384841600", LOG("2", 3), LOG("3", 5)),
    P("10057243964473014455324631/589412742623002806769683200", LOG("2", 2), LOG("3", 6)),
    P("-1437747378492833287500083/515736149795127455923472800", LOG("2"), LOG("3", 7)),
    P("74287595521730329182293/401302292849704038651699200", LOG("3", 8)),
]

records["conjectural"].append(dict(
    id="s62-minus-one", weight=8, status="conjectural",
    anchor="candidate reduction of S(6,2)(-1) to the depth-two zeta value "
           "zeta(3,5), one large Li_8 combination, and products",
    params=[], modes=["numeric"],
    lhs=[S(6, 2, "-1")],
    rhs=[
        Li(8, _lam_arg(s, e2, e3), f"(-127/64)*({c})/({_lambda_scale})")
        for c, s, e2, e3 in _lambda_terms
    ] + [
        T("3/80", "zeta35"),
        P("15/16", ZETA(3), ZETA(5)),
        P("127/64", ZETA(7), LOG("2")),
    ] + _s62_tail,
    lambda_terms=[[c, s, e2, e3] for c, s, e2, e3 in _lambda_terms],
    lambda_scale=_lambda_scale,
))

# ----------------------------------------------------------------- general
for part in ("i", "ii", "iii"):
    records["anyweight"].append(dict(
        id=f"depthreduce-{part}", weight=0, status="proved",
        anchor=f"general-weight depth reduction, part ({part})",
        params=[], modes=["invariant"], kind="depthreduce",
        part=part, m_range=[1, 10],
    ))

records["anyweight"].append(dict(
    id="nielsen-ladder-w4", weight=4, status="proved",
    anchor="clean weight-4 instance of the general depth reduction; at the "
           "inverse golden ratio all arguments become powers of phi (a ladder)",
    params=[ZP], modes=["clean_numeric"],
    lhs=[cS2(2, "z")],
    rhs=[cL(4, "z"), cL(4, "1-z", "-1"), cL(4, "1-1/z", "-1")],
))

os.makedirs(OUT, exist_ok=True)
total = 0
for name, recs in records.items():
    path = os.path.join(OUT, f"{name}.json")
    with open(path, "w") as f:
        json.dump(recs, f, indent=1)
    total += len(recs)
    print(f"{name}: {len(recs)} records")
print("total:", total)
