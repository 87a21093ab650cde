"""Brute-force local invariants with sympy, independent of arcmodels.groebner.

local_dimension: saturate by polynomials that are units at the point, then
take the largest variable subset S with (I : u^oo) meeting k[S] only in 0.
edim: number of degree-one standard monomials of I + m^2 after moving the
point to the origin.
"""

from itertools import combinations

import sympy


def _gb(gens, syms, order="grevlex", modulus=None):
    opts = {"order": order}
    if modulus:
        opts["modulus"] = modulus
    return sympy.groebner(gens, *syms, **opts)


def saturate(gens, syms, unit, modulus=None):
    s = sympy.Symbol("_sat")
    G = _gb(list(gens) + [1 - s * unit], [s] + list(syms), "lex", modulus)
    return [g for g in G.exprs if s not in g.free_symbols]


def dimension(gens, syms, modulus=None):
    gens = [g for g in gens if g != 0]
    if not gens:
        return len(syms)
    if _gb(gens, syms, modulus=modulus).exprs == [1]:
        return -1
    for size in range(len(syms), -1, -1):
        for S in combinations(syms, size):
            rest = [v for v in syms if v not in S]
            G = _gb(gens, rest + list(S), "lex", modulus)
            if not any(g.free_symbols <= set(S) for g in G.exprs):
                return size
    return 0


def local_dimension(gens, syms, point, units=(), modulus=None):
    J = list(gens)
    for u in units:
        assert u.subs(dict(zip(syms, point))) != 0
        J = saturate(J, syms, u, modulus)
    return dimension(J, syms, modulus)


def edim(gens, syms, point, modulus=None):
    shifted = [sympy.expand(g.subs({v: v + c for v, c in zip(syms, point)}, simultaneous=True)) for g in gens]
    square = [a * b for a, b in combinations(syms, 2)] + [v**2 for v in syms]
    G = _gb(shifted + square, syms, modulus=modulus)
    leads = [sympy.Poly(g, *syms).monoms(order="grevlex")[0] for g in G.exprs]
    count = 0
    for i in range(len(syms)):
        mono = tuple(1 if k == i else 0 for k in range(len(syms)))
        if not any(all(a <= b for a, b in zip(lead, mono)) for lead in leads):
            count += 1
    return count
