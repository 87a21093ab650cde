"""Buchberger's algorithm, combinatorial dimension and elimination constructions.

Polynomials are handled internally as ``{exponent tuple: coefficient}`` dicts
over a FieldSpec; the public functions take and return MultiPoly objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import DomainMismatch, ResourceLimit
from .poly import MultiPoly, PolyRing


# -- monomial orders ------------------------------------------------------------


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """degrevlex, lex, or a block elimination order (degrevlex inside each block)."""

    name: str = "degrevlex"
    blocks: tuple = ()

    def key_function(self, nvars: int):
        if self.name == "degrevlex":
            return _grevlex_key
        if self.name == "lex":
            return lambda e: e
        if self.name == "elimination":
            if sum(self.blocks) != nvars:
                raise DomainMismatch(f"block sizes {self.blocks} do not cover {nvars} variables")
            cuts = []
            start = 0
            for b in self.blocks:
                cuts.append((start, start + b))
                start += b
            return lambda e: tuple(_grevlex_key(e[a:b]) for a, b in cuts)
        raise DomainMismatch(f"unknown monomial order {self.name!r}")

    def to_json(self):
        if self.name == "elimination":
            return {"name": self.name, "blocks": list(self.blocks)}
        return {"name": self.name}


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def elimination_order(*blocks: int) -> MonomialOrder:
    return MonomialOrder("elimination", tuple(blocks))


def parse_order(spec) -> MonomialOrder:
    if isinstance(spec, MonomialOrder):
        return spec
    if isinstance(spec, dict):
        return MonomialOrder(spec["name"], tuple(spec.get("blocks", ())))
    if spec in (None, "degrevlex", "grevlex"):
        return DEGREVLEX
    if spec == "lex":
        return LEX
    raise DomainMismatch(f"unknown monomial order {spec!r}")


# -- dict-polynomial kernel ---------------------------------------------------------


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Kernel:
    def __init__(self, F, key):
        self.F = F
        self.key = key

    def lead(self, p):
        return max(p, key=self.key)

    def monic(self, p):
        F = self.F
        lm = self.lead(p)
        inv = F.inv(p[lm])
        return {e: F.mul(inv, c) for e, c in p.items()}

    def sub_multiple(self, p, c, shift, g):
        """p - c * x^shift * g (in place on a copy)."""
        F = self.F
        out = dict(p)
        for e, a in g.items():
            e2 = tuple(x + y for x, y in zip(e, shift))
            v = F.sub(out.get(e2, F.zero()), F.mul(c, a))
            if F.is_zero(v):
                out.pop(e2, None)
            else:
                out[e2] = v
        return out

    def reduce(self, p, G, leads):
        """Full normal form of p modulo the monic polynomials G."""
        F = self.F
        p = dict(p)
        rem = {}
        key = self.key
        while p:
            lm = max(p, key=key)
            c = p[lm]
            for g, lg in zip(G, leads):
                if _divides(lg, lm):
                    p = self.sub_multiple(p, c, _sub_exp(lm, lg), g)
                    break
            else:
                rem[lm] = c
                del p[lm]
        return rem

    def spoly(self, f, g, lf, lg):
        F = self.F
        L = _lcm(lf, lg)
        out = {}
        for e, a in f.items():
            e2 = tuple(x + y for x, y in zip(e, _sub_exp(L, lf)))
            out[e2] = a
        return self.sub_multiple(out, F.one(), _sub_exp(L, lg), g)


# -- Groebner bases -------------------------------------------------------------------


@dataclass
class GroebnerBasis:
    ring: PolyRing
    order: MonomialOrder
    basis: list
    leading: list
    stats: dict

    def contains_one(self) -> bool:
        return any(sum(e) == 0 for e in self.leading)

    def reduce(self, f: MultiPoly) -> MultiPoly:
        K = _Kernel(self.ring.domain, self.order.key_function(self.ring.nvars))
        rem = K.reduce(f.terms, [g.terms for g in self.basis], self.leading)
        return MultiPoly(self.ring, rem)

    def contains(self, f: MultiPoly) -> bool:
        return self.reduce(f).is_zero()

    def to_json(self) -> dict:
        return {
            "order": self.order.to_json(),
            "variables": list(self.ring.variables),
            "basis": [str(g) for g in self.basis],
            "leading_monomials": [list(e) for e in self.leading],
            "stats": dict(self.stats),
        }


def _to_dicts(gens):
    gens = list(gens)
    if not gens:
        return None, []
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise DomainMismatch("generators live in different rings")
    return ring, [dict(g.terms) for g in gens if not g.is_zero()]


def buchberger(gens, order="degrevlex", ring: PolyRing | None = None, max_pairs: int | None = None,
               max_degree: int | None = None, max_basis: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm with normal selection.

    Pairs are taken by smallest lcm degree, ties broken by the generator
    indices and then by the lcm itself; the coprime and chain criteria
    discard useless pairs.  Exceeding a limit raises ResourceLimit.
    """
    order = parse_order(order)
    r0, polys = _to_dicts(gens)
    ring = ring or r0
    if ring is None:
        raise DomainMismatch("a ring is required for an empty generator list")
    F = ring.domain
    key = order.key_function(ring.nvars)
    K = _Kernel(F, key)
    G, leads = [], []
    pairs = set()
    stats = {"pairs_reduced": 0, "pairs_skipped": 0, "max_pair_degree": 0}

    def add(p):
        p = K.monic(p)
        lp = K.lead(p)
        k = len(G)
        G.append(p)
        leads.append(lp)
        if max_basis is not None and len(G) > max_basis:
            raise ResourceLimit(f"basis size exceeded {max_basis}", location="max_basis")
        for i in range(k):
            pairs.add((i, k))

    for p in polys:
        p = K.reduce(p, G, leads)
        if p:
            add(p)

    def pair_key(ij):
        i, j = ij
        L = _lcm(leads[i], leads[j])
        return (sum(L), i, j, L)

    while pairs:
        ij = min(pairs, key=pair_key)
        pairs.discard(ij)
        i, j = ij
        li, lj = leads[i], leads[j]
        if G[i] is None or G[j] is None:
            continue
        L = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            stats["pairs_skipped"] += 1
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j) or G[k] is None:
                continue
            if _divides(leads[k], L) and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            stats["pairs_skipped"] += 1
            continue
        deg = sum(L)
        if max_degree is not None and deg > max_degree:
            raise ResourceLimit(f"S-pair degree {deg} exceeds the bound {max_degree}", location="max_degree")
        stats["pairs_reduced"] += 1
        stats["max_pair_degree"] = max(stats["max_pair_degree"], deg)
        if max_pairs is not None and stats["pairs_reduced"] > max_pairs:
            raise ResourceLimit(f"more than {max_pairs} S-pairs reduced", location="max_pairs")
        live = [(g, lg) for g, lg in zip(G, leads) if g is not None]
        h = K.reduce(K.spoly(G[i], G[j], li, lj), [g for g, _ in live], [lg for _, lg in live])
        if h:
            add(h)
            if sum(K.lead(G[-1])) == 0:
                break

    basis = _reduce_basis(K, [g for g in G if g is not None])
    basis.sort(key=lambda g: key(K.lead(g)))
    leading = [K.lead(g) for g in basis]
    return GroebnerBasis(ring, order, [MultiPoly(ring, g) for g in basis], leading, stats)


def _reduce_basis(K, G):
    if any(all(x == 0 for x in K.lead(g)) for g in G):
        return [{tuple(0 for _ in K.lead(G[0])): K.F.one()}]
    leads = [K.lead(g) for g in G]
    keep = []
    for i, (g, lg) in enumerate(zip(G, leads)):
        dominated = False
        for j, lh in enumerate(leads):
            if j == i:
                continue
            if _divides(lh, lg) and (lh != lg or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        lg = K.lead(g)
        head = {lg: g[lg]}
        tail = {e: c for e, c in g.items() if e != lg}
        tail = K.reduce(tail, others, [K.lead(h) for h in others])
        head.update(tail)
        out.append(K.monic(head))
    return out


def is_groebner(gb: GroebnerBasis) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    F = gb.ring.domain
    K = _Kernel(F, gb.order.key_function(gb.ring.nvars))
    G = [K.monic(g.terms) for g in gb.basis]
    leads = [K.lead(g) for g in G]
    for i, j in combinations(range(len(G)), 2):
        if K.reduce(K.spoly(G[i], G[j], leads[i], leads[j]), G, leads):
            return False
    return True


# -- dimension ------------------------------------------------------------------------


class EmptyVariety:
    """Dimension marker for the unit ideal."""

    def __repr__(self):
        return "EmptyVariety"

    def __eq__(self, other):
        return isinstance(other, EmptyVariety)

    def __hash__(self):
        return hash("EmptyVariety")

    def to_json(self):
        return "empty"


EMPTY = EmptyVariety()


def dimension_from_leads(leads, nvars: int):
    """Largest size of a variable set containing the support of no leading monomial."""
    if any(sum(e) == 0 for e in leads):
        return EMPTY
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    # minimal supports suffice
    supports = [s for s in supports if not any(t < s for t in supports)]
    supports = list(set(supports))
    for size in range(nvars, -1, -1):
        for S in combinations(range(nvars), size):
            S = frozenset(S)
            if not any(s <= S for s in supports):
                return size
    return 0


def ideal_dimension(gb: GroebnerBasis):
    return dimension_from_leads(gb.leading, gb.ring.nvars)


# -- linear elimination ---------------------------------------------------------------------


def eliminate_linear(gens, ring: PolyRing | None = None):
    """Remove variables that occur linearly: a generator c*v + g with g free of v.

    Returns ``(remaining generators, remaining ring, substitutions)``; the
    quotient rings are isomorphic, so dimensions agree.
    """
    gens = [g for g in gens if not g.is_zero()]
    ring = ring or (gens[0].ring if gens else None)
    subs = {}
    changed = True
    while changed:
        changed = False
        for idx, g in enumerate(gens):
            v = _linear_variable(g)
            if v is None:
                continue
            name = ring.variables[v]
            e1 = tuple(1 if k == v else 0 for k in range(ring.nvars))
            c = g.terms[e1]
            F = ring.domain
            rest = MultiPoly(ring, {e: F.neg(F.div(a, c)) for e, a in g.terms.items() if e != e1})
            subs = {k: s.substitute({name: rest}) for k, s in subs.items()}
            subs[name] = rest
            gens = [h.substitute({name: rest}) for j, h in enumerate(gens) if j != idx]
            gens = [h for h in gens if not h.is_zero()]
            changed = True
            break
    left = [v for v in ring.variables if v not in subs]
    small = PolyRing(left, ring.domain)
    out = [_shrink(g, small) for g in gens]
    return out, small, subs


def _linear_variable(g: MultiPoly):
    """Index of a variable appearing only in a degree-one term of g (lowest index wins)."""
    n = g.ring.nvars
    for v in range(n):
        e1 = tuple(1 if k == v else 0 for k in range(n))
        if e1 not in g.terms:
            continue
        if all(e == e1 or e[v] == 0 for e in g.terms):
            return v
    return None


def _shrink(g: MultiPoly, small: PolyRing) -> MultiPoly:
    pos = [g.ring.index(v) for v in small.variables]
    dropped = [i for i in range(g.ring.nvars) if i not in pos]
    terms = {}
    for e, c in g.terms.items():
        if any(e[i] for i in dropped):
            raise DomainMismatch("eliminated variable survived substitution")
        terms[tuple(e[i] for i in pos)] = c
    return MultiPoly(small, terms)


def variety_dimension(gens, ring: PolyRing | None = None, order="degrevlex", **limits):
    """dim V(gens) via linear elimination followed by Buchberger."""
    gens = list(gens)
    ring = ring or gens[0].ring
    rest, small, subs = eliminate_linear(gens, ring)
    if not rest:
        return small.nvars, None
    gb = buchberger(rest, order, ring=small, **limits)
    return ideal_dimension(gb), gb


# -- elimination constructions ----------------------------------------------------------


def _fresh(ring: PolyRing, base: str = "t"):
    name = base
    k = 0
    while name in ring.variables:
        k += 1
        name = f"{base}{k}"
    return name


def eliminate(gens, names, ring: PolyRing | None = None, **limits):
    """Generators of the elimination ideal (gens) intersected with k[other variables]."""
    gens = list(gens)
    ring = ring or gens[0].ring
    names = list(names)
    others = [v for v in ring.variables if v not in names]
    big = PolyRing(names + others, ring.domain)
    moved = [g.change_ring(big) for g in gens]
    gb = buchberger(moved, elimination_order(len(names), len(others)), ring=big, **limits)
    target = PolyRing(others, ring.domain)
    out = []
    for g, lead in zip(gb.basis, gb.leading):
        if all(x == 0 for x in lead[: len(names)]):
            out.append(_shrink(g, target).change_ring(ring))
    return out


def ideal_intersect(I, J, ring: PolyRing | None = None, **limits):
    """I intersect J via t I + (1 - t) J with t eliminated."""
    I, J = list(I), list(J)
    ring = ring or (I + J)[0].ring
    t = _fresh(ring)
    big = ring.extend([t])
    tv = big.var(t)
    gens = [tv * f.change_ring(big) for f in I] + [(big.one() - tv) * g.change_ring(big) for g in J]
    inter = eliminate(gens, [t], ring=big, **limits)
    small = [_shrink(g, ring) for g in inter]
    return buchberger(small, "degrevlex", ring=ring, **limits).basis


def ideal_quotient(I, g: MultiPoly, ring: PolyRing | None = None, **limits):
    """I : g from the generators of I intersected with (g), each divided by g."""
    I = list(I)
    ring = ring or g.ring
    if g.is_zero():
        return [ring.one()]
    inter = ideal_intersect(I, [g], ring=ring, **limits)
    out = []
    for h in inter:
        q = exact_divide(h, g)
        out.append(q)
    return buchberger(out, "degrevlex", ring=ring, **limits).basis


def exact_divide(h: MultiPoly, g: MultiPoly) -> MultiPoly:
    """h / g for polynomials known to be divisible (multivariate long division)."""
    ring = h.ring
    F = ring.domain
    K = _Kernel(F, _grevlex_key)
    lg = K.lead(g.terms)
    cg = g.terms[lg]
    rem = dict(h.terms)
    quot = {}
    while rem:
        lm = K.lead(rem)
        if not _divides(lg, lm):
            raise DomainMismatch("polynomial is not divisible")
        c = F.div(rem[lm], cg)
        shift = _sub_exp(lm, lg)
        quot[shift] = F.add(quot.get(shift, F.zero()), c)
        rem = K.sub_multiple(rem, c, shift, g.terms)
    return MultiPoly(ring, {e: c for e, c in quot.items() if not F.is_zero(c)})
