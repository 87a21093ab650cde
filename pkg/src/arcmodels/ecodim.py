"""Embedding dimension and codimension at rational points, and the arc pipeline.

At a rational point p of V(I), with I generated by f_1..f_r in n variables,

    edim = n - rank Df(p),  height = n - dim_p V(I),  ecodim = height - rank Df(p).

The local dimension comes from supplied components (the largest one through
p) or, for an ideal declared equidimensional, from its global dimension.
Dimensions are computed after substituting away variables that occur
linearly, then by Buchberger and the leading-monomial count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundViolated, InconsistentComponents, MissingComponentData, PointNotOnVariety
from .groebner import EmptyVariety, buchberger, eliminate_linear, variety_dimension
from .jets import Arc, jacobian_order, select_split
from .linalg import rank
from .model import build_model, mu_Z, verify_membership
from .poly import MultiPoly, PolyRing
from .series import ord_is_finite, ord_to_json


@dataclass
class IdealPresentation:
    ring: PolyRing
    generators: list
    components: list | None = None
    equidimensional: bool = False

    def __post_init__(self):
        self.generators = list(self.generators)
        for g in self.generators:
            if g.ring != self.ring:
                raise InconsistentComponents("generators must share the ambient ring")
        if self.components is not None:
            self.components = [list(c) for c in self.components]
            for comp in self.components:
                for g in comp:
                    if g.ring != self.ring:
                        raise InconsistentComponents("component generators must share the ambient ring")

    @property
    def n(self) -> int:
        return self.ring.nvars

    def with_dummy_variables(self, names) -> "IdealPresentation":
        """Same ideal in a ring with extra unused variables."""
        big = self.ring.extend(list(names))
        move = lambda gs: [g.change_ring(big) for g in gs]  # noqa: E731
        comps = None if self.components is None else [move(c) for c in self.components]
        return IdealPresentation(big, move(self.generators), comps, self.equidimensional)


def _vanishes(gens, point, F) -> bool:
    return all(F.is_zero(g.eval_at_point(point)) for g in gens)


def _in_component(gens, comp, ring, limits) -> bool:
    """True when every generator of I lies in the component ideal."""
    rest, small, subs = eliminate_linear(comp, ring)
    gb = buchberger(rest, "degrevlex", ring=small, **limits) if rest else None
    for g in gens:
        h = g.substitute(subs) if subs else g
        pos = [ring.index(v) for v in small.variables]
        terms = {}
        for e, c in h.terms.items():
            terms[tuple(e[i] for i in pos)] = c
        h = MultiPoly(small, terms)
        if gb is None:
            if not h.is_zero():
                return False
        elif not gb.contains(h):
            return False
    return True


def jacobian_rank(gens, point, F) -> int:
    if not gens:
        return 0
    ring = gens[0].ring
    rows = [[g.partial_derivative(v).eval_at_point(point) for v in ring.variables] for g in gens]
    return rank(rows, F)


def ecodim_at_point(I: IdealPresentation, point, equidimensional: bool | None = None,
                    check_components: bool = True, **limits) -> dict:
    """EcodimReport as a dict (see the module docstring for the formulas)."""
    ring = I.ring
    F = ring.domain
    point = tuple(F.coerce(c) for c in point)
    if len(point) != ring.nvars:
        raise PointNotOnVariety(f"point has {len(point)} coordinates, ring has {ring.nvars}")
    if not _vanishes(I.generators, point, F):
        raise PointNotOnVariety("a generator does not vanish at the point")
    equi = I.equidimensional if equidimensional is None else equidimensional
    n = ring.nvars
    per_component = []
    if I.components:
        local = None
        for k, comp in enumerate(I.components):
            through = _vanishes(comp, point, F)
            dim, _ = variety_dimension(comp, ring, **limits)
            entry = {"index": k, "contains_point": through,
                     "dimension": dim.to_json() if isinstance(dim, EmptyVariety) else dim}
            if check_components:
                entry["contains_ideal"] = _in_component(I.generators, comp, ring, limits)
                if not entry["contains_ideal"]:
                    raise InconsistentComponents(f"component {k} does not contain the ideal")
            per_component.append(entry)
            if through and not isinstance(dim, EmptyVariety):
                local = dim if local is None else max(local, dim)
        if local is None:
            raise InconsistentComponents("no supplied component passes through the point")
        source = "components"
    elif equi:
        dim, _ = variety_dimension(I.generators, ring, **limits)
        if isinstance(dim, EmptyVariety):
            raise PointNotOnVariety("the ideal is the unit ideal")
        local = dim
        source = "equidimensional"
    else:
        raise MissingComponentData("supply components or declare the ideal equidimensional")
    rk = jacobian_rank(I.generators, point, F)
    height = n - local
    return {
        "point": [F.render(c) for c in point],
        "variables": list(ring.variables),
        "local_dimension": local,
        "dimension_source": source,
        "height": height,
        "jacobian_rank": rk,
        "edim": n - rk,
        "ecodim": height - rk,
        "components": per_component,
    }


def ecodim_profile(I: IdealPresentation, points, **kwargs) -> list:
    return [ecodim_at_point(I, p, **kwargs) for p in points]


def _component_polys(components, ring):
    from .parser import parse_poly

    out = []
    for comp in components:
        out.append([g if isinstance(g, MultiPoly) else parse_poly(g, ring, ring.domain) for g in comp])
    return out


def analyze_arc(F, arc: Arc, precision: int | None = None, z_components=None,
                equidimensional: bool = False, **limits) -> dict:
    """select_split -> d -> Z -> mu_Z(arc) -> ecodim, checked against ord of the Jacobian.

    ``z_components`` lists generator lists (strings or MultiPoly) in the model
    variables.  A violated bound raises BoundViolated.
    """
    F = list(F)
    if precision is not None:
        arc = arc.truncate(precision)
    split = select_split(F, arc)
    d = split.d
    m = len(F)
    ord_jac = jacobian_order(F, m, arc)
    if not ord_is_finite(ord_jac):
        raise PointNotOnVariety("every maximal minor vanishes to the working precision")
    model = build_model(split, d)
    out = {
        "d": d,
        "split": split.to_json(),
        "model": {"variables": list(model.variables), "equation_count": len(model.equations)},
        "jacobian_order": ord_to_json(ord_jac),
    }
    if d == 0:
        report = {"point": [], "variables": [], "local_dimension": 0, "dimension_source": "empty",
                  "height": 0, "jacobian_rank": 0, "edim": 0, "ecodim": 0, "components": []}
        out["mu_Z"] = []
    else:
        point = mu_Z(split, arc, d)
        if not verify_membership(model, point):
            raise PointNotOnVariety("mu_Z(arc) does not satisfy the model equations")
        comps = _component_polys(z_components, model.ring) if z_components else None
        ideal = IdealPresentation(model.ring, model.equations, comps, equidimensional)
        report = ecodim_at_point(ideal, point, **limits)
        out["mu_Z"] = report["point"]
    out["ecodim"] = report
    holds = report["ecodim"] <= ord_jac
    out["bound"] = {"ecodim": report["ecodim"], "jacobian_order": ord_jac, "holds": holds}
    if not holds:
        raise BoundViolated(f"ecodim {report['ecodim']} exceeds ord of the Jacobian {ord_jac}")
    return out
