"""The scheme of formal models Z and the map mu on arcs.

For a split presentation with contact order d, Z sits inside
W = Q_d x P_{<2d}^n x P_{<d}^m with coordinates

* ``q0 .. q{d-1}``: lower coefficients of the monic q(t) of degree d,
* ``xb{i}_{j}``: coefficient j of the i-th x-bar polynomial (degree < 2d),
* ``yb{i}_{j}``: coefficient j of the i-th y-bar polynomial (degree < d).

Z is cut out by the remainder coefficients of delta(xb, yb) modulo q and of
Ad(Df(xb, yb)) f(xb, yb) modulo q^2, both computed by monic long division
with the q_j kept symbolic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotOnStratum, PrecisionExhausted
from .jets import Arc, SplitPresentation, stratum_membership
from .poly import MultiPoly, PolyRing, adjugate_generic, evaluate
from .series import TruncSeries, UPolyRing, upoly_mul
from .weierstrass import reduce_mod_q


def model_variables(n: int, m: int, d: int):
    names = [f"q{j}" for j in range(d)]
    names += [f"xb{i}_{j}" for i in range(n) for j in range(2 * d)]
    names += [f"yb{i}_{j}" for i in range(m) for j in range(d)]
    return names


@dataclass
class ModelPresentation:
    n: int
    m: int
    d: int
    ring: PolyRing
    equations: list
    split: SplitPresentation

    @property
    def variables(self):
        return self.ring.variables

    @property
    def q_vars(self):
        return self.variables[: self.d]

    def xb_vars(self, i: int):
        start = self.d + 2 * self.d * i
        return self.variables[start : start + 2 * self.d]

    def yb_vars(self, i: int):
        start = self.d + 2 * self.d * self.n + self.d * i
        return self.variables[start : start + self.d]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "d": self.d,
            "field": self.ring.domain.to_json(),
            "variables": list(self.variables),
            "blocks": {
                "q": list(self.q_vars),
                "xb": [list(self.xb_vars(i)) for i in range(self.n)],
                "yb": [list(self.yb_vars(i)) for i in range(self.m)],
            },
            "equation_count": len(self.equations),
            "equations": [str(f) for f in self.equations],
            "split": self.split.to_json(),
        }


def build_model(split: SplitPresentation, d: int) -> ModelPresentation:
    """Equations of Z in the fixed order: delta-remainder coefficients
    ascending, then for each equation index the q^2-remainder coefficients
    ascending (d + 2dm equations in total)."""
    if d < 0:
        raise ValueError("contact order must be non-negative")
    n, m = split.n, split.m
    field = split.ring.domain
    W = PolyRing(model_variables(n, m, d), field)
    if d == 0:
        return ModelPresentation(n, m, 0, PolyRing([], field), [], split)
    T = UPolyRing(W)
    q = [W.var(f"q{j}") for j in range(d)] + [W.one()]
    q2 = upoly_mul(q, q, W)
    values = {}
    for i, v in enumerate(split.x_vars):
        values[v] = [W.var(f"xb{i}_{j}") for j in range(2 * d)]
    for i, v in enumerate(split.y_vars):
        values[v] = [W.var(f"yb{i}_{j}") for j in range(d)]
    args = [values[v] for v in split.variables]

    def along(f: MultiPoly):
        return evaluate(f, args, T)

    def pad(rem, k):
        return list(rem) + [W.zero()] * (k - len(rem))

    equations = pad(reduce_mod_q(along(split.delta), q, W), d)
    adj = split.adjugate_rows()
    fvals = [along(f) for f in split.equations]
    adj_vals = [[along(a) for a in row] for row in adj]
    for i in range(m):
        acc = []
        for k in range(m):
            acc = T.add(acc, T.mul(adj_vals[i][k], fvals[k]))
        equations += pad(reduce_mod_q(acc, q2, W), 2 * d)
    return ModelPresentation(n, m, d, W, equations, split)


@dataclass
class ModelPoint:
    """A K-point (q, x-bar, y-bar) of W together with the tail xi."""

    field: object
    q: tuple
    xbar: list
    ybar: list
    xi: list

    @property
    def d(self) -> int:
        return len(self.q)

    def coordinates(self):
        out = list(self.q)
        for p in self.xbar:
            out.extend(p)
        for p in self.ybar:
            out.extend(p)
        return tuple(out)

    def to_json(self) -> dict:
        F = self.field
        return {
            "q": [F.render(c) for c in self.q],
            "xbar": [[F.render(c) for c in p] for p in self.xbar],
            "ybar": [[F.render(c) for c in p] for p in self.ybar],
            "xi": [s.to_json() for s in self.xi] if self.xi is not None else None,
        }


def mu(split: SplitPresentation, arc: Arc, d: int) -> ModelPoint:
    """(x, y) -> (t^d, x mod t^(2d), y mod t^d; (x - x-bar)/t^(2d))."""
    N = arc.precision
    if N < 2 * d:
        raise PrecisionExhausted(f"arc precision {N} is below 2d = {2 * d}")
    if not stratum_membership(split, arc, d):
        raise NotOnStratum(f"ord of delta along the arc is not {d}")
    F = arc.field
    xbar, xi = [], []
    for v in split.x_vars:
        c = arc[v]
        xbar.append(tuple(c.coeffs[: 2 * d]))
        xi.append(TruncSeries(F, c.coeffs[2 * d :], N - 2 * d))
    ybar = [tuple(arc[v].coeffs[:d]) for v in split.y_vars]
    return ModelPoint(F, (F.zero(),) * d, xbar, ybar, xi)


def mu_Z(split: SplitPresentation, arc: Arc, d: int):
    """Coordinates of mu(arc) in W, in model-variable order (xi dropped)."""
    return mu(split, arc, d).coordinates()


def verify_membership(model: ModelPresentation, pt) -> bool:
    """True iff every equation of Z vanishes at the point's (q, x-bar, y-bar)."""
    coords = pt.coordinates() if isinstance(pt, ModelPoint) else tuple(pt)
    if len(coords) != model.ring.nvars:
        return False
    return all(f.eval_at_point(coords) == model.ring.domain.zero() for f in model.equations)


def lambda_map(pt: ModelPoint, precision: int | None = None):
    """x-bar + q^2 xi for each x component (the map back to arcs on the x side)."""
    F = pt.field
    q = list(pt.q) + [F.one()]
    q2 = upoly_mul(q, q, F)
    out = []
    for xb, xi in zip(pt.xbar, pt.xi):
        N = xi.precision + 2 * pt.d if precision is None else precision
        s = TruncSeries(F, xi.coeffs, N).mul_poly(q2) if pt.d else TruncSeries(F, xi.coeffs, N)
        out.append(s + TruncSeries.from_poly(F, xb, N))
    return out
