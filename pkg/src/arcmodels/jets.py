"""Jet equations, arcs, contact strata, Jacobian orders and split selection.

Jet variables are named ``<var>_<level>``: the universal higher derivation
sends ``x`` to ``x_0 + x_1 t + x_2 t^2 + ...``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .errors import DomainMismatch, NoFiniteMinor, PrecisionExhausted
from .field import FieldSpec
from .poly import MultiPoly, PolyMatrix, PolyRing, adjugate_generic, det, det_generic
from .series import BeyondPrecision, TruncSeries, compose_poly, ord_is_finite, series_ord


def jet_name(var: str, level: int) -> str:
    return f"{var}_{level}"


def jet_ring(ring: PolyRing, level: int) -> PolyRing:
    """Polynomial ring in v_0..v_level for each variable v (per-variable blocks)."""
    names = [jet_name(v, j) for v in ring.variables for j in range(level + 1)]
    return PolyRing(names, ring.domain)


def _universal_series(ring: PolyRing, level: int, target: PolyRing):
    return [
        TruncSeries(target, [target.var(jet_name(v, j)) for j in range(level + 1)], level)
        for v in ring.variables
    ]


def higher_derive(f: MultiPoly, i: int) -> MultiPoly:
    """f^(i): the coefficient of t^i in f(sum_j v_j t^j)."""
    if i < 0:
        raise ValueError("derivation level must be non-negative")
    target = jet_ring(f.ring, i)
    series = compose_poly(f, _universal_series(f.ring, i, target))
    return series.coeffs[i]


def jet_equations(F, N: int):
    """All f_j^(i) for each equation f_j and 0 <= i <= N, in one ring (levels up to N)."""
    if N < 0:
        raise ValueError("jet level must be non-negative")
    F = list(F)
    if not F:
        return []
    target = jet_ring(F[0].ring, N)
    args = _universal_series(F[0].ring, N, target)
    out = []
    for f in F:
        s = compose_poly(f, args)
        out.extend(s.coeffs[: N + 1])
    return out


def jet_point(arc: "Arc", N: int):
    """Coordinates of an arc in the jet ring of level N (matching ``jet_ring`` order)."""
    if arc.precision < N:
        raise PrecisionExhausted(f"arc precision {arc.precision} < jet level {N}")
    return [c.coeffs[j] for c in arc.components for j in range(N + 1)]


# -- arcs -----------------------------------------------------------------------


class Arc:
    """A K-point of the arc space, known to a common t-precision."""

    def __init__(self, field: FieldSpec, variables, components):
        components = list(components)
        variables = tuple(variables)
        if len(components) != len(variables):
            raise DomainMismatch("one series per variable is required")
        for c in components:
            if c.ring != field:
                raise DomainMismatch("arc components must live over the arc field")
        N = min(c.precision for c in components) if components else 0
        self.field = field
        self.variables = variables
        self.components = [c.truncate(N) for c in components]
        self.precision = N

    @classmethod
    def from_coefficients(cls, field: FieldSpec, variables, coeff_lists, precision: int) -> "Arc":
        comps = [TruncSeries.from_poly(field, cl, precision) for cl in coeff_lists]
        return cls(field, variables, comps)

    def __getitem__(self, name: str) -> TruncSeries:
        return self.components[self.variables.index(name)]

    def truncate(self, precision: int) -> "Arc":
        return Arc(self.field, self.variables, [c.truncate(precision) for c in self.components])

    def __eq__(self, other):
        return (
            isinstance(other, Arc)
            and self.variables == other.variables
            and self.components == other.components
        )

    def __repr__(self):
        return f"Arc({dict(zip(self.variables, self.components))})"

    def evaluate(self, f: MultiPoly) -> TruncSeries:
        """f along the arc (variables matched by name)."""
        return compose_poly(f, [self[v] for v in f.variables])

    def point(self):
        """The closed point alpha(0)."""
        return tuple(c.coeffs[0] for c in self.components)

    def to_json(self) -> dict:
        return {
            "precision": self.precision,
            "coefficients": {
                v: [self.field.render(x) for x in c.coeffs]
                for v, c in zip(self.variables, self.components)
            },
        }


# -- splits and strata --------------------------------------------------------------


@dataclass
class SplitPresentation:
    """X = V(f_1..f_m) in A^(n+m) with the variables split as (x; y)."""

    variables: tuple
    x_vars: tuple
    y_vars: tuple
    equations: list
    delta: MultiPoly = None
    d: int | None = None
    ring: PolyRing = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.variables = tuple(self.variables)
        self.x_vars = tuple(self.x_vars)
        self.y_vars = tuple(self.y_vars)
        self.equations = list(self.equations)
        if self.ring is None:
            self.ring = self.equations[0].ring
        if set(self.x_vars) & set(self.y_vars):
            raise ValueError("x and y variables must be disjoint")
        if set(self.x_vars) | set(self.y_vars) != set(self.variables):
            raise ValueError("x and y variables must cover the ambient variables")
        if len(self.y_vars) != len(self.equations):
            raise ValueError("need exactly one y variable per equation")
        computed = det(self.Dy())
        if self.delta is None:
            self.delta = computed
        elif self.delta != computed:
            raise ValueError("delta does not match det(df/dy)")

    @property
    def n(self) -> int:
        return len(self.x_vars)

    @property
    def m(self) -> int:
        return len(self.y_vars)

    def Dy(self) -> PolyMatrix:
        return PolyMatrix(
            [[f.partial_derivative(y) for y in self.y_vars] for f in self.equations], self.ring
        )

    def adjugate_rows(self):
        return adjugate_generic(self.Dy().entries, self.ring)

    def with_d(self, d: int) -> "SplitPresentation":
        return SplitPresentation(
            self.variables, self.x_vars, self.y_vars, self.equations, self.delta, d, self.ring
        )

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "x_vars": list(self.x_vars),
            "y_vars": list(self.y_vars),
            "equations": [str(f) for f in self.equations],
            "delta": str(self.delta),
            "d": self.d,
        }


def stratum_membership(split: SplitPresentation, arc: Arc, d: int) -> bool:
    """True iff ord of delta along the arc is exactly d."""
    if arc.precision < d:
        raise PrecisionExhausted(f"arc precision {arc.precision} < contact order {d}")
    o = series_ord(arc.evaluate(split.delta))
    if not ord_is_finite(o):
        return False
    return o == d


def _minor_polys(F, r: int):
    F = list(F)
    ring = F[0].ring
    J = [[f.partial_derivative(v) for v in ring.variables] for f in F]
    for rows in combinations(range(len(F)), r):
        for cols in combinations(range(ring.nvars), r):
            sub = [[J[i][j] for j in cols] for i in rows]
            yield rows, cols, det_generic(sub, ring)


def jacobian_order(F, r: int, arc: Arc):
    """Minimum order along the arc of the r x r minors of the Jacobian matrix."""
    best = None
    for _, _, minor in _minor_polys(F, r):
        if minor.is_zero():
            continue
        o = series_ord(arc.evaluate(minor))
        if ord_is_finite(o) and (best is None or o < best):
            best = o
    if best is None:
        return BeyondPrecision(arc.precision)
    return best


def select_split(F, arc: Arc) -> SplitPresentation:
    """Split with the y-subset whose delta has minimal order along the arc.

    Ties go to the split whose x-index set is lexicographically smallest, so
    the y variables sit as late as possible in the declared order (for
    y^2 - x^2 - x^3 with variables (x, y) this picks y).
    """
    F = list(F)
    ring = F[0].ring
    m = len(F)
    best = None
    for cols in combinations(range(ring.nvars), m):
        y_vars = [ring.variables[j] for j in cols]
        sub = [[f.partial_derivative(y) for y in y_vars] for f in F]
        delta = det_generic(sub, ring)
        if delta.is_zero():
            continue
        o = series_ord(arc.evaluate(delta))
        if not ord_is_finite(o):
            continue
        x_idx = tuple(j for j in range(ring.nvars) if j not in cols)
        if best is None or (o, x_idx) < (best[0], best[3]):
            best = (o, cols, delta, x_idx)
    if best is None:
        raise NoFiniteMinor(
            f"every maximal minor vanishes along the arc to precision {arc.precision}"
        )
    o, cols, delta, _ = best
    y_vars = tuple(ring.variables[j] for j in cols)
    x_vars = tuple(v for v in ring.variables if v not in y_vars)
    return SplitPresentation(ring.variables, x_vars, y_vars, F, delta, o, ring)


def newton_solve(f: MultiPoly, arc_partial: dict, var: str, initial, precision: int) -> TruncSeries:
    """Solve f = 0 for the series of ``var`` given the other components.

    ``initial`` is a coefficient list approximating the solution.  With
    e = ord of df/dvar along it, the approximation must satisfy f = 0 modulo
    t^(2e+1) (Tougeron's condition) and the other components must be known to
    precision + e.  Returns the unique nearby solution to ``precision``.
    """
    field = f.domain
    fy = f.partial_derivative(var)
    avail = min(c.precision for c in arc_partial.values()) if arc_partial else precision
    probe = TruncSeries.from_poly(field, initial, avail)

    def args_for(y, w):
        return [arc_partial[v].truncate(w) if v != var else y for v in f.variables]

    e = series_ord(compose_poly(fy, args_for(probe, avail)))
    if not ord_is_finite(e):
        raise NoFiniteMinor(f"d f / d {var} vanishes along the approximation")
    work = precision + e
    if avail < work:
        raise PrecisionExhausted(f"other components are needed to precision {work}")
    y = TruncSeries.from_poly(field, initial, work)
    val = compose_poly(f, args_for(y, work))
    o = series_ord(val)
    if ord_is_finite(o) and o < 2 * e + 1:
        raise PrecisionExhausted("initial approximation is too coarse for Newton lifting")
    for _ in range(64):
        val = compose_poly(f, args_for(y, work))
        der = compose_poly(fy, args_for(y, work))
        step = val.divide_t(e) * der.divide_t(e).inverse()
        if step.is_zero():
            break
        y = TruncSeries(field, (y - TruncSeries(field, step.coeffs, work)).coeffs, work)
    return y.truncate(precision)
