"""Arc deformations over test rings and the bijection Phi with model deformations.

Phi sends an arc (x, y) over A with sigma(x, y) = alpha to (q, x-bar, y-bar, xi):
q is the Weierstrass factor of delta(x, y), x = x-bar + q^2 xi and y-bar is
y mod q.  The inverse rebuilds x from the model data and solves for
y = y-bar + q theta with

    G(theta) = Ad(Df(x, y-bar)) f(x, y-bar + q theta) / q^2 = 0.

G is computed on exact t-polynomials (the division by q^2 leaves no
remainder precisely when the model conditions hold).  The solver first
refines the base solution over K by Newton's method and then runs a chord
iteration over A with the Jacobian frozen at the base arc; each chord pass
pushes the defect one power of m deeper.

Truncated data is read through its polynomial representative (zero tail):
the lift of xi known to precision P is the exact lift of that representative
and is returned at precision P + 2d.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .errors import DefectNotContracting, DomainMismatch, NotOnStratum, PrecisionExhausted
from .jets import Arc, SplitPresentation, stratum_membership
from .linalg import kernel, rank, solve
from .model import ModelPoint, ModelPresentation, mu
from .poly import adjugate_generic, det_generic, evaluate
from .series import (
    SeriesRing,
    TruncSeries,
    UPolyRing,
    compose_poly,
    upoly_add,
    upoly_divmod_monic,
    upoly_mul,
    upoly_trim,
)
from .weierstrass import WeierstrassPoly, reduce_mod_q, weierstrass_divide, weierstrass_prepare


def _nilpotency(A) -> int:
    return getattr(A, "nilpotency_index", 1)


def _in_m_power(A, a, k: int) -> bool:
    if A.is_zero(a):
        return True
    if hasattr(A, "in_power"):
        return A.in_power(a, k)
    return k <= 0


def _series_residue(s: TruncSeries) -> TruncSeries:
    R = s.ring
    return TruncSeries(R.field, [R.residue(c) for c in s.coeffs], s.precision)


# -- data types -----------------------------------------------------------------


@dataclass
class ArcDeformation:
    """An arc over A reducing to ``base`` modulo m."""

    ring: object
    base: Arc
    components: list
    precision: int = None
    passes: int | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        self.components = list(self.components)
        if len(self.components) != len(self.base.variables):
            raise DomainMismatch("one component per ambient variable is required")
        N = min(c.precision for c in self.components)
        if self.precision is None:
            self.precision = N
        self.components = [c.truncate(self.precision) for c in self.components]

    @property
    def variables(self):
        return self.base.variables

    def __getitem__(self, name: str) -> TruncSeries:
        return self.components[self.variables.index(name)]

    @classmethod
    def trivial(cls, A, base: Arc) -> "ArcDeformation":
        return cls(A, base, [c.lift_to(A) for c in base.components], base.precision)

    def residue_arc(self) -> Arc:
        return Arc(self.ring.field, self.variables, [_series_residue(c) for c in self.components])

    def reduces_to_base(self) -> bool:
        w = min(self.precision, self.base.precision)
        red = self.residue_arc()
        return all(a.agrees_with(b, w) for a, b in zip(red.components, self.base.components))

    def defect(self, equations) -> list:
        return [compose_poly(f, [self[v] for v in f.variables]) for f in equations]

    def satisfies(self, equations) -> bool:
        return all(s.is_zero() for s in self.defect(equations))

    def truncate(self, precision: int) -> "ArcDeformation":
        return ArcDeformation(self.ring, self.base, [c.truncate(precision) for c in self.components], precision)

    def pushforward(self, target, apply) -> "ArcDeformation":
        """Image under a test-ring morphism given by ``apply``."""
        return ArcDeformation(
            target, self.base, [c.map_coeffs(apply, target) for c in self.components], self.precision
        )

    def to_json(self) -> dict:
        return {
            "precision": self.precision,
            "components": {v: c.to_json() for v, c in zip(self.variables, self.components)},
            "passes": self.passes,
        }


@dataclass
class ModelDeformation:
    """(q, x-bar, y-bar, xi) over A."""

    ring: object
    q: WeierstrassPoly
    xbar: list
    ybar: list
    xi: list

    @property
    def d(self) -> int:
        return self.q.d

    def coordinates(self):
        """A-valued coordinates in model-variable order."""
        out = list(self.q.lower)
        for p in self.xbar:
            out.extend(p)
        for p in self.ybar:
            out.extend(p)
        return tuple(out)

    def residue_point(self) -> ModelPoint:
        A = self.ring
        F = A.field
        return ModelPoint(
            F,
            tuple(A.residue(c) for c in self.q.lower),
            [tuple(A.residue(c) for c in p) for p in self.xbar],
            [tuple(A.residue(c) for c in p) for p in self.ybar],
            [_series_residue(s) for s in self.xi],
        )

    def satisfies_model(self, model: ModelPresentation) -> bool:
        """Every equation of Z vanishes at the A-point (q, x-bar, y-bar)."""
        A = self.ring
        coords = self.coordinates()
        if len(coords) != model.ring.nvars:
            return False
        return all(A.is_zero(evaluate(f, coords, A)) for f in model.equations)

    def satisfies_conditions(self, split: SplitPresentation) -> bool:
        """delta(x-bar, y-bar) in qA[t] and Ad(Df) f(x-bar, y-bar) in q^2 A[t]^m, by direct division."""
        A = self.ring
        if self.d == 0:
            return True
        T = UPolyRing(A)
        vals = dict(zip(split.x_vars, [list(p) for p in self.xbar]))
        vals.update(zip(split.y_vars, [list(p) for p in self.ybar]))
        args = [vals[v] for v in split.variables]
        if any(not A.is_zero(c) for c in reduce_mod_q(evaluate(split.delta, args, T), self.q)):
            return False
        q2 = self.q.square()
        fv = [evaluate(f, args, T) for f in split.equations]
        adj = [[evaluate(a, args, T) for a in row] for row in split.adjugate_rows()]
        for row in adj:
            acc = []
            for a, f in zip(row, fv):
                acc = T.add(acc, T.mul(a, f))
            if any(not A.is_zero(c) for c in reduce_mod_q(acc, q2)):
                return False
        return True

    def pushforward(self, target, apply) -> "ModelDeformation":
        return ModelDeformation(
            target,
            WeierstrassPoly(target, [apply(c) for c in self.q.lower], check=False),
            [tuple(apply(c) for c in p) for p in self.xbar],
            [tuple(apply(c) for c in p) for p in self.ybar],
            [s.map_coeffs(apply, target) for s in self.xi],
        )

    def same_as(self, other: "ModelDeformation", xi_window: int | None = None) -> bool:
        """Exact equality of (q, x-bar, y-bar); xi compared on [0, xi_window]."""
        A = self.ring
        if self.q != other.q:
            return False
        for a, b in ((self.xbar, other.xbar), (self.ybar, other.ybar)):
            for p, r in zip(a, b):
                if len(p) != len(r) or any(not A.eq(u, v) for u, v in zip(p, r)):
                    return False
        w = xi_window
        for s, r in zip(self.xi, other.xi):
            upto = min(s.precision, r.precision) if w is None else w
            if not s.agrees_with(r, upto):
                return False
        return True

    def to_json(self) -> dict:
        A = self.ring
        render = getattr(A, "elem_json", A.render)
        return {
            "q": self.q.to_json(),
            "xbar": [[render(c) for c in p] for p in self.xbar],
            "ybar": [[render(c) for c in p] for p in self.ybar],
            "xi": [s.to_json() for s in self.xi],
        }

    @classmethod
    def trivial(cls, A, pt: ModelPoint) -> "ModelDeformation":
        return cls(
            A,
            WeierstrassPoly(A, [A.lift(c) for c in pt.q]),
            [tuple(A.lift(c) for c in p) for p in pt.xbar],
            [tuple(A.lift(c) for c in p) for p in pt.ybar],
            [s.lift_to(A) for s in pt.xi],
        )


# -- Phi ------------------------------------------------------------------------------


def phi_forward(deform: ArcDeformation, split: SplitPresentation, d: int) -> ModelDeformation:
    A = deform.ring
    N = deform.precision
    if N < 2 * d + 1:
        raise PrecisionExhausted(f"precision {N} is below 2d + 1 = {2 * d + 1}")
    if not stratum_membership(split, deform.residue_arc(), d):
        raise NotOnStratum(f"the base arc does not have contact order {d}")
    if d == 0:
        xi = [deform[v] for v in split.x_vars]
        return ModelDeformation(A, WeierstrassPoly(A, []), [], [], xi)
    delta = compose_poly(split.delta, [deform[v] for v in split.delta.variables])
    _, q = weierstrass_prepare(delta)
    q2 = q.square()
    # below this the truncation cannot witness the model conditions exactly
    K = q2.vanishing_power()
    if N + 1 < K:
        raise PrecisionExhausted(f"precision {N} is below t^{K} in q^2 A[t]; need N >= {K - 1}")
    xbar, xi = [], []
    for v in split.x_vars:
        g, r = weierstrass_divide(deform[v], q2)
        xbar.append(tuple(r))
        xi.append(g)
    ybar = [tuple(weierstrass_divide(deform[v], q)[1]) for v in split.y_vars]
    return ModelDeformation(A, q, xbar, ybar, xi)


def _mat_vec(M, v, R):
    out = []
    for row in M:
        acc = R.zero()
        for a, b in zip(row, v):
            acc = R.add(acc, R.mul(a, b))
        out.append(acc)
    return out


class _Lifter:
    """Exact polynomial evaluation of G over a coefficient ring R."""

    def __init__(self, split, R, q, x_polys, ybar_polys):
        self.split = split
        self.R = R
        self.T = UPolyRing(R)
        self.d = len(q) - 1
        self.q = q
        self.q2 = upoly_mul(q, q, R)
        self.x = x_polys
        self.ybar = ybar_polys
        T = self.T
        m = split.m
        if self.d == 0:
            self.norm = [[T.one() if i == j else T.zero() for j in range(m)] for i in range(m)]
        else:
            args = self._args(ybar_polys)
            self.norm = [[evaluate(a, args, T) for a in row] for row in split.adjugate_rows()]
        self.dfy = [[f.partial_derivative(y) for y in split.y_vars] for f in split.equations]

    def _args(self, y_polys):
        vals = dict(zip(self.split.x_vars, self.x))
        vals.update(zip(self.split.y_vars, y_polys))
        return [vals[v] for v in self.split.variables]

    def y_of(self, theta):
        T = self.T
        return [T.add(yb, T.mul(self.q, th)) for yb, th in zip(self.ybar, theta)]

    def G(self, theta, M: int):
        """G(theta) mod t^(M+1); None when the division by q^2 leaves a remainder."""
        T, R = self.T, self.R
        args = self._args(self.y_of(theta))
        fv = [evaluate(f, args, T) for f in self.split.equations]
        out = []
        for row in self.norm:
            acc = []
            for a, f in zip(row, fv):
                acc = T.add(acc, T.mul(a, f))
            quot, rem = upoly_divmod_monic(acc, self.q2, R)
            if any(not R.is_zero(c) for c in rem):
                return None
            out.append(TruncSeries(R, quot, M))
        return out

    def jacobian(self, theta, M: int):
        """Norm . D_y f(x, y-bar + q theta) / t^d, as series (used over K with q = t^d)."""
        T, R = self.T, self.R
        args = self._args(self.y_of(theta))
        D = [[evaluate(p, args, T) for p in row] for row in self.dfy]
        out = []
        for row in self.norm:
            new = []
            for j in range(len(D[0])):
                acc = []
                for k, a in enumerate(row):
                    acc = T.add(acc, T.mul(a, D[k][j]))
                acc = acc + [R.zero()] * max(0, self.d - len(acc))
                if any(not R.is_zero(c) for c in acc[: self.d]):
                    raise DefectNotContracting("linearisation is not divisible by t^d")
                new.append(TruncSeries(R, acc[self.d :], M))
            out.append(new)
        return out


def _series_mat_inverse(J, F, M: int):
    S = SeriesRing(F, M)
    det = det_generic(J, S)
    if F.is_zero(det.coeffs[0]):
        raise DefectNotContracting("normalised linearisation is not invertible over K[[t]]")
    dinv = det.inverse()
    adj = adjugate_generic(J, S)
    return [[a * dinv for a in row] for row in adj]


def _poly(s: TruncSeries):
    return upoly_trim(list(s.coeffs), s.ring)


def phi_inverse(mdef: ModelDeformation, base: Arc, split: SplitPresentation, d: int) -> ArcDeformation:
    """Rebuild the arc deformation from model data.

    The result has precision N_xi + 2d and is the exact lift of the model
    deformation whose xi is the polynomial representative of the given
    series.  ``passes`` on the result counts the chord passes over A.
    """
    A = mdef.ring
    F = A.field
    if mdef.d != d:
        raise DomainMismatch(f"model deformation has degree {mdef.d}, expected {d}")
    if any(not F.is_zero(A.residue(c)) for c in mdef.q.lower):
        raise DomainMismatch("q does not reduce to t^d")
    P = min(s.precision for s in mdef.xi) if mdef.xi else base.precision - 2 * d
    M = P + 2 * d
    q = mdef.q.coeffs
    q2 = upoly_mul(q, q, A)
    x = [
        upoly_trim(upoly_add(list(xb), upoly_mul(q2, _poly(xi), A), A), A)
        for xb, xi in zip(mdef.xbar, mdef.xi)
    ]
    if d == 0:
        x = [_poly(xi) for xi in mdef.xi]
    ybar = [upoly_trim(list(p), A) for p in mdef.ybar] if d else [[] for _ in split.y_vars]

    # base data over K
    res = lambda p: upoly_trim([A.residue(c) for c in p], F)  # noqa: E731
    x0 = [res(p) for p in x]
    ybar0 = [res(p) for p in ybar]
    for v, xb in zip(split.x_vars, mdef.xbar):
        low = [A.residue(c) for c in xb]
        if not TruncSeries(F, low, len(low) - 1).agrees_with(base[v], min(len(low) - 1, base.precision)):
            raise DomainMismatch(f"x-bar of {v} does not reduce to the base arc")
    base_lift = _Lifter(split, F, [F.zero()] * d + [F.one()], x0, ybar0)
    theta0 = []
    for v, yb in zip(split.y_vars, ybar0):
        diff = base[v] - TruncSeries(F, yb, base.precision)
        if any(not F.is_zero(c) for c in diff.coeffs[:d]):
            raise DomainMismatch(f"y-bar of {v} does not reduce to the base arc")
        theta0.append(diff.divide_t(d))
    theta = [_poly(s) for s in theta0]
    theta = _refine_base(base_lift, theta, M)
    J0inv = _series_mat_inverse(base_lift.jacobian(theta, M), F, M)
    J0inv_A = [[s.lift_to(A) for s in row] for row in J0inv]

    lifter = _Lifter(split, A, q, x, ybar)
    th = [[A.lift(c) for c in p] for p in theta]
    nil = _nilpotency(A)
    passes = 0
    while True:
        G = lifter.G(th, M)
        if G is None:
            raise DefectNotContracting("model conditions fail: Ad(Df) f is not divisible by q^2")
        if all(g.is_zero() for g in G):
            break
        level = passes + 1
        if not all(_in_m_power(A, c, level) for g in G for c in g.coeffs):
            raise DefectNotContracting(f"defect is not in m^{level} after {passes} passes")
        if passes >= nil:
            raise DefectNotContracting(f"defect survives {passes} passes (nilpotency index {nil})")
        step = _mat_vec(J0inv_A, G, SeriesRing(A, M))
        th = [
            upoly_trim(list((TruncSeries(A, t_, M) - s).coeffs), A) for t_, s in zip(th, step)
        ]
        passes += 1
    y = lifter.y_of(th)
    comps = dict(zip(split.x_vars, x))
    comps.update(zip(split.y_vars, y))
    series = [TruncSeries(A, comps[v], M) for v in split.variables]
    return ArcDeformation(A, base, series, M, passes=passes)


def _refine_base(lifter: _Lifter, theta, M: int, max_steps: int = 64):
    """Newton over K[[t]] until G_0(theta) = 0 mod t^(M+1)."""
    F = lifter.R
    S = SeriesRing(F, M)
    for _ in range(max_steps):
        G = lifter.G(theta, M)
        if G is None:
            raise DefectNotContracting("base model point violates the model conditions")
        if all(g.is_zero() for g in G):
            return theta
        if any(not F.is_zero(g.coeffs[0]) for g in G):
            raise DefectNotContracting("base arc does not solve the normalised system")
        Jinv = _series_mat_inverse(lifter.jacobian(theta, M), F, M)
        step = _mat_vec(Jinv, G, S)
        theta = [upoly_trim(list((TruncSeries(F, t_, M) - s).coeffs), F) for t_, s in zip(theta, step)]
    raise DefectNotContracting("Newton refinement over K did not converge")


# -- tangent spaces -------------------------------------------------------------------


def _arc_linear_map(equations, arc: Arc, N: int):
    """Rows of u -> Df(alpha) u mod t^(N+1) on coefficient vectors (per-variable blocks)."""
    F = arc.field
    variables = arc.variables
    D = [[compose_poly(f.partial_derivative(v), [arc[w].truncate(N) for w in f.variables])
          if f.ring.nvars else None for v in variables] for f in equations]
    rows = []
    for j in range(len(equations)):
        for k in range(N + 1):
            row = []
            for i in range(len(variables)):
                s = D[j][i]
                for l in range(N + 1):
                    row.append(s.coeffs[k - l] if 0 <= k - l else F.zero())
            rows.append(row)
    return rows


def arc_tangent_dim(equations, arc: Arc, N: int, window: int | None = None) -> int:
    """dim_K of {u : Df(alpha) u = 0 mod t^(N+1)}, optionally projected to t-degrees <= window."""
    if arc.precision < N:
        raise PrecisionExhausted(f"arc precision {arc.precision} < {N}")
    F = arc.field
    nv = len(arc.variables)
    rows = _arc_linear_map(equations, arc, N)
    ncols = nv * (N + 1)
    if window is None:
        return ncols - rank(rows, F)
    basis = kernel(rows, ncols, F)
    keep = [i * (N + 1) + l for i in range(nv) for l in range(window + 1)]
    return rank([[v[c] for c in keep] for v in basis], F)


def model_tangent_dim(model: ModelPresentation, point, window: int) -> int:
    """dim T_Z at the point plus the free xi coefficients needed for x up to ``window``.

    Windows below 2d - 1 do not see every x-bar coefficient, so they are refused.
    """
    if window < 2 * model.d - 1:
        raise PrecisionExhausted(f"window {window} is below 2d - 1 = {2 * model.d - 1}")
    F = model.ring.domain
    coords = point.coordinates() if isinstance(point, ModelPoint) else tuple(point)
    J = [[f.partial_derivative(v).eval_at_point(coords) for v in model.variables] for f in model.equations]
    tz = model.ring.nvars - rank(J, F) if J else model.ring.nvars
    free = max(0, window - 2 * model.d + 1)
    return tz + model.n * free


def tangent_space_dim(side, point, N: int, window: int | None = None) -> int:
    """Dispatch: ``side`` is a list of equations (arc side) or a ModelPresentation."""
    if isinstance(side, ModelPresentation):
        return model_tangent_dim(side, point, N if window is None else window)
    return arc_tangent_dim(side, point, N, window)


# -- sampling and the bijection check -------------------------------------------------


class _Sampler:
    def __init__(self, split: SplitPresentation, alpha: Arc, A, N: int):
        self.split = split
        self.alpha = alpha
        self.A = A
        self.F = A.field
        self.N = N
        rows = _arc_linear_map(split.equations, alpha, N)
        self.rows = rows
        self.nv = len(alpha.variables)
        self.ncols = self.nv * (N + 1)
        self.kernel = kernel(rows, self.ncols, self.F)

    def _random_kernel(self, rng, sparse: bool = False):
        F = self.F
        v = [F.zero()] * self.ncols
        for b in self.kernel:
            # sparse draws favour unobstructed directions on singular models
            if sparse and rng.random() < 0.7:
                continue
            c = F.random_element(rng)
            if c != 0:
                v = [F.add(x, F.mul(c, y)) for x, y in zip(v, b)]
        return v

    def draw(self, rng, attempts: int = 60) -> ArcDeformation:
        A, F, N = self.A, self.F, self.N
        basis = getattr(A, "basis", [()])
        for attempt in range(attempts):
            sparse = attempt > 0
            # coefficient table: coeffs[var][level] -> list of base-field coordinates
            comps = [[[c] + [F.zero()] * (len(basis) - 1) for c in self.alpha[v].coeffs[: N + 1]]
                     for v in self.alpha.variables]
            ok = True
            degrees = sorted({sum(b) for b in basis if sum(b) > 0})
            for k in degrees:
                current = self._as_series(comps)
                defect = [compose_poly(f, [current[self.alpha.variables.index(w)] for w in f.variables])
                          for f in self.split.equations]
                for idx, b in enumerate(basis):
                    if sum(b) != k:
                        continue
                    rhs = [F.neg(s.coeffs[l].coords[idx]) for s in defect for l in range(N + 1)]
                    sol = solve(self.rows, rhs, F) if any(r != 0 for r in rhs) else [F.zero()] * self.ncols
                    if sol is None:
                        ok = False
                        break
                    kv = self._random_kernel(rng, sparse)
                    sol = [F.add(a, c) for a, c in zip(sol, kv)]
                    for i in range(self.nv):
                        for l in range(N + 1):
                            comps[i][l][idx] = sol[i * (N + 1) + l]
                if not ok:
                    break
            if ok:
                return ArcDeformation(A, self.alpha, self._as_series(comps), N)
        raise DefectNotContracting("could not sample a deformation: obstruction at every attempt")

    def _as_series(self, comps):
        A = self.A
        if hasattr(A, "from_coords"):
            return [TruncSeries(A, [A.from_coords(c) for c in comp], self.N) for comp in comps]
        return [TruncSeries(A, [c[0] for c in comp], self.N) for comp in comps]


def sample_deformation(split: SplitPresentation, alpha: Arc, A, N: int, rng, d: int | None = None) -> ArcDeformation:
    """Random A-deformation of alpha, exact to precision N.

    First-order parts are random kernel vectors of the linearised system; each
    higher m-level is corrected by solving Df(alpha) (u, v) = -E.  Sampling runs
    at up to precision N + 2d * nilpotency_index (as far as alpha is known)
    and is then truncated, so the result is the truncation of a longer jet.
    """
    if alpha.precision < N:
        raise PrecisionExhausted(f"base arc precision {alpha.precision} < {N}")
    d = split.d if d is None else d
    work = min(alpha.precision, N + 2 * (d or 0) * _nilpotency(A))
    sampler = _Sampler(split, alpha.truncate(work), A, work)
    dfm = sampler.draw(rng)
    out = dfm.truncate(N)
    out.base = alpha
    return out


def _first_arc_difference(a: ArcDeformation, b: ArcDeformation, upto: int):
    for v in a.variables:
        k = a[v].first_difference(b[v], upto)
        if k is not None:
            return v, k
    return None


def _check_sample(split, alpha, d, A, N, model, seed, index):
    rng = random.Random(f"{seed}:{index}")
    window = N - 2 * d
    entry = {"index": index, "forward": False, "roundtrip": False, "reverse": False,
             "passes": None, "first_failure": None, "flagged": []}
    try:
        dfm = sample_deformation(split, alpha, A, N, rng, d)
        mdef = phi_forward(dfm, split, d)
        entry["forward"] = mdef.satisfies_conditions(split) and (
            model is None or mdef.satisfies_model(model)
        )
        if not entry["forward"]:
            entry["first_failure"] = {"check": "forward", "detail": "model conditions fail"}
            return entry
        back = phi_inverse(mdef, alpha, split, d)
        entry["passes"] = back.passes
        diff = _first_arc_difference(dfm, back, window)
        entry["roundtrip"] = diff is None
        if diff is not None:
            entry["first_failure"] = {"check": "roundtrip", "component": diff[0], "coefficient": diff[1]}
            return entry
        beyond = _first_arc_difference(dfm, back, min(dfm.precision, back.precision))
        if beyond is not None:
            entry["flagged"].append({"component": beyond[0], "coefficient": beyond[1]})
        again = phi_forward(back, split, d)
        entry["reverse"] = again.same_as(mdef)
        if not entry["reverse"]:
            entry["first_failure"] = {"check": "reverse", "detail": "model data differ"}
    except Exception as exc:  # report, do not abort the batch
        entry["first_failure"] = {"check": "exception", "detail": f"{type(exc).__name__}: {exc}"}
    return entry


def verify_bijection(split: SplitPresentation, alpha: Arc, d: int, A, N: int, samples: int,
                     seed: int = 0, model: ModelPresentation | None = None, threads: int = 1) -> dict:
    """Sample A-deformations of alpha and check both round trips of Phi.

    Each sample uses its own RNG seeded by (seed, index), so reports do not
    depend on ``threads``.
    """
    if samples < 0:
        raise ValueError("sample count must be non-negative")
    if samples and N < 2 * d + 1:
        raise PrecisionExhausted(f"precision {N} is below 2d + 1 = {2 * d + 1}")
    if samples and not stratum_membership(split, alpha, d):
        raise NotOnStratum(f"the base arc does not have contact order {d}")
    args = (split, alpha, d, A, N, model, seed)
    if threads > 1 and samples > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda i: _check_sample(*args, i), range(samples)))
    else:
        results = [_check_sample(*args, i) for i in range(samples)]
    passed = sum(1 for r in results if r["forward"] and r["roundtrip"] and r["reverse"])
    return {
        "samples": samples,
        "passed": passed,
        "failed": samples - passed,
        "ok": passed == samples,
        "seed": seed,
        "precision": N,
        "d": d,
        "windows": {"arc": N - 2 * d, "xi": N - 2 * d},
        "ring": A.to_json(),
        "results": results,
    }
