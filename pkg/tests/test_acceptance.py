"""Acceptance criteria, each timed against its budget.

Every criterion records one PASS/FAIL line; the lines are printed as they
happen (visible with ``-s``) and again in the terminal summary.
"""

import random
import time
from contextlib import contextmanager

import pytest
import sympy
from sympy.polys.matrices import DomainMatrix

from arcmodels import QQ, analyze_arc, build_model, ecodim_at_point, mu, select_split, verify_membership
from arcmodels import weierstrass_divide, weierstrass_prepare
from arcmodels.cli import render, run
from arcmodels.deformation import arc_tangent_dim, model_tangent_dim
from arcmodels.series import TruncSeries, upoly_add, upoly_mul
from arcmodels.weierstrass import reduce_mod_q

import arcgen
import localize
from conftest import CRITERIA, fixture_path, load_doc, load_problem
from test_weierstrass import long_division, random_case, random_ring, random_weierstrass

FIXTURES = ["cusp.json", "cusp_f5.json", "example35.json", "node.json", "node_f5.json", "umbrella.json"]


@contextmanager
def criterion(k, what, budget):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        line = f"FAIL criterion {k}: {what} ({type(exc).__name__}: {exc})"
        CRITERIA.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - start
    ok = budget is None or elapsed < budget
    limit = "" if budget is None else f" < {budget} s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {what} [{elapsed:.2f} s{limit}]"
    CRITERIA.append(line)
    print(line)
    assert ok, line


# -- 1. the union of a plane and a doubled line ---------------------------------------------


def test_criterion_1_union_example():
    x, y, z = sympy.symbols("x y z")
    with criterion(1, "ecodim 1 at the origin and 2 at (1,0,0)", 1.0):
        I = load_problem("example35.json").ideal("union")
        at_origin = ecodim_at_point(I, [0, 0, 0])
        on_line = ecodim_at_point(I, [1, 0, 0])
        assert at_origin["ecodim"] == 1
        assert on_line["ecodim"] == 2
    # brute-force localization, outside the timed block
    gens = [x * y**2, x * y * z, x * z**2]
    for pt, units, r in (((0, 0, 0), (), at_origin), ((1, 0, 0), (x,), on_line)):
        e = localize.edim(gens, [x, y, z], pt)
        dim = localize.local_dimension(gens, [x, y, z], pt, units)
        assert (r["edim"], r["local_dimension"], r["ecodim"]) == (e, dim, e - dim)


# -- 2. Weierstrass preparation and division -------------------------------------------------


def _weierstrass_case(rng):
    A, f, d = random_case(rng)
    N = f.precision
    u, q = weierstrass_prepare(f)
    assert q.d == d and A.is_unit(u.coeffs[0])
    assert TruncSeries(A, u.coeffs, N).mul_poly(q.coeffs) == f
    # division by an independent Weierstrass polynomial, against schoolbook division
    e = rng.randint(0, min(4, N))
    w = random_weierstrass(rng, A, e)
    g, r = weierstrass_divide(f, w)
    g2, r2 = long_division(f.coeffs, w.coeffs, A)
    assert all(A.eq(a, b) for a, b in zip(g.coeffs, g2)) and all(A.eq(a, b) for a, b in zip(r, r2))
    # uniqueness: another representative of the class reduces to the same remainder
    h = [A.random_element(rng) for _ in range(3)]
    other = upoly_add(r, upoly_mul(w.coeffs, h, A), A)
    assert all(A.eq(a, b) for a, b in zip(reduce_mod_q(other, w), list(r) + [A.zero()] * e))
    # divisible polynomials have polynomial quotients
    B = random_ring(rng)
    w = random_weierstrass(rng, B, rng.randint(0, 4))
    h = [B.random_element(rng) for _ in range(rng.randint(1, 5))]
    p = upoly_mul(w.coeffs, h, B)
    g, r = weierstrass_divide(TruncSeries(B, p, len(p) + rng.randint(0, 3)), w)
    assert all(B.is_zero(c) for c in r)
    assert all(B.is_zero(c) for c in g.coeffs[len(h):])
    assert all(B.eq(a, b) for a, b in zip(g.coeffs, h))


def test_criterion_2_weierstrass_suite():
    rng = random.Random(20240)
    with criterion(2, "500 randomized Weierstrass cases", 10.0):
        for _ in range(500):
            _weierstrass_case(rng)


# -- 3. mu lands in Z ------------------------------------------------------------------------

# (variety, order of the parametrising series); each gives one contact stratum
STRATA = [("cusp", 1), ("node", 1), ("node", 2), ("node", 3), ("umbrella", 1)]


def test_criterion_3_mu_membership():
    with criterion(3, "mu(arc) in Z for 20 rational arcs per stratum, d + 2dm equations", 10.0):
        for name, order in STRATA:
            F = arcgen.equations(name, QQ)
            d = arcgen.contact_order(name, order)
            rng = random.Random(f"{name}:{order}")
            model = None
            for _ in range(20):
                a = arcgen.random_arc(name, QQ, rng, 2 * d + 4, order)
                sp = select_split(F, a)
                assert sp.d == d
                if model is None:
                    model = build_model(sp, d)
                    assert len(model.equations) == d + 2 * d * sp.m
                assert verify_membership(model, mu(sp, a, d))
        for fx in ("cusp.json", "node.json", "umbrella.json"):
            P = load_problem(fx)
            for arc_name in load_doc(fx)["arcs"]:
                a = P.arc(arc_name)
                sp = select_split(P.equations, a)
                assert verify_membership(build_model(sp, sp.d), mu(sp, a, sp.d))


# -- 4. round trips --------------------------------------------------------------------------


@pytest.mark.parametrize("fx, samples, N, nil", [("cusp_f5.json", 100, 10, 2), ("node_f5.json", 50, 8, 3)])
def test_criterion_4_roundtrip(fx, samples, N, nil):
    doc = load_doc(fx)
    task = doc["tasks"]["roundtrip"]
    assert task["N"] == N and task["samples"] == samples
    assert load_problem(fx).test_ring(task["ring"]).nilpotency_index == nil
    with criterion(4, f"{fx[:-5]} round trip {samples}/{samples}, passes <= {nil}", 60.0):
        code, report, _ = run(["roundtrip", "--input", str(fixture_path(fx))])
        assert code == 0, report
        res = report["result"]
        assert res["ok"] and res["passed"] == samples and res["failed"] == 0
        assert all(r["forward"] and r["reverse"] and r["roundtrip"] for r in res["results"])
        assert max(r["passes"] for r in res["results"]) <= nil


# -- 5. tangent consistency, against a sympy linear-algebra oracle ----------------------------


def _domain(field_doc):
    return sympy.GF(field_doc["p"]) if field_doc["kind"] == "Fp" else sympy.QQ


def to_K(K, c):
    c = sympy.Rational(c)
    return K.quo(K.convert(int(c.p)), K.convert(int(c.q)))


def _arc_polys(doc, arc_name, N):
    t = sympy.Symbol("t")
    coeffs = doc["arcs"][arc_name]["coefficients"]
    return {v: sum(sympy.Rational(c) * t**k for k, c in enumerate(coeffs[v][: N + 1])) for v in doc["variables"]}


def oracle_arc_tangent(doc, arc_name, N, window):
    """dim of {u : Df(alpha) u = 0 mod t^(N+1)} projected to t-degrees <= window."""
    t = sympy.Symbol("t")
    K = _domain(doc["field"])
    syms = [sympy.Symbol(v) for v in doc["variables"]]
    alpha = _arc_polys(doc, arc_name, N)
    subs = {s: alpha[s.name] for s in syms}
    rows = []
    for text in doc["equations"]:
        f = sympy.sympify(text.replace("^", "**"))
        partials = [sympy.Poly(sympy.expand(sympy.diff(f, s).subs(subs)), t) for s in syms]
        series = [[p.coeff_monomial(t**j) for j in range(N + 1)] for p in partials]
        for k in range(N + 1):
            rows.append([series[i][k - l] if k >= l else 0 for i in range(len(syms)) for l in range(N + 1)])
    ncols = len(syms) * (N + 1)
    M = DomainMatrix([[to_K(K, c) for c in r] for r in rows], (len(rows), ncols), K)
    basis = M.nullspace()
    if basis.shape[0] == 0:
        return 0
    keep = [i * (N + 1) + l for i in range(len(syms)) for l in range(window + 1)]
    return basis.extract(list(range(basis.shape[0])), keep).rank()


def oracle_model_tangent(doc, arc_name, d, window):
    """Plane curve f(x, y) split as (x; y): Jacobian of the remainder equations at mu(arc)."""
    t = sympy.Symbol("t")
    K = _domain(doc["field"])
    qs = sympy.symbols(f"q0:{d}")
    xs = sympy.symbols(f"xb0_0:{2 * d}")
    ys = sympy.symbols(f"yb0_0:{d}")
    allv = qs + xs + ys
    dom = sympy.QQ[allv]
    q = t**d + sum(c * t**j for j, c in enumerate(qs))
    xb = sum(c * t**j for j, c in enumerate(xs))
    yb = sum(c * t**j for j, c in enumerate(ys))
    x, y = sympy.symbols("x y")
    f = sympy.sympify(doc["equations"][0].replace("^", "**"))
    eqs = []
    for g, mod, k in ((sympy.diff(f, y), q, d), (f, q**2, 2 * d)):
        g = g.subs({x: xb, y: yb}, simultaneous=True)
        r = sympy.Poly(g, t, domain=dom).rem(sympy.Poly(mod, t, domain=dom))
        eqs += [sympy.expand(r.as_expr().coeff(t, j)) for j in range(k)]
    coeffs = doc["arcs"][arc_name]["coefficients"]
    point = dict(zip(qs, [0] * d))
    point.update(zip(xs, [sympy.Rational(c) for c in coeffs["x"][: 2 * d]] + [0] * 2 * d))
    point.update(zip(ys, [sympy.Rational(c) for c in coeffs["y"][:d]] + [0] * d))
    J = [[to_K(K, sympy.diff(e, v).subs(point)) for v in allv] for e in eqs]
    tz = len(allv) - DomainMatrix(J, (len(J), len(allv)), K).rank()
    return tz + max(0, window - 2 * d + 1)


TANGENT_CASES = [("cusp.json", "standard", range(11, 13)), ("cusp.json", "perturbed", range(11, 13)),
                 ("cusp_f5.json", "standard", range(11, 15)), ("node.json", "sqrt", range(3, 9)),
                 ("node.json", "reparam", range(3, 9)), ("node_f5.json", "sqrt", range(3, 9))]


def test_criterion_5_tangent_consistency():
    # oracle values first, outside the timed block
    expected = {}
    for fx, arc_name, Ns in TANGENT_CASES:
        doc = load_doc(fx)
        d = 3 if fx.startswith("cusp") else 1
        for N in Ns:
            w = N - 2 * d
            expected[fx, arc_name, N] = (oracle_arc_tangent(doc, arc_name, N, w),
                                         oracle_model_tangent(doc, arc_name, d, w))
    with criterion(5, "tangent dims agree arc side vs model side at window N - 2d", 10.0):
        for fx, arc_name, Ns in TANGENT_CASES:
            P = load_problem(fx)
            a = P.arc(arc_name)
            sp = select_split(P.equations, a)
            model = build_model(sp, sp.d)
            pt = mu(sp, a, sp.d)
            for N in Ns:
                w = N - 2 * sp.d
                arc_side = arc_tangent_dim(P.equations, a, N, window=w)
                model_side = model_tangent_dim(model, pt, w)
                assert (arc_side, model_side) == expected[fx, arc_name, N], (fx, arc_name, N)
                assert arc_side == model_side


# -- 6. the Jacobian-order bound and constancy of edim ----------------------------------------


@pytest.mark.parametrize("fx, arcs, jac, budget", [
    ("node.json", ["sqrt", "reparam", "scaled"], 1, 5.0),
    ("cusp.json", ["standard", "perturbed", "scaled"], 3, 120.0),
])
def test_criterion_6_bound_and_constancy(fx, arcs, jac, budget):
    P = load_problem(fx)
    task = P.tasks["analyze"]
    label = f"{fx[:-5]}: ecodim <= {jac} = ord Jac, edim constant over {len(arcs)} arcs"
    with criterion(6, label, budget):
        edims = set()
        for name in arcs:
            out = analyze_arc(P.equations, P.arc(name), task.get("precision"), task["z_components"],
                              **task.get("limits", {}))
            assert out["jacobian_order"] == jac
            assert out["bound"]["holds"] and out["ecodim"]["ecodim"] <= jac
            edims.add(out["ecodim"]["edim"])
        assert len(edims) == 1


# -- 7. stability under dummy variables -------------------------------------------------------


def test_criterion_7_dummy_variables():
    with criterion(7, "ecodim unchanged by 1 or 2 dummy variables on every ecodim fixture", 5.0):
        checked = 0
        for fx in FIXTURES:
            P = load_problem(fx)
            for task in P.tasks.values():
                if task["command"] != "ecodim":
                    continue
                I = P.ideal(task["ideal"])
                for pt in task.get("points") or [task["point"]]:
                    base = ecodim_at_point(I, pt)["ecodim"]
                    for s in (1, 2):
                        big = I.with_dummy_variables([f"u{i}" for i in range(s)])
                        assert ecodim_at_point(big, list(pt) + ["0"] * s)["ecodim"] == base
                        checked += 1
        assert checked >= 2 * 7


# -- 8. determinism ---------------------------------------------------------------------------


def _all_reports(extra=()):
    out = []
    for fx in FIXTURES:
        for name, task in load_doc(fx)["tasks"].items():
            _, report, _ = run([task["command"], "--input", str(fixture_path(fx)), "--task", name, *extra])
            out.append(render(report).encode())
    return out


def test_criterion_8_determinism():
    with criterion(8, "two runs over every fixture task are byte-identical", None):
        first = _all_reports()
        assert first == _all_reports()
        assert first == _all_reports(["--threads", "2"])
