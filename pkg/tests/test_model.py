import random

import pytest
import sympy

from arcmodels import GF, QQ, PolyRing, build_model, mu, mu_Z, parse_poly, select_split, verify_membership
from arcmodels.errors import NotOnStratum, PrecisionExhausted
from arcmodels.jets import Arc, SplitPresentation
from arcmodels.model import ModelPoint, lambda_map

import arcgen
from conftest import load_problem

XY = PolyRing(["x", "y"], QQ)


def split_of(texts, names, y_vars, field=QQ):
    R = PolyRing(names, field)
    F = [parse_poly(t, R) for t in texts]
    return SplitPresentation(names, [v for v in names if v not in y_vars], y_vars, F)


def sympy_model_equations(text, d):
    """Remainder coefficients for a single plane curve f(x, y), split (x; y)."""
    t = sympy.Symbol("t")
    qs = sympy.symbols(f"q0:{d}")
    xs = sympy.symbols(f"xb0_0:{2 * d}")
    ys = sympy.symbols(f"yb0_0:{d}")
    dom = sympy.QQ[qs + xs + ys]
    q = t**d + sum(c * t**j for j, c in enumerate(qs))
    xb = sum(c * t**j for j, c in enumerate(xs))
    yb = sum(c * t**j for j, c in enumerate(ys))
    x, y = sympy.symbols("x y")
    f = sympy.sympify(text.replace("^", "**"))
    out = []
    for g, mod, k in ((sympy.diff(f, y), q, d), (f, q**2, 2 * d)):
        g = g.subs({x: xb, y: yb}, simultaneous=True)
        r = sympy.Poly(g, t, domain=dom).rem(sympy.Poly(mod, t, domain=dom))
        out += [sympy.expand(r.as_expr().coeff(t, j)) for j in range(k)]
    return out


def to_sympy(f):
    syms = [sympy.Symbol(v) for v in f.variables]
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) *
                            sympy.prod([s**k for s, k in zip(syms, e)]) for e, c in f.terms.items()))


@pytest.mark.parametrize("text, d", [("y^2 - x^3", 3), ("y^2 - x^2 - x^3", 1), ("y^2 - x^2 - x^3", 2)])
def test_model_equations_match_sympy(text, d):
    model = build_model(split_of([text], ["x", "y"], ["y"]), d)
    assert [to_sympy(f) for f in model.equations] == sympy_model_equations(text, d)


def test_cusp_model_shape():
    model = build_model(split_of(["y^2 - x^3"], ["x", "y"], ["y"]), 3)
    assert len(model.equations) == 9 and model.ring.nvars == 12
    assert [str(f) for f in model.equations[:3]] == ["2*yb0_0", "2*yb0_1", "2*yb0_2"]
    assert list(model.q_vars) == ["q0", "q1", "q2"]
    assert list(model.xb_vars(0)) == [f"xb0_{j}" for j in range(6)]


def test_node_model_shape():
    model = build_model(split_of(["y^2 - x^2 - x^3"], ["x", "y"], ["y"]), 1)
    assert list(model.variables) == ["q0", "xb0_0", "xb0_1", "yb0_0"]
    assert len(model.equations) == 3 and str(model.equations[0]) == "2*yb0_0"


def test_empty_model():
    model = build_model(split_of(["y^2 - x^3"], ["x", "y"], ["y"]), 0)
    assert model.equations == [] and model.ring.nvars == 0
    assert verify_membership(model, ())


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4])
@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_equation_count(d, n, m):
    names = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(m)]
    R = PolyRing(names, GF(101))
    F = [R.var(f"y{i}") ** 2 + 3 * R.var(f"y{m - 1 - i}") * R.var(f"x{i % n}") - R.var(f"x{n - 1}") ** 3
         for i in range(m)]
    sp = SplitPresentation(names, names[:n], names[n:], F)
    model = build_model(sp, d)
    assert len(model.equations) == d + 2 * d * m
    assert model.ring.nvars == d + 2 * d * n + d * m


def test_base_change_to_prime_field():
    texts = ["y^2 - x^2 - 1/2*x^3"]
    over_q = build_model(split_of(texts, ["x", "y"], ["y"]), 2)
    over_p = build_model(split_of(texts, ["x", "y"], ["y"], GF(7)), 2)
    F7 = GF(7)
    reduced = [f.change_ring(over_p.ring, F7.coerce) for f in over_q.equations]
    assert reduced == over_p.equations


def test_mu_examples():
    cusp = split_of(["y^2 - x^3"], ["x", "y"], ["y"])
    a = Arc.from_coefficients(QQ, ["x", "y"], [[0, 0, 1], [0, 0, 0, 1]], 10)
    pt = mu(cusp, a, 3)
    assert pt.q == (0, 0, 0) and pt.xbar == [(0, 0, 1, 0, 0, 0)] and pt.ybar == [(0, 0, 0)]
    assert pt.xi[0].is_zero() and pt.xi[0].precision == 4
    assert verify_membership(build_model(cusp, 3), pt)

    P = load_problem("node.json")
    node = select_split(P.equations, P.arc("sqrt"))
    pt = mu(node, P.arc("sqrt"), 1)
    assert pt.q == (0,) and pt.xbar == [(0, 1)] and pt.ybar == [(0,)] and pt.xi[0].is_zero()
    assert mu_Z(node, P.arc("sqrt"), 1) == (0, 0, 1, 0)


def test_mu_smooth_point():
    cusp = split_of(["y^2 - x^3"], ["x", "y"], ["y"])
    a = Arc.from_coefficients(QQ, ["x", "y"], [[1, 2], [1, 3, 3, 1]], 3)  # (1+t)^2, (1+t)^3
    pt = mu(cusp, a, 0)
    assert pt.coordinates() == () and pt.xi[0] == a["x"]


def test_membership_failures():
    model = build_model(split_of(["y^2 - x^3"], ["x", "y"], ["y"]), 3)
    point = [0] * 12
    point[-3] = 1
    assert not verify_membership(model, point)
    assert verify_membership(model, [0] * 12)


def test_mu_errors():
    cusp = split_of(["y^2 - x^3"], ["x", "y"], ["y"])
    a = Arc.from_coefficients(QQ, ["x", "y"], [[0, 0, 1], [0, 0, 0, 1]], 5)
    with pytest.raises(PrecisionExhausted):
        mu(cusp, a, 3)
    with pytest.raises(NotOnStratum):
        mu(cusp, Arc.from_coefficients(QQ, ["x", "y"], [[0, 0, 1], [0, 0, 0, 1]], 10), 2)


@pytest.mark.parametrize("name", ["cusp", "node", "umbrella"])
@pytest.mark.parametrize("field", [QQ, GF(101)], ids=["Q", "F101"])
def test_mu_lands_in_Z_and_lambda_reconstructs(name, field):
    rng = random.Random(f"mu:{name}")
    F = arcgen.equations(name, field)
    for _ in range(5):
        order = rng.choice([1, 2]) if name != "cusp" else 1
        a = arcgen.random_arc(name, field, rng, 12, order)
        sp = select_split(F, a)
        assert sp.d == arcgen.contact_order(name, order)
        model = build_model(sp, sp.d)
        pt = mu(sp, a, sp.d)
        assert verify_membership(model, pt)
        for v, x in zip(sp.x_vars, lambda_map(pt)):
            assert x == a[v]


def test_model_point_json():
    pt = ModelPoint(GF(5), (0,), [(4, 1)], [(0,)], [])
    assert pt.to_json() == {"q": ["0"], "xbar": [["-1", "1"]], "ybar": [["0"]], "xi": []}
