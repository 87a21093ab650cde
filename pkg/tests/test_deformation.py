import random

import pytest
from sympy import GF as SymGF
from sympy.polys.matrices import DomainMatrix

from arcmodels import (
    GF,
    QQ,
    Arc,
    ArcDeformation,
    ModelDeformation,
    PolyRing,
    TruncSeries,
    WeierstrassPoly,
    build_model,
    mu,
    parse_poly,
    phi_forward,
    phi_inverse,
    select_split,
    tangent_space_dim,
    test_ring_make,
    verify_bijection,
)
from arcmodels.deformation import arc_tangent_dim, model_tangent_dim, sample_deformation
from arcmodels.errors import DefectNotContracting, NotOnStratum, PrecisionExhausted
from arcmodels.testring import dual_numbers

import arcgen
from conftest import load_problem

A2 = dual_numbers(QQ)
E = A2.gen(0)


def ser(A, coeffs, N):
    return TruncSeries(A, [A.coerce(c) for c in coeffs], N)


def cusp_setup(field=QQ, N=10):
    F = arcgen.equations("cusp", field)
    base = Arc.from_coefficients(field, ["x", "y"], [[0, 0, 1], [0, 0, 0, 1]], N)
    return F, select_split(F, base), base


def rings_over(field):
    return [dual_numbers(field), dual_numbers(field, 3), test_ring_make(field, 2, [(2, 0), (0, 2), (1, 1)])]


# -- forward and inverse on explicit data -------------------------------------------


def test_cusp_forward_example():
    F, sp, base = cusp_setup()
    x = ser(A2, [A2.scale(2, E), 0, 1], 10)
    y = ser(A2, [0, A2.scale(3, E), 0, 1], 10)
    dfm = ArcDeformation(A2, base, [x, y])
    assert dfm.satisfies(F) and dfm.reduces_to_base()
    mdef = phi_forward(dfm, sp, 3)
    assert mdef.q == WeierstrassPoly(A2, [0, A2.scale(3, E), 0])
    assert mdef.xbar == [tuple(A2.coerce(c) for c in [A2.scale(2, E), 0, 1, 0, 0, 0])]
    assert all(A2.is_zero(c) for c in mdef.ybar[0])
    assert mdef.xi[0].is_zero() and mdef.xi[0].precision == 4
    assert mdef.satisfies_model(build_model(sp, 3)) and mdef.satisfies_conditions(sp)

    back = phi_inverse(mdef, base, sp, 3)
    assert back.precision == 10
    assert back == dfm
    assert back.passes <= A2.nilpotency_index


def test_trivial_deformations_correspond():
    F, sp, base = cusp_setup()
    for A in rings_over(QQ):
        trivial = ArcDeformation.trivial(A, base)
        mdef = phi_forward(trivial, sp, 3)
        assert mdef.same_as(ModelDeformation.trivial(A, mu(sp, base, 3)))
        back = phi_inverse(ModelDeformation.trivial(A, mu(sp, base, 3)), base, sp, 3)
        assert back == trivial and back.passes == 0


def test_node_forward_example():
    P = load_problem("node_f5.json")
    base = P.arc("sqrt")
    sp = select_split(P.equations, base)
    A = dual_numbers(GF(5))
    e = A.gen(0)
    # x = t + 2e, y = y0(x) = y0(t) + 2e y0'(t)
    y0 = base["y"]
    dy = [A.coerce(k * c) for k, c in enumerate(y0.coeffs)][1:]
    x = ser(A, [A.scale(2, e), 1], 12)
    y = ser(A, [A.add(A.lift(c), A.mul(A.scale(2, e), d)) for c, d in zip(y0.coeffs, dy)], 12)
    dfm = ArcDeformation(A, base, [x, y])
    assert dfm.satisfies(P.equations)
    mdef = phi_forward(dfm, sp, 1)
    assert mdef.satisfies_conditions(sp) and mdef.satisfies_model(build_model(sp, 1))
    assert mdef.q.residue() == WeierstrassPoly.t_power(GF(5), 1)
    assert not A.is_zero(mdef.q.lower[0])
    assert phi_inverse(mdef, base, sp, 1).truncate(10) == dfm.truncate(10)


def test_lift_of_bundled_model_deformation():
    P = load_problem("cusp_f5.json")
    base = P.arc("standard")
    sp = select_split(P.equations, base)
    A = P.test_ring("dual")
    e = A.gen(0)
    mdef = ModelDeformation(A, WeierstrassPoly(A, [0, A.scale(3, e), 0]),
                            [tuple(A.coerce(c) for c in [A.scale(2, e), 0, 1, 0, 0, 0])],
                            [(A.zero(),) * 3], [ser(A, [], 4)])
    back = phi_inverse(mdef, base, sp, 3)
    assert back.satisfies(P.equations) and back.reduces_to_base()
    assert back["x"] == ser(A, [A.scale(2, e), 0, 1], 10)
    assert back["y"] == ser(A, [0, A.scale(3, e), 0, 1], 10)
    assert phi_forward(back, sp, 3).same_as(mdef)


def test_inverse_rejects_model_data_off_Z():
    F, sp, base = cusp_setup()
    mdef = ModelDeformation.trivial(A2, mu(sp, base, 3))
    bad = ModelDeformation(A2, mdef.q, mdef.xbar, [(E, A2.zero(), A2.zero())], mdef.xi)
    assert not bad.satisfies_conditions(sp)
    with pytest.raises(DefectNotContracting):
        phi_inverse(bad, base, sp, 3)


def test_forward_preconditions():
    F, sp, base = cusp_setup(N=6)
    with pytest.raises(PrecisionExhausted):
        phi_forward(ArcDeformation.trivial(A2, base), sp, 3)
    F, sp, base = cusp_setup()
    with pytest.raises(NotOnStratum):
        phi_forward(ArcDeformation.trivial(A2, base), sp, 2)


def test_forward_needs_room_for_q_squared():
    # q = t^3 + 3e t needs t^8 in q^2 A[t]
    F, sp, base = cusp_setup(N=7)
    x = ser(A2, [A2.scale(2, E), 0, 1], 7)
    y = ser(A2, [0, A2.scale(3, E), 0, 1], 7)
    assert phi_forward(ArcDeformation(A2, base, [x, y]), sp, 3).satisfies_conditions(sp)
    F, sp, base = cusp_setup(N=6)
    with pytest.raises(PrecisionExhausted):
        phi_forward(ArcDeformation(A2, base, [x.truncate(6), y.truncate(6)]), sp, 3)


def test_smooth_arc_degenerate_case():
    F = arcgen.equations("cusp", QQ)
    base = Arc.from_coefficients(QQ, ["x", "y"], [[1, 2, 1], [1, 3, 3, 1]], 8)
    sp = select_split(F, base)
    assert sp.d == 0
    dfm = sample_deformation(sp, base, A2, 8, random.Random(1))
    mdef = phi_forward(dfm, sp, 0)
    assert mdef.d == 0 and mdef.xbar == [] and mdef.xi[0] == dfm["x"]
    assert phi_inverse(mdef, base, sp, 0) == dfm


# -- sampling and round trips --------------------------------------------------------------


@pytest.mark.parametrize("field", [GF(5), GF(7), QQ], ids=["F5", "F7", "Q"])
@pytest.mark.parametrize("name", ["cusp", "node"])
def test_roundtrip_across_rings(field, name):
    F = arcgen.equations(name, field)
    base = arcgen.random_arc(name, field, random.Random(3), 16)
    sp = select_split(F, base)
    N = 10 if name == "cusp" else 8
    for A in rings_over(field):
        report = verify_bijection(sp, base, sp.d, A, N, 4, seed=11, model=build_model(sp, sp.d))
        assert report["ok"], report["results"]
        assert all(r["passes"] <= A.nilpotency_index for r in report["results"])


def test_umbrella_roundtrip():
    F = arcgen.equations("umbrella", GF(7))
    base = arcgen.random_arc("umbrella", GF(7), random.Random(5), 12)
    sp = select_split(F, base)
    report = verify_bijection(sp, base, sp.d, dual_numbers(GF(7)), 9, 3, seed=1)
    assert report["ok"], report["results"]


def test_samples_are_deformations():
    F, sp, base = cusp_setup(GF(7), 16)
    A = dual_numbers(GF(7), 3)
    rng = random.Random(9)
    for _ in range(5):
        dfm = sample_deformation(sp, base, A, 10, rng)
        assert dfm.precision == 10 and dfm.satisfies(F) and dfm.reduces_to_base()


def test_pass_counts_follow_the_m_adic_level():
    P = load_problem("node_f5.json")
    base = P.arc("sqrt")
    sp = select_split(P.equations, base)
    for k, expected in ((2, {1}), (3, {2})):
        report = verify_bijection(sp, base, 1, dual_numbers(GF(5), k), 8, 5, seed=3)
        assert {r["passes"] for r in report["results"]} == expected


def test_zero_samples_and_determinism():
    P = load_problem("cusp_f5.json")
    base = P.arc("standard")
    sp = select_split(P.equations, base)
    A = P.test_ring("dual")
    empty = verify_bijection(sp, base, 3, A, 10, 0)
    assert empty["ok"] and empty["results"] == [] and empty["samples"] == 0
    one = verify_bijection(sp, base, 3, A, 10, 6, seed=99)
    many = verify_bijection(sp, base, 3, A, 10, 6, seed=99, threads=4)
    assert one == many
    assert verify_bijection(sp, base, 3, A, 10, 6, seed=99) == one


def test_functoriality():
    field = GF(7)
    F = arcgen.equations("node", field)
    base = arcgen.random_arc("node", field, random.Random(2), 14)
    sp = select_split(F, base)
    A = test_ring_make(field, 2, [(2, 0), (0, 2), (1, 1)], names=["e1", "e2"])
    B = dual_numbers(field, 2, "e")
    maps = [A.morphism(B, [B.gen(0), B.zero()]), A.morphism(B, [B.gen(0), B.scale(3, B.gen(0))])]
    rng = random.Random(4)
    for _ in range(3):
        dfm = sample_deformation(sp, base, A, 8, rng)
        for f in maps:
            lhs = phi_forward(dfm.pushforward(B, f), sp, 1)
            rhs = phi_forward(dfm, sp, 1).pushforward(B, f)
            assert lhs.same_as(rhs)
            mdef = phi_forward(dfm, sp, 1)
            assert phi_inverse(mdef.pushforward(B, f), base, sp, 1) == phi_inverse(mdef, base, sp, 1).pushforward(B, f)


# -- tangent spaces ---------------------------------------------------------------------------


def oracle_kernel_dim(rows, ncols, p):
    M = DomainMatrix([[SymGF(p)(c) for c in r] for r in rows], (len(rows), ncols), SymGF(p))
    return ncols - M.rank()


def test_cusp_tangent_matches_explicit_matrix():
    F5 = GF(5)
    F, sp, base = cusp_setup(F5, 6)
    N = 6
    # u, v -> 2 t^3 v - 3 t^4 u, coefficients of t^0..t^6
    rows = [[0] * (2 * (N + 1)) for _ in range(N + 1)]
    for k in range(N + 1):
        for l in range(N + 1):
            if k - l == 4:
                rows[k][l] = -3
            if k - l == 3:
                rows[k][N + 1 + l] = 2
    expected = oracle_kernel_dim(rows, 2 * (N + 1), 5)
    assert tangent_space_dim(F, base, N) == expected == 14 - 4


def test_tangent_hyperplane_and_smooth_point():
    X = PolyRing(["x"], QQ)
    zero = Arc.from_coefficients(QQ, ["x"], [[0]], 3)
    assert tangent_space_dim([X.var("x")], zero, 3) == 0
    F = arcgen.equations("cusp", QQ)
    smooth = Arc.from_coefficients(QQ, ["x", "y"], [[1, 2, 1], [1, 3, 3, 1]], 6)
    for N in range(7):
        assert tangent_space_dim(F, smooth, N) == N + 1


@pytest.mark.parametrize("name, Ns", [("cusp", range(11, 15)), ("node", range(3, 9))])
def test_tangent_consistency(name, Ns):
    field = GF(101)
    F = arcgen.equations(name, field)
    base = arcgen.random_arc(name, field, random.Random(8), 20)
    sp = select_split(F, base)
    model = build_model(sp, sp.d)
    pt = mu(sp, base, sp.d)
    for N in Ns:
        w = N - 2 * sp.d
        assert arc_tangent_dim(F, base, N, window=w) == model_tangent_dim(model, pt, w)


def test_model_tangent_refuses_small_windows():
    field = GF(101)
    F = arcgen.equations("node", field)
    base = arcgen.random_arc("node", field, random.Random(8), 20)
    sp = select_split(F, base)
    with pytest.raises(PrecisionExhausted):
        model_tangent_dim(build_model(sp, 1), mu(sp, base, 1), 0)
