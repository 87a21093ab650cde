"""Regenerate the bundled problem files under src/arcmodels/data/fixtures.

Arc coefficients come from the binomial series (1 + u)^(1/2) and
(1 + u)^(3/2), computed here with Fractions, so the files do not depend on
the library's own Newton solver.  Component ideals of Z for the cusp and the
node are written out by hand (see the decisions ledger for the derivation).
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "arcmodels" / "data" / "fixtures"


def binom_series(a: Fraction, n: int):
    """Coefficients of (1 + t)^a up to t^n."""
    out = [Fraction(1)]
    for k in range(1, n + 1):
        out.append(out[-1] * (a - k + 1) / k)
    return out


def mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        for j, y in enumerate(b[: n + 1 - i]):
            out[i + j] += x * y
    return out


def compose(coeffs, inner, n):
    """sum c_k inner^k truncated at t^n (inner has zero constant term)."""
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for c in coeffs:
        out = [o + c * p for o, p in zip(out, power)]
        power = mul(power, inner, n)
    return out


def s(xs):
    return [str(x) for x in xs]


def node_arc(x, n):
    """(x, x sqrt(1 + x)) for a series x without constant term."""
    root = compose(binom_series(Fraction(1, 2), n), x, n)
    return {"precision": n, "coefficients": {"x": s(x[: n + 1]), "y": s(mul(x, root, n))}}


def cusp_arc(x_scale, u, n):
    """(c^2 t^2 (1+u), c^3 t^3 (1+u)^(3/2)); u has zero constant term."""
    c = Fraction(x_scale)
    one_u = [Fraction(1)] + u[1:]
    x = [Fraction(0)] * 2 + [c**2 * v for v in one_u]
    r = compose(binom_series(Fraction(3, 2), n), u, n)
    y = [Fraction(0)] * 3 + [c**3 * v for v in r]
    return {"precision": n, "coefficients": {"x": s(x[: n + 1]), "y": s(y[: n + 1])}}


def pad(xs, n):
    return [Fraction(v) for v in xs] + [Fraction(0)] * (n + 1 - len(xs))


NODE_COMPONENTS = [
    ["yb0_0", "xb0_0 - q0*xb0_1"],
    ["yb0_0", "xb0_0 + 1", "xb0_1"],
]

# C1: q divides x-bar; C2: q = (t - a)^3 with a = -q2/3 and (t - a)^2 divides x-bar.
CUSP_C1 = [
    "yb0_0", "yb0_1", "yb0_2",
    "xb0_0 - q0*xb0_3 + q0*q2*xb0_4 + q0*q1*xb0_5 - q0*q2^2*xb0_5",
    "xb0_1 - q1*xb0_3 - q0*xb0_4 + q1*q2*xb0_4 + q1^2*xb0_5 + q0*q2*xb0_5 - q1*q2^2*xb0_5",
    "xb0_2 - q2*xb0_3 - q1*xb0_4 + q2^2*xb0_4 - q0*xb0_5 + 2*q1*q2*xb0_5 - q2^3*xb0_5",
]
CUSP_C2 = [
    "yb0_0", "yb0_1", "yb0_2",
    "3*q1 - q2^2",
    "27*q0 - q2^3",
    "243*xb0_0 - 81*q2*xb0_1 + 27*q2^2*xb0_2 - 9*q2^3*xb0_3 + 3*q2^4*xb0_4 - q2^5*xb0_5",
    "81*xb0_1 - 54*q2*xb0_2 + 27*q2^2*xb0_3 - 12*q2^3*xb0_4 + 5*q2^4*xb0_5",
]


def cusp(field, n, tasks):
    return {
        "description": "Cusp y^2 = x^3 with arcs on the contact stratum d = 3.",
        "field": field,
        "variables": ["x", "y"],
        "equations": ["y^2 - x^3"],
        "arcs": {
            "standard": cusp_arc(1, pad([0], n), n),
            "perturbed": cusp_arc(1, pad([0, 1], n), n),
            "scaled": cusp_arc(2, pad([0, 0, 3], n), n),
        },
        "test_rings": {
            "dual": {"generators": ["e"], "relations": ["e^2"]},
            "cubic": {"generators": ["e"], "relations": ["e^3"]},
            "two": {"generators": ["e1", "e2"], "relations": ["e1^2", "e2^2", "e1*e2"]},
        },
        "tasks": tasks,
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    comps = [CUSP_C1, CUSP_C2]
    files = {}
    files["cusp.json"] = cusp({"kind": "Fp", "p": 101}, 12, {
        "split": {"command": "split", "arc": "standard"},
        "model": {"command": "model", "arc": "standard"},
        "mu": {"command": "mu", "arc": "standard"},
        "jets": {"command": "jets", "N": 3},
        "analyze": {"command": "analyze", "arc": "standard", "precision": 10,
                    "z_components": comps, "limits": {"max_degree": 6}},
        "analyze_perturbed": {"command": "analyze", "arc": "perturbed", "precision": 10,
                              "z_components": comps, "limits": {"max_degree": 6}},
        "analyze_scaled": {"command": "analyze", "arc": "scaled", "precision": 10,
                           "z_components": comps, "limits": {"max_degree": 6}},
    })
    files["cusp_f5.json"] = cusp({"kind": "Fp", "p": 5}, 24, {
        "roundtrip": {"command": "roundtrip", "arc": "standard", "ring": "dual", "N": 10,
                      "samples": 100, "seed": 2024},
        "lift": {"command": "lift", "arc": "standard", "ring": "dual", "model_deformation": {
            "q": ["0", "3*e", "0"], "xbar": [["2*e", "0", "1", "0", "0", "0"]],
            "ybar": [["0", "0", "0"]], "xi": [{"coefficients": ["0"], "precision": 4}]}},
        "prepare": {"command": "prepare", "ring": "dual",
                    "series": {"coefficients": ["0", "6*e", "0", "2"], "precision": 6}},
        "divide": {"command": "divide", "ring": "dual", "q": ["0", "e"],
                   "series": {"coefficients": ["0", "0", "0", "1"], "precision": 6}},
    })
    n = 12
    t = [Fraction(0), Fraction(1)]
    node_arcs = {
        "sqrt": node_arc(pad(t, n), n),
        "reparam": node_arc(pad([0, 1, 1], n), n),
        "scaled": node_arc(pad([0, 2], n), n),
    }
    node_tasks = {
        "split": {"command": "split", "arc": "sqrt"},
        "model": {"command": "model", "arc": "sqrt"},
        "mu": {"command": "mu", "arc": "sqrt"},
        "jets": {"command": "jets", "N": 2},
        "analyze": {"command": "analyze", "arc": "sqrt", "precision": 8, "z_components": NODE_COMPONENTS},
        "analyze_reparam": {"command": "analyze", "arc": "reparam", "precision": 8,
                            "z_components": NODE_COMPONENTS},
        "analyze_scaled": {"command": "analyze", "arc": "scaled", "precision": 8,
                           "z_components": NODE_COMPONENTS},
    }
    node = {
        "description": "Node y^2 = x^2 + x^3 with the branch y = x sqrt(1 + x).",
        "field": {"kind": "Q"},
        "variables": ["x", "y"],
        "equations": ["y^2 - x^2 - x^3"],
        "arcs": node_arcs,
        "test_rings": {"dual": {"generators": ["e"], "relations": ["e^2"]},
                       "cubic": {"generators": ["e"], "relations": ["e^3"]}},
        "tasks": node_tasks,
    }
    files["node.json"] = node
    n5 = 20
    node_f5 = dict(node, field={"kind": "Fp", "p": 5},
                   arcs={"sqrt": node_arc(pad(t, n5), n5)},
                   tasks={"roundtrip": {"command": "roundtrip", "arc": "sqrt", "ring": "cubic", "N": 8,
                                        "samples": 50, "seed": 2024}})
    files["node_f5.json"] = node_f5
    files["umbrella.json"] = {
        "description": "Whitney umbrella z^2 = x^2 y, a hypersurface split by z.",
        "field": {"kind": "Q"},
        "variables": ["x", "y", "z"],
        "equations": ["z^2 - x^2*y"],
        "arcs": {
            "simple": {"precision": 10, "coefficients": {"x": ["0", "1"], "y": ["0", "0", "1"], "z": ["0", "0", "1"]}},
            "shifted": {"precision": 10, "coefficients": {"x": ["0", "1"], "y": ["0", "0", "4"], "z": ["0", "0", "2"]}},
            "cubic": {"precision": 10, "coefficients": {"x": ["0", "0", "1"], "y": ["0", "0", "1"], "z": ["0", "0", "0", "1"]}},
        },
        "ideals": {"umbrella": {"generators": ["z^2 - x^2*y"], "equidimensional": True}},
        "tasks": {
            "split": {"command": "split", "arc": "simple"},
            "model": {"command": "model", "arc": "simple"},
            "mu": {"command": "mu", "arc": "simple"},
            "handle": {"command": "ecodim", "ideal": "umbrella",
                       "points": [["0", str(k), "0"] for k in range(-2, 3)]},
        },
    }
    files["example35.json"] = {
        "description": "The union of a plane and a doubled line: (x) intersected with (y, z)^2.",
        "field": {"kind": "Q"},
        "variables": ["x", "y", "z"],
        "ideals": {
            "union": {"intersection": [["x"], ["y^2", "y*z", "z^2"]],
                      "components": [["x"], ["y^2", "y*z", "z^2"]]},
        },
        "tasks": {
            "ecodim": {"command": "ecodim", "ideal": "union", "point": ["0", "0", "0"]},
            "ecodim_line": {"command": "ecodim", "ideal": "union", "point": ["1", "0", "0"]},
            "gb": {"command": "gb", "ideal": "union", "order": "degrevlex"},
        },
    }
    for name, doc in files.items():
        (OUT / name).write_text(json.dumps(doc, indent=2) + "\n")
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()
