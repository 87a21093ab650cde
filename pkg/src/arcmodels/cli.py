"""Command-line front end: ``arcmodels <command> --input problem.json [--task NAME]``.

Every command reads one task from a problem file, runs the matching library
operation and prints a canonical JSON report (sorted keys, exact scalars as
strings).  Errors are printed as ``{"error": {code, message, location}}``
with exit status 2 (input), 3 (precondition), 4 (resource limit) or
5 (internal consistency trap).
"""

from __future__ import annotations

import argparse
import json
import sys

from .deformation import ModelDeformation, phi_inverse, verify_bijection
from .ecodim import analyze_arc, ecodim_at_point, ecodim_profile
from .errors import ArcModelsError, InputError
from .groebner import buchberger, ideal_dimension, is_groebner, parse_order
from .jets import SplitPresentation, jacobian_order, jet_equations, jet_ring, select_split, stratum_membership
from .model import build_model, mu, verify_membership
from .problem import Problem, ring_element, validate
from .series import TruncSeries, ord_to_json
from .weierstrass import WeierstrassPoly, weierstrass_divide, weierstrass_prepare

COMMANDS = ("jets", "split", "model", "mu", "prepare", "divide", "lift",
            "roundtrip", "gb", "ecodim", "analyze")


def _need(task, key, name):
    if key not in task:
        raise InputError(f"task {name!r} needs {key!r}", location=f"tasks/{name}/{key}")
    return task[key]


def _split(P: Problem, task, name):
    arc = P.arc(_need(task, "arc", name))
    if "split" in task:
        y_vars = task["split"]["y_vars"]
        x_vars = [v for v in P.variables if v not in y_vars]
        sp = SplitPresentation(P.variables, x_vars, y_vars, P.equations)
        d = task.get("d")
        if d is None:
            from .series import series_ord

            d = series_ord(arc.evaluate(sp.delta))
        return sp.with_d(d), arc
    sp = select_split(P.equations, arc)
    if "d" in task and task["d"] != sp.d:
        sp = sp.with_d(task["d"])
    return sp, arc


def _limits(task, args):
    limits = dict(task.get("limits", {}))
    if args.max_pairs is not None:
        limits["max_pairs"] = args.max_pairs
    if args.max_degree is not None:
        limits["max_degree"] = args.max_degree
    return limits


def _series_over(A, spec):
    return TruncSeries(A, [ring_element(A, c) for c in spec["coefficients"]], spec["precision"])


# -- command handlers -------------------------------------------------------------


def cmd_jets(P, task, name, args):
    N = _need(task, "N", name)
    eqs = jet_equations(P.equations, N)
    return {"N": N, "variables": list(jet_ring(P.ring, N).variables), "equations": [str(f) for f in eqs]}


def cmd_split(P, task, name, args):
    sp, arc = _split(P, task, name)
    out = sp.to_json()
    out["jacobian_order"] = ord_to_json(jacobian_order(P.equations, len(P.equations), arc))
    return out


def cmd_model(P, task, name, args):
    sp, _ = _split(P, task, name)
    return build_model(sp, sp.d).to_json()


def cmd_mu(P, task, name, args):
    sp, arc = _split(P, task, name)
    pt = mu(sp, arc, sp.d)
    model = build_model(sp, sp.d)
    return {"d": sp.d, "point": pt.to_json(), "mu_Z": [P.field.render(c) for c in pt.coordinates()],
            "variables": list(model.variables), "member": verify_membership(model, pt)}


def cmd_prepare(P, task, name, args):
    A = P.test_ring(_need(task, "ring", name))
    u, q = weierstrass_prepare(_series_over(A, _need(task, "series", name)))
    return {"u": u.to_json(), "q": q.to_json()}


def cmd_divide(P, task, name, args):
    A = P.test_ring(_need(task, "ring", name))
    f = _series_over(A, _need(task, "series", name))
    q = WeierstrassPoly(A, [ring_element(A, c) for c in _need(task, "q", name)])
    g, r = weierstrass_divide(f, q)
    return {"quotient": g.to_json(), "remainder": [A.elem_json(c) for c in r]}


def cmd_lift(P, task, name, args):
    sp, arc = _split(P, task, name)
    A = P.test_ring(_need(task, "ring", name))
    spec = _need(task, "model_deformation", name)
    el = lambda c: ring_element(A, c)  # noqa: E731
    mdef = ModelDeformation(
        A,
        WeierstrassPoly(A, [el(c) for c in spec["q"]]),
        [tuple(el(c) for c in p) for p in spec["xbar"]],
        [tuple(el(c) for c in p) for p in spec["ybar"]],
        [_series_over(A, s) for s in spec["xi"]],
    )
    dfm = phi_inverse(mdef, arc, sp, sp.d)
    out = dfm.to_json()
    out["satisfies_equations"] = dfm.satisfies(P.equations)
    out["reduces_to_base"] = dfm.reduces_to_base()
    return out


def cmd_roundtrip(P, task, name, args):
    sp, arc = _split(P, task, name)
    A = P.test_ring(_need(task, "ring", name))
    seed = args.seed if args.seed is not None else task.get("seed", 0)
    threads = args.threads or task.get("threads", 1)
    if not stratum_membership(sp, arc, sp.d):
        from .errors import NotOnStratum

        raise NotOnStratum(f"arc is not on the stratum d = {sp.d}")
    return verify_bijection(sp, arc, sp.d, A, _need(task, "N", name), task.get("samples", 0),
                            seed=seed, model=build_model(sp, sp.d), threads=threads)


def cmd_gb(P, task, name, args):
    if "ideal" in task:
        gens = P.ideal(task["ideal"]).generators
    else:
        gens = [P.parse(g, f"tasks/{name}/generators/{i}") for i, g in enumerate(_need(task, "generators", name))]
    gb = buchberger(gens, parse_order(task.get("order", "degrevlex")), ring=P.ring, **_limits(task, args))
    out = gb.to_json()
    dim = ideal_dimension(gb)
    out["dimension"] = dim if isinstance(dim, int) else dim.to_json()
    out["is_groebner"] = is_groebner(gb)
    return out


def cmd_ecodim(P, task, name, args):
    I = P.ideal(_need(task, "ideal", name))
    limits = _limits(task, args)
    eq = task.get("equidimensional")
    if "points" in task:
        return {"profile": ecodim_profile(I, task["points"], equidimensional=eq, **limits)}
    return ecodim_at_point(I, _need(task, "point", name), equidimensional=eq, **limits)


def cmd_analyze(P, task, name, args):
    arc = P.arc(_need(task, "arc", name))
    return analyze_arc(P.equations, arc, task.get("precision"), task.get("z_components"),
                       task.get("equidimensional", False), **_limits(task, args))


HANDLERS = {c: globals()[f"cmd_{c}"] for c in COMMANDS}


# -- entry point ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", required=True, help="problem file (JSON)")
    common.add_argument("--task", help="task name; default is the first task using this command")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, help="RNG seed (unsigned 64-bit) for sampling commands")
    common.add_argument("--max-pairs", type=int, help="S-pair budget for Groebner computations")
    common.add_argument("--max-degree", type=int, help="S-pair degree bound for Groebner computations")
    common.add_argument("--threads", type=int, default=None, help="worker threads for sampling")
    parser = argparse.ArgumentParser(prog="arcmodels", description="Formal models of arcs: batch front end.")
    sub = parser.add_subparsers(dest="command", required=True)
    for c in COMMANDS:
        sub.add_parser(c, parents=[common])
    return parser


def _pick_task(P: Problem, command: str, name: str | None):
    if name is not None:
        if name not in P.tasks:
            raise InputError(f"unknown task {name!r}", location="--task")
        task = P.tasks[name]
        if task["command"] != command:
            raise InputError(f"task {name!r} runs {task['command']!r}, not {command!r}", location="--task")
        return name, task
    for n, task in P.tasks.items():
        if task["command"] == command:
            return n, task
    raise InputError(f"no task uses the command {command!r}", location="tasks")


def render(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def run(argv=None):
    """Return (exit code, report dict)."""
    args = build_parser().parse_args(argv)
    name = args.task
    try:
        if args.seed is not None and not 0 <= args.seed < 2**64:
            raise InputError("seed must be an unsigned 64-bit integer", location="--seed")
        P = Problem.from_path(args.input)
        name, task = _pick_task(P, args.command, args.task)
        result = HANDLERS[args.command](P, task, name, args)
        seed = None
        if args.command == "roundtrip":
            seed = args.seed if args.seed is not None else task.get("seed", 0)
        report = {"command": args.command, "task": name, "field": P.field.to_json(),
                  "seed": seed, "result": result}
        validate(report, "report")
        return 0, report, args
    except ArcModelsError as exc:
        err = exc.to_json()
        if err["location"] is not None and not isinstance(err["location"], (str, int)):
            err["location"] = str(err["location"])
        return exc.exit_code, {"error": err, "task": name}, args
    except RecursionError as exc:  # very deep expressions
        return 2, {"error": {"code": "InputError", "message": str(exc), "location": None}, "task": name}, args


def main(argv=None) -> int:
    code, report, args = run(argv)
    text = render(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
