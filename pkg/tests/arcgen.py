"""Random rational arcs on the bundled varieties, built from parametrisations.

cusp:     (s^2, s^3)                      d = 3 ord s
node:     (2s + s^2, (1 + s)(2s + s^2))   d = ord s
umbrella: (x, w^2, x w)                   d = ord x + ord w  (split z)
"""

from arcmodels import Arc, PolyRing, TruncSeries, parse_poly

EQUATIONS = {
    "cusp": (("x", "y"), ["y^2 - x^3"]),
    "node": (("x", "y"), ["y^2 - x^2 - x^3"]),
    "umbrella": (("x", "y", "z"), ["z^2 - x^2*y"]),
}


def equations(name, field):
    names, eqs = EQUATIONS[name]
    ring = PolyRing(names, field)
    return [parse_poly(e, ring) for e in eqs]


def _series(rng, field, order, N, bound=4):
    """Random series of exact order ``order``."""
    coeffs = [field.zero()] * (N + 1)
    lead = 0
    while lead == 0:
        lead = rng.randint(-bound, bound)
    coeffs[order] = field.coerce(lead)
    for k in range(order + 1, N + 1):
        coeffs[k] = field.coerce(rng.randint(-bound, bound))
    return TruncSeries(field, coeffs, N)


def random_arc(name, field, rng, N, order=1):
    if name == "cusp":
        s = _series(rng, field, order, N)
        comps = [s * s, s * s * s]
    elif name == "node":
        s = _series(rng, field, order, N)
        x = s.scale(2) + s * s
        comps = [x, (s + 1) * x]
    elif name == "umbrella":
        x = _series(rng, field, order, N)
        w = _series(rng, field, order, N)
        comps = [x, w * w, x * w]
    else:
        raise KeyError(name)
    return Arc(field, EQUATIONS[name][0], comps)


def contact_order(name, order):
    return {"cusp": 3 * order, "node": order, "umbrella": 2 * order}[name]
