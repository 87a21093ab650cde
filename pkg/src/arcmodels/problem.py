"""Problem files: schema validation and conversion to library objects."""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .errors import InputError, SchemaError
from .field import parse_field
from .jets import Arc
from .parser import parse_monomial, parse_poly
from .poly import PolyRing
from .series import TruncSeries
from .testring import TestRing


def load_schema(name: str) -> dict:
    """``problem`` or ``report`` schema shipped with the package."""
    text = resources.files("arcmodels").joinpath("data", f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(doc, name: str = "problem"):
    try:
        jsonschema.validate(doc, load_schema(name))
    except jsonschema.ValidationError as exc:
        path = "/".join(str(p) for p in exc.absolute_path)
        raise SchemaError(exc.message, location=path or None) from None


class Problem:
    """A validated problem file with lazily parsed parts."""

    def __init__(self, doc: dict):
        validate(doc, "problem")
        self.doc = doc
        self.field = parse_field(doc["field"])
        self.variables = tuple(doc.get("variables", []))
        self.ring = PolyRing(self.variables, self.field)
        self.equations = [
            self.parse(text, f"equations/{i}") for i, text in enumerate(doc.get("equations", []))
        ]
        self.tasks = doc.get("tasks", {})
        self._check_references()

    @classmethod
    def from_path(cls, path) -> "Problem":
        try:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc.msg}", location=f"line {exc.lineno}") from None
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}", location=str(path)) from None
        return cls(doc)

    def _check_references(self):
        tables = {"arc": "arcs", "ring": "test_rings", "ideal": "ideals"}
        for name, task in self.tasks.items():
            for key, table in tables.items():
                ref = task.get(key)
                if ref is not None and ref not in self.doc.get(table, {}):
                    raise InputError(f"task {name!r} refers to unknown {key} {ref!r}",
                                     location=f"tasks/{name}/{key}")

    def parse(self, text: str, location: str = None, ring: PolyRing | None = None):
        ring = ring or self.ring
        try:
            return parse_poly(text, ring, ring.domain)
        except InputError as exc:
            exc.location = f"{location}:{exc.location}" if location and exc.location is not None else (location or exc.location)
            raise

    def arc(self, name: str) -> Arc:
        spec = self.doc["arcs"][name]
        N = spec["precision"]
        coeffs = []
        for v in self.variables:
            if v not in spec["coefficients"]:
                raise InputError(f"arc {name!r} has no component {v!r}", location=f"arcs/{name}")
            coeffs.append([self.field.coerce(c) for c in spec["coefficients"][v]])
        return Arc(self.field, self.variables, [TruncSeries(self.field, c, N) for c in coeffs])

    def test_ring(self, name: str) -> TestRing:
        spec = self.doc["test_rings"][name]
        gens = spec["generators"]
        rels = [parse_monomial(r, gens) for r in spec["relations"]]
        return TestRing(self.field, gens, rels)

    def ideal(self, name: str):
        from .ecodim import IdealPresentation
        from .groebner import ideal_intersect

        spec = self.doc["ideals"][name]
        loc = f"ideals/{name}"
        if "generators" in spec:
            gens = [self.parse(g, f"{loc}/generators/{i}") for i, g in enumerate(spec["generators"])]
        else:
            parts = [[self.parse(g, f"{loc}/intersection") for g in part] for part in spec["intersection"]]
            gens = parts[0]
            for part in parts[1:]:
                gens = ideal_intersect(gens, part, ring=self.ring)
        comps = spec.get("components")
        if comps is not None:
            comps = [[self.parse(g, f"{loc}/components/{k}") for g in c] for k, c in enumerate(comps)]
        return IdealPresentation(self.ring, gens, comps, spec.get("equidimensional", False))


def ring_element(A: TestRing, text):
    """Parse an element of a test ring written as a polynomial in its generators."""
    if not isinstance(text, str):
        text = str(text)
    f = parse_poly(text, list(A.generators), A.base)
    out = A.zero()
    for e, c in f.terms.items():
        out = A.add(out, A.monomial(e, c))
    return out
