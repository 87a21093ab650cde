"""Finite-dimensional local Artinian algebras K[e_1..e_s]/(monomials).

These are the probe rings for deformations.  Because the relations are
monomials, the quotient has a basis of standard monomials (those not
divisible by any relation) and multiplication never needs a Groebner step.
"""

from __future__ import annotations

from .errors import DomainMismatch, NotInvertible, NotNilpotent
from .field import FieldSpec


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


class TestRing:
    """K[e_1..e_s] modulo a monomial ideal containing a power of (e_1..e_s)."""

    __test__ = False  # keep pytest from collecting this class

    def __init__(self, base: FieldSpec, generators, relations):
        self.base = base
        self.generators = tuple(generators)
        s = len(self.generators)
        rels = []
        for r in relations:
            r = tuple(int(x) for x in r)
            if len(r) != s or any(x < 0 for x in r) or sum(r) == 0:
                raise ValueError(f"bad relation exponent {r!r}")
            rels.append(r)
        # keep only minimal generators of the monomial ideal
        rels = sorted(set(rels), key=lambda r: (sum(r), r))
        minimal = []
        for r in rels:
            if not any(_divides(m, r) for m in minimal):
                minimal.append(r)
        self.relations = tuple(minimal)
        for i in range(s):
            pure = any(r[i] > 0 and sum(r) == r[i] for r in self.relations)
            if not pure:
                raise NotNilpotent(
                    f"no power of {self.generators[i]} lies in the relation ideal"
                )
        self.basis = self._standard_monomials()
        self.index = {m: k for k, m in enumerate(self.basis)}
        self.nilpotency_index = max(sum(m) for m in self.basis) + 1
        self._table = self._mult_table()
        self._zero = TestElem(self, (base.zero(),) * len(self.basis))
        self._one = TestElem(self, (base.one(),) + (base.zero(),) * (len(self.basis) - 1))

    # -- construction helpers ----------------------------------------------

    def _in_ideal(self, m) -> bool:
        return any(_divides(r, m) for r in self.relations)

    def _standard_monomials(self):
        s = len(self.generators)
        one = (0,) * s
        seen = {one}
        frontier = [one]
        while frontier:
            nxt = []
            for m in frontier:
                for i in range(s):
                    c = m[:i] + (m[i] + 1,) + m[i + 1:]
                    if c not in seen and not self._in_ideal(c):
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return tuple(sorted(seen, key=lambda m: (sum(m), tuple(-x for x in m))))

    def _mult_table(self):
        table = []
        for a in self.basis:
            row = []
            for b in self.basis:
                c = tuple(x + y for x, y in zip(a, b))
                row.append(self.index.get(c, -1))
            table.append(row)
        return table

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, TestRing)
            and self.base == other.base
            and self.generators == other.generators
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.base, self.generators, self.relations))

    def __repr__(self):
        rels = ", ".join(self.monomial_name(r) for r in self.relations)
        return f"{self.base}[{', '.join(self.generators)}]/({rels})"

    @property
    def field(self) -> FieldSpec:
        return self.base

    @property
    def dim(self) -> int:
        return len(self.basis)

    def monomial_name(self, m) -> str:
        parts = []
        for g, e in zip(self.generators, m):
            if e == 1:
                parts.append(g)
            elif e > 1:
                parts.append(f"{g}^{e}")
        return "*".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {
            "field": self.base.to_json(),
            "generators": list(self.generators),
            "relations": [self.monomial_name(r) for r in self.relations],
            "basis": [self.monomial_name(m) for m in self.basis],
            "nilpotency_index": self.nilpotency_index,
        }

    # -- ring protocol ------------------------------------------------------

    def zero(self) -> "TestElem":
        return self._zero

    def one(self) -> "TestElem":
        return self._one

    def gen(self, i: int) -> "TestElem":
        m = tuple(1 if k == i else 0 for k in range(len(self.generators)))
        return self.monomial(m)

    def monomial(self, m, coeff=None) -> "TestElem":
        coords = [self.base.zero()] * len(self.basis)
        k = self.index.get(tuple(m))
        if k is not None:
            coords[k] = self.base.one() if coeff is None else coeff
        return TestElem(self, tuple(coords))

    def lift(self, a) -> "TestElem":
        """Embed a base-field scalar."""
        z = self.base.zero()
        return TestElem(self, (a,) + (z,) * (len(self.basis) - 1))

    def coerce(self, value) -> "TestElem":
        if isinstance(value, TestElem):
            if value.ring != self:
                raise DomainMismatch(f"element of {value.ring} used in {self}")
            return value
        return self.lift(self.base.coerce(value))

    def from_coords(self, coords) -> "TestElem":
        coords = tuple(coords)
        if len(coords) != len(self.basis):
            raise ValueError("coordinate vector has the wrong length")
        return TestElem(self, coords)

    def add(self, a, b):
        F = self.base
        return TestElem(self, tuple(F.add(x, y) for x, y in zip(a.coords, b.coords)))

    def sub(self, a, b):
        F = self.base
        return TestElem(self, tuple(F.sub(x, y) for x, y in zip(a.coords, b.coords)))

    def neg(self, a):
        F = self.base
        return TestElem(self, tuple(F.neg(x) for x in a.coords))

    def mul(self, a, b):
        F = self.base
        out = [F.zero()] * len(self.basis)
        table = self._table
        bc = b.coords
        for i, x in enumerate(a.coords):
            if x == 0:
                continue
            row = table[i]
            for j, y in enumerate(bc):
                if y == 0:
                    continue
                k = row[j]
                if k >= 0:
                    out[k] = F.add(out[k], F.mul(x, y))
        return TestElem(self, tuple(out))

    def scale(self, c, a):
        """Multiply by a base-field scalar."""
        F = self.base
        return TestElem(self, tuple(F.mul(c, x) for x in a.coords))

    def pow(self, a, k: int):
        result = self._one
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a.coords)

    def eq(self, a, b) -> bool:
        return a.coords == b.coords

    def residue(self, a):
        """sigma_A: the evaluation e_i -> 0."""
        return a.coords[0]

    def is_unit(self, a) -> bool:
        return a.coords[0] != 0

    def inv(self, a) -> "TestElem":
        c = a.coords[0]
        if c == 0:
            raise NotInvertible("element of the maximal ideal is not invertible")
        F = self.base
        ci = F.inv(c)
        # a = c (1 + n) with n nilpotent; (1 + n)^-1 = sum (-n)^k
        n = TestElem(self, (F.zero(),) + tuple(F.mul(ci, x) for x in a.coords[1:]))
        minus_n = self.neg(n)
        term = self._one
        total = self._one
        for _ in range(1, self.nilpotency_index):
            term = self.mul(term, minus_n)
            total = self.add(total, term)
        return self.scale(ci, total)

    def mdeg(self, a):
        """Largest k with a in m^k (None for zero)."""
        best = None
        for m, x in zip(self.basis, a.coords):
            if x != 0:
                d = sum(m)
                if best is None or d < best:
                    best = d
        return best

    def in_power(self, a, k: int) -> bool:
        """True when a lies in m^k."""
        d = self.mdeg(a)
        return d is None or d >= k

    def render(self, a) -> str:
        F = self.base
        parts = []
        for m, x in zip(self.basis, a.coords):
            if x == 0:
                continue
            name = self.monomial_name(m)
            val = F.render(x)
            if name == "1":
                parts.append(val)
            elif val == "1":
                parts.append(name)
            elif val == "-1":
                parts.append("-" + name)
            else:
                parts.append(f"{val}*{name}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def elem_json(self, a) -> dict:
        return {
            self.monomial_name(m): self.base.render(x)
            for m, x in zip(self.basis, a.coords)
            if x != 0
        }

    def random_element(self, rng, bound: int = 5, in_m: bool = False) -> "TestElem":
        coords = [self.base.random_element(rng, bound) for _ in self.basis]
        if in_m:
            coords[0] = self.base.zero()
        return TestElem(self, tuple(coords))

    # -- morphisms ----------------------------------------------------------

    def morphism(self, target: "TestRing", images):
        """Local K-algebra map sending e_i to ``images[i]`` (elements of m_target).

        Returns a function TestElem(self) -> TestElem(target); raises
        ``ValueError`` when a relation does not map to zero.
        """
        if target.base != self.base:
            raise DomainMismatch("morphisms must fix the base field")
        images = [target.coerce(x) for x in images]
        if len(images) != len(self.generators):
            raise ValueError("one image per generator is required")
        if any(target.residue(x) != 0 for x in images):
            raise ValueError("generators must map into the maximal ideal")

        def mono_image(m):
            out = target.one()
            for g, e in zip(images, m):
                for _ in range(e):
                    out = target.mul(out, g)
            return out

        for r in self.relations:
            if not target.is_zero(mono_image(r)):
                raise ValueError("relation does not map to zero")
        basis_images = [mono_image(m) for m in self.basis]

        def apply(a: TestElem) -> TestElem:
            out = target.zero()
            for x, img in zip(a.coords, basis_images):
                if x != 0:
                    out = target.add(out, target.scale(x, img))
            return out

        return apply


class TestElem:
    """Immutable element of a :class:`TestRing` in standard-monomial coordinates."""

    __test__ = False
    __slots__ = ("ring", "coords")

    def __init__(self, ring: TestRing, coords):
        self.ring = ring
        self.coords = coords

    def _other(self, other):
        return self.ring.coerce(other)

    def __add__(self, other):
        return self.ring.add(self, self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ring.sub(self, self._other(other))

    def __rsub__(self, other):
        return self.ring.sub(self._other(other), self)

    def __mul__(self, other):
        return self.ring.mul(self, self._other(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring.neg(self)

    def __pow__(self, k: int):
        return self.ring.pow(self, k)

    def __eq__(self, other):
        if isinstance(other, TestElem):
            return self.ring == other.ring and self.coords == other.coords
        try:
            return self.coords == self.ring.coerce(other).coords
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"TestElem({self.ring.render(self)})"


def test_ring_make(base: FieldSpec, s: int, relations, names=None) -> TestRing:
    """Build K[e_1..e_s]/(relations) with relations given as exponent tuples."""
    if names is None:
        names = ["e"] if s == 1 else [f"e{i + 1}" for i in range(s)]
    return TestRing(base, names, relations)


def dual_numbers(base: FieldSpec, k: int = 2, name: str = "e") -> TestRing:
    """K[e]/(e^k)."""
    return TestRing(base, [name], [(k,)])


def square_zero(base: FieldSpec, s: int) -> TestRing:
    """K[e_1..e_s]/(e_i e_j for all i <= j)."""
    rels = []
    for i in range(s):
        for j in range(i, s):
            r = [0] * s
            r[i] += 1
            r[j] += 1
            rels.append(tuple(r))
    return test_ring_make(base, s, rels)


test_ring_make.__test__ = False
