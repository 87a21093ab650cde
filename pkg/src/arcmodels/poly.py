"""Sparse multivariate polynomials with exact coefficients.

A :class:`PolyRing` fixes an ordered variable list and a coefficient domain
(a :class:`~arcmodels.field.FieldSpec` or a
:class:`~arcmodels.testring.TestRing`).  :class:`MultiPoly` stores a dict from
exponent tuples to nonzero coefficients; iteration and rendering use
degree-lexicographic order on the declared variables, largest term first.

PolyRing itself satisfies the small ring protocol used across the package
(``zero/one/add/sub/neg/mul/is_zero/coerce``), so polynomials can serve as
coefficients of t-series and t-polynomials.
"""

from __future__ import annotations

from .errors import DomainMismatch, NotSquare, UnknownVariable


def deglex_key(exp):
    return (sum(exp), exp)


class PolyRing:
    def __init__(self, variables, domain):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables!r}")
        self.variables = variables
        self.domain = domain
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.variables, self.domain))

    def __repr__(self):
        return f"PolyRing({list(self.variables)}, {self.domain})"

    @property
    def field(self):
        return self.domain.field

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    # -- element constructors ---------------------------------------------

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return MultiPoly(self, {self._zero_exp: self.domain.one()})

    def const(self, c) -> "MultiPoly":
        c = self.domain.coerce(c)
        if self.domain.is_zero(c):
            return self.zero()
        return MultiPoly(self, {self._zero_exp: c})

    def var(self, name: str) -> "MultiPoly":
        i = self.index(name)
        exp = tuple(1 if k == i else 0 for k in range(self.nvars))
        return MultiPoly(self, {exp: self.domain.one()})

    def gens(self):
        return [self.var(v) for v in self.variables]

    def monomial(self, exp, coeff=None) -> "MultiPoly":
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError("exponent vector length mismatch")
        c = self.domain.one() if coeff is None else self.domain.coerce(coeff)
        if self.domain.is_zero(c):
            return self.zero()
        return MultiPoly(self, {exp: c})

    def from_terms(self, terms) -> "MultiPoly":
        """Build from (exponent, coefficient) pairs, collecting like terms."""
        D = self.domain
        out = {}
        for exp, c in terms:
            exp = tuple(exp)
            if len(exp) != self.nvars:
                raise ValueError("exponent vector length mismatch")
            c = D.coerce(c)
            if exp in out:
                c = D.add(out[exp], c)
            if D.is_zero(c):
                out.pop(exp, None)
            else:
                out[exp] = c
        return MultiPoly(self, out)

    # -- ring protocol ----------------------------------------------------

    def coerce(self, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            if value.ring != self:
                raise DomainMismatch(f"polynomial over {value.ring} used in {self}")
            return value
        return self.const(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, k):
        return a**k

    def is_zero(self, a) -> bool:
        return not a.terms

    def eq(self, a, b) -> bool:
        return a == b

    def render(self, a) -> str:
        return render_poly(a)

    def residue(self, a):
        raise DomainMismatch("polynomial rings have no residue map")

    def is_unit(self, a) -> bool:
        return a.is_constant() and self.domain.is_unit(a.constant_value())

    def inv(self, a):
        if not a.is_constant():
            raise DomainMismatch("only constant polynomials are invertible")
        return self.const(self.domain.inv(a.constant_value()))

    def extend(self, extra) -> "PolyRing":
        """Ring with ``extra`` variables appended."""
        return PolyRing(self.variables + tuple(extra), self.domain)


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basic queries ----------------------------------------------------

    @property
    def variables(self):
        return self.ring.variables

    @property
    def domain(self):
        return self.ring.domain

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring._zero_exp, self.domain.zero())

    def coeff(self, exp):
        return self.terms.get(tuple(exp), self.domain.zero())

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def sorted_terms(self):
        """Terms in canonical (degree-lexicographic, descending) order."""
        return sorted(self.terms.items(), key=lambda kv: deglex_key(kv[0]), reverse=True)

    def support(self):
        """Names of variables that actually occur."""
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        return [self.variables[i] for i in sorted(used)]

    def __len__(self):
        return len(self.terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise DomainMismatch(f"{other.ring} vs {self.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        D = self.domain
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = D.add(out[e], c)
                if D.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return MultiPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        D = self.domain
        return MultiPoly(self.ring, {e: D.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        D = self.domain
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = D.mul(c1, c2)
                if e in out:
                    out[e] = D.add(out[e], c)
                else:
                    out[e] = c
        return MultiPoly(self.ring, {e: c for e, c in out.items() if not D.is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "MultiPoly":
        D = self.domain
        c = D.coerce(c)
        out = {}
        for e, v in self.terms.items():
            w = D.mul(c, v)
            if not D.is_zero(w):
                out[e] = w
        return MultiPoly(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except Exception:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MultiPoly({render_poly(self)!r})"

    def __str__(self):
        return render_poly(self)

    # -- calculus and substitution ----------------------------------------

    def partial_derivative(self, name: str) -> "MultiPoly":
        i = self.ring.index(name)
        D = self.domain
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            c2 = D.mul(D.coerce(k), c)
            if D.is_zero(c2):
                continue
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            out[e2] = c2
        return MultiPoly(self.ring, out)

    diff = partial_derivative

    def eval_at_point(self, point):
        """Evaluate at a tuple of domain elements (one per variable)."""
        if len(point) != self.ring.nvars:
            raise DomainMismatch("point has the wrong number of coordinates")
        D = self.domain
        values = [D.coerce(v) for v in point]
        return evaluate(self, values, D)

    def substitute(self, mapping: dict) -> "MultiPoly":
        """Ring homomorphism replacing the named variables by polynomials.

        All replacement polynomials must share one ring; unreplaced variables
        must also exist in that ring (or the result ring is ``self.ring``).
        """
        if not mapping:
            return self
        target = None
        for g in mapping.values():
            if isinstance(g, MultiPoly):
                if target is not None and g.ring != target:
                    raise DomainMismatch("substitutions live in different rings")
                target = g.ring
        if target is None:
            target = self.ring
        for name in mapping:
            self.ring.index(name)
        values = []
        for v in self.variables:
            if v in mapping:
                values.append(target.coerce(mapping[v]))
            else:
                values.append(target.var(v))
        return evaluate(self, values, target)

    def change_ring(self, ring: PolyRing, coeff_map=None) -> "MultiPoly":
        """Move into a ring whose variables contain ours; coefficients mapped by ``coeff_map``."""
        pos = [ring.index(v) for v in self.variables]
        D = ring.domain
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.nvars
            for i, k in zip(pos, e):
                e2[i] = k
            c2 = coeff_map(c) if coeff_map is not None else D.coerce(c)
            if D.is_zero(c2):
                continue
            e2 = tuple(e2)
            out[e2] = D.add(out[e2], c2) if e2 in out else c2
        return MultiPoly(ring, {e: c for e, c in out.items() if not D.is_zero(c)})


def evaluate(f: MultiPoly, values, ring):
    """Evaluate ``f`` at ``values`` (elements of ``ring``), caching powers.

    Coefficients of ``f`` are pushed into ``ring`` with ``ring.coerce``.
    """
    if len(values) != f.ring.nvars:
        raise DomainMismatch("one value per variable is required")
    powers = [[ring.one()] for _ in values]

    def power(i, k):
        cache = powers[i]
        while len(cache) <= k:
            cache.append(ring.mul(cache[-1], values[i]))
        return cache[k]

    total = ring.zero()
    for e, c in f.terms.items():
        term = ring.coerce(c)
        for i, k in enumerate(e):
            if k:
                term = ring.mul(term, power(i, k))
        total = ring.add(total, term)
    return total


# -- matrices ---------------------------------------------------------------


def det_generic(rows, ring):
    """Determinant by cofactor expansion with memoised minors (any commutative ring)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare("determinant of a non-square matrix")
    if n == 0:
        return ring.one()
    memo = {}

    def minor(r, cols):
        # determinant of rows r..n-1 restricted to the column tuple ``cols``
        if r == n:
            return ring.one()
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = ring.zero()
        for k, c in enumerate(cols):
            entry = rows[r][c]
            if ring.is_zero(entry):
                continue
            sub = minor(r + 1, cols[:k] + cols[k + 1:])
            term = ring.mul(entry, sub)
            total = ring.sub(total, term) if k % 2 else ring.add(total, term)
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))


def adjugate_generic(rows, ring):
    """Classical adjoint: adj[i][j] = (-1)^(i+j) det(minor with row j, column i removed)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise NotSquare("adjugate of a non-square matrix")
    if n == 1:
        return [[ring.one()]]
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [
                [rows[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            d = det_generic(sub, ring)
            adj[i][j] = ring.neg(d) if (i + j) % 2 else d
    return adj


def matmul_generic(a, b, ring):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise DomainMismatch("matrix shapes do not match")
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ring.zero()
            for t in range(k):
                s = ring.add(s, ring.mul(a[i][t], b[t][j]))
            row.append(s)
        out.append(row)
    return out


class PolyMatrix:
    """Row-major matrix of MultiPoly entries over one PolyRing."""

    def __init__(self, entries, ring: PolyRing | None = None):
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            raise ValueError("matrices must be non-empty")
        if any(len(r) != len(entries[0]) for r in entries):
            raise ValueError("ragged matrix")
        if ring is None:
            ring = next(e.ring for r in entries for e in r if isinstance(e, MultiPoly))
        self.ring = ring
        self.entries = [[ring.coerce(e) for e in r] for r in entries]
        self.rows = len(entries)
        self.cols = len(entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self):
        return "PolyMatrix(" + repr([[str(e) for e in r] for r in self.entries]) + ")"

    def __mul__(self, other):
        if isinstance(other, PolyMatrix):
            return PolyMatrix(matmul_generic(self.entries, other.entries, self.ring), self.ring)
        return PolyMatrix([[e * other for e in r] for r in self.entries], self.ring)

    @classmethod
    def identity(cls, n: int, ring: PolyRing) -> "PolyMatrix":
        return cls([[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)], ring)

    def det(self) -> MultiPoly:
        return det(self)

    def adjugate(self) -> "PolyMatrix":
        return adjugate(self)


def det(M: PolyMatrix) -> MultiPoly:
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    return det_generic(M.entries, M.ring)


def adjugate(M: PolyMatrix) -> PolyMatrix:
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no adjugate")
    return PolyMatrix(adjugate_generic(M.entries, M.ring), M.ring)


def jacobian(polys, variables) -> PolyMatrix:
    """Matrix of partial derivatives d polys[i] / d variables[j]."""
    return PolyMatrix([[f.partial_derivative(v) for v in variables] for f in polys])


# -- rendering ----------------------------------------------------------------


def _monomial_text(names, exp) -> str:
    parts = []
    for v, k in zip(names, exp):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def render_poly(f: MultiPoly) -> str:
    """Canonical text in the parser grammar (field coefficients only)."""
    if not f.terms:
        return "0"
    D = f.domain
    out = []
    for exp, c in f.sorted_terms():
        text = D.render(c)
        if text.startswith("-"):
            sign, mag = "-", text[1:]
        else:
            sign, mag = "+", text
        if " " in mag:
            mag = f"({mag})"
        mono = _monomial_text(f.variables, exp)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
