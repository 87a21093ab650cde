"""Truncated power series in t and dense t-polynomials over any coefficient ring.

A :class:`TruncSeries` with precision N knows the coefficients of t^0..t^N
exactly; everything from t^(N+1) on is unknown.  Results of binary
operations carry the smaller precision.  Orders that cannot be decided at
the working precision come back as :class:`BeyondPrecision` rather than
being guessed.

The ``upoly_*`` helpers treat plain coefficient lists as polynomials in t
(index i holds the coefficient of t^i).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainMismatch, NotInvertible, PrecisionExhausted
from .poly import MultiPoly, evaluate


@dataclass(frozen=True)
class BeyondPrecision:
    """Order marker: every known coefficient (up to t^precision) vanishes."""

    precision: int

    def __str__(self):
        return f">{self.precision}"

    def to_json(self):
        return {"beyond_precision": self.precision}


def ord_is_finite(value) -> bool:
    return not isinstance(value, BeyondPrecision)


def ord_to_json(value):
    return value.to_json() if isinstance(value, BeyondPrecision) else value


# -- dense t-polynomials ------------------------------------------------------


def upoly_trim(coeffs, ring):
    coeffs = list(coeffs)
    while coeffs and ring.is_zero(coeffs[-1]):
        coeffs.pop()
    return coeffs


def upoly_add(a, b, ring):
    n = max(len(a), len(b))
    z = ring.zero()
    return [
        ring.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)
    ]


def upoly_sub(a, b, ring):
    n = max(len(a), len(b))
    z = ring.zero()
    return [
        ring.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n)
    ]


def upoly_mul(a, b, ring, limit=None):
    """Product of coefficient lists; keep only degrees <= ``limit`` if given."""
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    if limit is not None:
        n = min(n, limit + 1)
    out = [ring.zero() for _ in range(n)]
    for i, x in enumerate(a):
        if i >= n:
            break
        if ring.is_zero(x):
            continue
        for j, y in enumerate(b):
            k = i + j
            if k >= n:
                break
            if ring.is_zero(y):
                continue
            out[k] = ring.add(out[k], ring.mul(x, y))
    return out


def upoly_divmod_monic(f, q, ring):
    """Exact long division of ``f`` by the monic polynomial ``q`` (lists, low degree first).

    Returns ``(quotient, remainder)`` with ``len(remainder) == deg q``.
    Works over any commutative ring because ``q`` is monic.
    """
    d = len(q) - 1
    if d < 0 or not ring.is_zero(ring.sub(q[-1], ring.one())):
        raise DomainMismatch("divisor must be monic")
    rem = list(f)
    if len(rem) <= d:
        rem = rem + [ring.zero() for _ in range(d - len(rem))]
        return [], rem
    quot = [ring.zero() for _ in range(len(rem) - d)]
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k]
        if ring.is_zero(c):
            continue
        quot[k - d] = c
        for j in range(d):
            rem[k - d + j] = ring.sub(rem[k - d + j], ring.mul(c, q[j]))
        rem[k] = ring.zero()
    return quot, rem[:d]


def upoly_eval(coeffs, x, ring):
    acc = ring.zero()
    for c in reversed(coeffs):
        acc = ring.add(ring.mul(acc, x), c)
    return acc


# -- truncated series ---------------------------------------------------------


class TruncSeries:
    """Element of R[[t]] known modulo t^(precision+1)."""

    __slots__ = ("ring", "coeffs", "precision")

    def __init__(self, ring, coeffs, precision: int | None = None):
        coeffs = list(coeffs)
        if precision is None:
            precision = len(coeffs) - 1
        if precision < 0:
            raise PrecisionExhausted("series precision must be non-negative")
        if len(coeffs) > precision + 1:
            coeffs = coeffs[: precision + 1]
        while len(coeffs) < precision + 1:
            coeffs.append(ring.zero())
        self.ring = ring
        self.coeffs = tuple(coeffs)
        self.precision = precision

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, ring, precision: int) -> "TruncSeries":
        return cls(ring, [], precision)

    @classmethod
    def constant(cls, ring, c, precision: int) -> "TruncSeries":
        return cls(ring, [ring.coerce(c)], precision)

    @classmethod
    def from_poly(cls, ring, coeffs, precision: int) -> "TruncSeries":
        coeffs = [ring.coerce(c) for c in coeffs]
        return cls(ring, coeffs, precision)

    @classmethod
    def t_power(cls, ring, k: int, precision: int) -> "TruncSeries":
        coeffs = [ring.zero()] * k + [ring.one()]
        return cls(ring, coeffs, precision)

    # -- queries ----------------------------------------------------------

    def __getitem__(self, i):
        if i > self.precision:
            raise PrecisionExhausted(f"coefficient t^{i} is beyond precision {self.precision}")
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __repr__(self):
        body = " + ".join(f"({self.ring.render(c)})*t^{i}" for i, c in enumerate(self.coeffs) if not self.ring.is_zero(c))
        return f"TruncSeries({body or '0'} + O(t^{self.precision + 1}))"

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.precision == other.precision
            and all(self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.precision, self.coeffs))

    def agrees_with(self, other: "TruncSeries", upto: int | None = None) -> bool:
        """Coefficientwise equality on t^0..t^upto (default: the common precision)."""
        m = min(self.precision, other.precision)
        if upto is None:
            upto = m
        if upto > m:
            return False
        return all(self.ring.eq(self.coeffs[i], other.coeffs[i]) for i in range(upto + 1))

    def first_difference(self, other: "TruncSeries", upto: int):
        for i in range(upto + 1):
            if not self.ring.eq(self.coeffs[i], other.coeffs[i]):
                return i
        return None

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def ord(self):
        return series_ord(self)

    def to_poly(self):
        """The truncation as a trimmed coefficient list."""
        return upoly_trim(self.coeffs, self.ring)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries.constant(self.ring, other, self.precision)
        if other.ring != self.ring:
            raise DomainMismatch(f"series over {other.ring} vs {self.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        p = min(self.precision, other.precision)
        R = self.ring
        return TruncSeries(R, [R.add(self.coeffs[i], other.coeffs[i]) for i in range(p + 1)], p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        p = min(self.precision, other.precision)
        R = self.ring
        return TruncSeries(R, [R.sub(self.coeffs[i], other.coeffs[i]) for i in range(p + 1)], p)

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        R = self.ring
        return TruncSeries(R, [R.neg(c) for c in self.coeffs], self.precision)

    def __mul__(self, other):
        other = self._check(other)
        p = min(self.precision, other.precision)
        return TruncSeries(self.ring, upoly_mul(self.coeffs, other.coeffs, self.ring, p), p)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = TruncSeries.constant(self.ring, self.ring.one(), self.precision)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c) -> "TruncSeries":
        R = self.ring
        c = R.coerce(c)
        return TruncSeries(R, [R.mul(c, x) for x in self.coeffs], self.precision)

    def mul_poly(self, coeffs) -> "TruncSeries":
        """Multiply by an exact t-polynomial; precision is unchanged."""
        return TruncSeries(self.ring, upoly_mul(self.coeffs, list(coeffs), self.ring, self.precision), self.precision)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by t^k (k >= 0); the precision grows by k."""
        return TruncSeries(self.ring, [self.ring.zero()] * k + list(self.coeffs), self.precision + k)

    def divide_t(self, k: int) -> "TruncSeries":
        """Exact division by t^k; the first k coefficients must vanish."""
        if k > self.precision + 1:
            raise PrecisionExhausted(f"cannot divide by t^{k} at precision {self.precision}")
        for i in range(k):
            if not self.ring.is_zero(self.coeffs[i]):
                raise DomainMismatch(f"series is not divisible by t^{k}")
        if k == self.precision + 1:
            raise PrecisionExhausted(f"dividing by t^{k} leaves no known coefficients")
        return TruncSeries(self.ring, self.coeffs[k:], self.precision - k)

    def truncate(self, precision: int) -> "TruncSeries":
        if precision > self.precision:
            raise PrecisionExhausted(f"cannot raise precision {self.precision} to {precision}")
        return TruncSeries(self.ring, self.coeffs[: precision + 1], precision)

    def inverse(self) -> "TruncSeries":
        """Inverse of a unit series (constant term a unit of the coefficient ring)."""
        R = self.ring
        c0 = self.coeffs[0]
        if not R.is_unit(c0):
            raise NotInvertible("series with non-unit constant term")
        inv0 = R.inv(c0)
        out = [inv0]
        for n in range(1, self.precision + 1):
            s = R.zero()
            for k in range(1, n + 1):
                s = R.add(s, R.mul(self.coeffs[k], out[n - k]))
            out.append(R.neg(R.mul(inv0, s)))
        return TruncSeries(R, out, self.precision)

    def map_coeffs(self, fn, ring) -> "TruncSeries":
        return TruncSeries(ring, [fn(c) for c in self.coeffs], self.precision)

    def residue(self) -> "TruncSeries":
        """Apply sigma_A coefficientwise (series over a test ring -> over its field)."""
        R = self.ring
        return TruncSeries(R.field, [R.residue(c) for c in self.coeffs], self.precision)

    def lift_to(self, ring) -> "TruncSeries":
        """Embed a field series into a ring with that residue field."""
        return TruncSeries(ring, [ring.lift(c) for c in self.coeffs], self.precision)

    def to_json(self) -> dict:
        R = self.ring
        if hasattr(R, "elem_json"):
            coeffs = [R.elem_json(c) for c in self.coeffs]
        else:
            coeffs = [R.render(c) for c in self.coeffs]
        return {"precision": self.precision, "coefficients": coeffs}


class SeriesRing:
    """Ring-protocol wrapper for series over ``ring`` at one fixed precision."""

    def __init__(self, ring, precision: int):
        self.ring = ring
        self.precision = precision

    def zero(self):
        return TruncSeries.zero(self.ring, self.precision)

    def one(self):
        return TruncSeries.constant(self.ring, self.ring.one(), self.precision)

    def coerce(self, value):
        if isinstance(value, TruncSeries):
            return value
        return TruncSeries.constant(self.ring, value, self.precision)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a.is_zero()


def series_ord(s: TruncSeries):
    """Least i with a nonzero coefficient, else ``BeyondPrecision(N)``."""
    for i, c in enumerate(s.coeffs):
        if not s.ring.is_zero(c):
            return i
    return BeyondPrecision(s.precision)


def residue_ord(s: TruncSeries):
    """Order of the image under sigma_A (for series over a test ring)."""
    R = s.ring
    for i, c in enumerate(s.coeffs):
        if R.residue(c) != 0:
            return i
    return BeyondPrecision(s.precision)


def compose_poly(f: MultiPoly, args) -> TruncSeries:
    """Substitute one series per variable of ``f``; precision is the minimum."""
    args = list(args)
    if len(args) != f.ring.nvars:
        raise DomainMismatch(f"{f.ring.nvars} series expected, got {len(args)}")
    if not args:
        raise DomainMismatch("compose_poly needs at least one series")
    ring = args[0].ring
    for a in args:
        if a.ring != ring:
            raise DomainMismatch("argument series live over different rings")
    p = min(a.precision for a in args)
    sr = SeriesRing(ring, p)
    return evaluate(f, [a.truncate(p) for a in args], sr)


class UPolyRing:
    """Ring-protocol wrapper for exact t-polynomials (coefficient lists) over ``ring``."""

    def __init__(self, ring):
        self.ring = ring

    def zero(self):
        return []

    def one(self):
        return [self.ring.one()]

    def coerce(self, value):
        if isinstance(value, list):
            return value
        c = self.ring.coerce(value)
        return [] if self.ring.is_zero(c) else [c]

    def add(self, a, b):
        return upoly_trim(upoly_add(a, b, self.ring), self.ring)

    def sub(self, a, b):
        return upoly_trim(upoly_sub(a, b, self.ring), self.ring)

    def neg(self, a):
        return [self.ring.neg(c) for c in a]

    def mul(self, a, b):
        return upoly_trim(upoly_mul(a, b, self.ring), self.ring)

    def is_zero(self, a):
        return all(self.ring.is_zero(c) for c in a)

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))
