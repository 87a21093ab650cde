"""Weierstrass preparation and division over Artinian test rings.

Series are handled through their truncation polynomial f_N = sum_{i<=N} c_i t^i.
Division is exact on that representative (f_N = g q + r as polynomials), so
every identity below holds coefficientwise up to the input precision.
"""

from __future__ import annotations

from .errors import DefectNotContracting, DomainMismatch, PrecisionExhausted, ResidueOrderUndetectable
from .series import TruncSeries, ord_is_finite, residue_ord, upoly_divmod_monic, upoly_mul, upoly_sub


class WeierstrassPoly:
    """t^d + q_{d-1} t^{d-1} + ... + q_0 with every q_j in the maximal ideal."""

    __slots__ = ("ring", "d", "lower")

    def __init__(self, ring, lower, check: bool = True):
        lower = tuple(ring.coerce(c) for c in lower)
        if check and hasattr(ring, "residue"):
            for j, c in enumerate(lower):
                if ring.residue(c) != 0:
                    raise DomainMismatch(f"coefficient q_{j} is not in the maximal ideal")
        self.ring = ring
        self.d = len(lower)
        self.lower = lower

    @classmethod
    def t_power(cls, ring, d: int) -> "WeierstrassPoly":
        return cls(ring, [ring.zero()] * d)

    @property
    def coeffs(self):
        """Full coefficient list, low degree first, ending with the leading 1."""
        return list(self.lower) + [self.ring.one()]

    def __eq__(self, other):
        return (
            isinstance(other, WeierstrassPoly)
            and self.d == other.d
            and all(self.ring.eq(a, b) for a, b in zip(self.lower, other.lower))
        )

    def __hash__(self):
        return hash(self.lower)

    def __repr__(self):
        terms = [f"t^{self.d}"] + [
            f"({self.ring.render(c)})*t^{j}"
            for j, c in reversed(list(enumerate(self.lower)))
            if not self.ring.is_zero(c)
        ]
        return "WeierstrassPoly(" + " + ".join(terms) + ")"

    def square(self) -> "WeierstrassPoly":
        full = upoly_mul(self.coeffs, self.coeffs, self.ring)
        return WeierstrassPoly(self.ring, full[:-1], check=False)

    def residue(self) -> "WeierstrassPoly":
        R = self.ring
        return WeierstrassPoly(R.field, [R.residue(c) for c in self.lower], check=False)

    def as_series(self, precision: int) -> TruncSeries:
        return TruncSeries(self.ring, self.coeffs, precision)

    def vanishing_power(self) -> int:
        """Smallest K with t^K in q A[t] (finite because the q_j are nilpotent)."""
        R = self.ring
        d = self.d
        if d == 0:
            return 0
        rem = [R.zero()] * (d - 1) + [R.one()]  # t^(d-1)
        k = d - 1
        limit = d * (getattr(R, "nilpotency_index", 1) + 1) + 1
        while k <= limit:
            # multiply by t and reduce t^d -> -(q_0 + ... + q_{d-1} t^{d-1})
            top = rem[-1]
            rem = [R.zero()] + rem[:-1]
            rem = [R.sub(rem[j], R.mul(top, self.lower[j])) for j in range(d)]
            k += 1
            if all(R.is_zero(c) for c in rem):
                return k
        raise DomainMismatch("lower coefficients are not nilpotent")

    def to_json(self) -> dict:
        R = self.ring
        render = getattr(R, "elem_json", R.render)
        return {"degree": self.d, "lower": [render(c) for c in self.lower]}


def weierstrass_divide(f: TruncSeries, q: WeierstrassPoly):
    """Return ``(g, r)`` with f = g q + r up to precision(f) and deg r < d.

    ``g`` has precision N - d; ``r`` is a list of d coefficients.  The
    quotient is found by elimination along the nilpotent filtration:
    g <- (f - rho g) div t^d with q = t^d + rho, which stabilises after at
    most nilpotency-index passes because each pass multiplies the change by
    rho in m.
    """
    if f.ring != q.ring:
        raise DomainMismatch("series and divisor over different rings")
    R = f.ring
    d = q.d
    N = f.precision
    if N < d:
        raise PrecisionExhausted(f"precision {N} is below the divisor degree {d}")
    fN = list(f.coeffs)
    rho = list(q.lower)
    g = fN[d:]
    limit = getattr(R, "nilpotency_index", 1) + 1
    for _ in range(limit + 1):
        h = upoly_sub(fN, upoly_mul(rho, g, R), R)
        h = h + [R.zero()] * (len(fN) - len(h))
        g_new = h[d:]
        if len(g_new) == len(g) and all(R.eq(a, b) for a, b in zip(g_new, g)):
            return TruncSeries(R, g, N - d), h[:d]
        g = g_new
    raise DefectNotContracting("division iteration did not stabilise")


def weierstrass_prepare(f: TruncSeries):
    """Factor f = u q with q Weierstrass of degree d = ord sigma(f) and u a unit.

    ``u`` has precision N - d.  q is refined by q <- q + (g^-1 r mod q),
    where f = g q + r; the defect r moves into m^(2k) after each pass.
    """
    R = f.ring
    d = residue_ord(f)
    if not ord_is_finite(d):
        raise ResidueOrderUndetectable(
            f"reduction of the series vanishes to precision {f.precision}"
        )
    N = f.precision
    q = WeierstrassPoly.t_power(R, d)
    fN = list(f.coeffs)
    limit = getattr(R, "nilpotency_index", 1) + 1
    for _ in range(limit + 1):
        g, r = upoly_divmod_monic(fN, q.coeffs, R)
        if all(R.is_zero(c) for c in r):
            return TruncSeries(R, g, N - d), q
        K = max(q.vanishing_power(), d)
        g_series = TruncSeries(R, g, K)
        s = (g_series.inverse() * TruncSeries(R, r, K)).coeffs
        _, s_red = upoly_divmod_monic(list(s), q.coeffs, R)
        q = WeierstrassPoly(R, [R.add(a, b) for a, b in zip(q.lower, s_red)], check=False)
    raise DefectNotContracting("preparation iteration did not converge")


def reduce_mod_q(p, q, ring=None):
    """Remainder of the polynomial ``p`` (coefficient list) by the monic ``q``.

    ``q`` may be a :class:`WeierstrassPoly` or a full monic coefficient list
    (then ``ring`` is required).  Symbolic coefficients, e.g. polynomials in
    the q_j, are fine because the division never inverts anything.
    """
    if isinstance(q, WeierstrassPoly):
        coeffs, ring = q.coeffs, q.ring
    else:
        coeffs = q
        if ring is None:
            raise DomainMismatch("a coefficient ring is needed for a bare coefficient list")
    p = list(p)
    _, rem = upoly_divmod_monic(p, list(coeffs), ring)
    return rem


def divide_exact(f: TruncSeries, q: WeierstrassPoly) -> TruncSeries:
    """Quotient f / q, insisting that the remainder vanishes."""
    g, r = weierstrass_divide(f, q)
    if any(not f.ring.is_zero(c) for c in r):
        raise PrecisionExhausted("series is not divisible by q at this precision")
    return g


__all__ = [
    "WeierstrassPoly",
    "weierstrass_divide",
    "weierstrass_prepare",
    "reduce_mod_q",
    "divide_exact",
]
