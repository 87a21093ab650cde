"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain Python values (``Fraction`` for Q, ``int`` in
``range(p)`` for F_p).  A :class:`FieldSpec` knows how to combine them, so
every container in the package delegates its scalar arithmetic here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZeroCoefficient, DomainMismatch, NotInvertible

QQ_KIND = "Q"
FP_KIND = "Fp"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Either the rationals (``kind="Q"``) or a prime field (``kind="Fp"``)."""

    kind: str = QQ_KIND
    p: int | None = None

    def __post_init__(self):
        if self.kind == QQ_KIND:
            if self.p is not None:
                raise ValueError("the rationals take no modulus")
        elif self.kind == FP_KIND:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"F_p needs a prime modulus, got {self.p!r}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(QQ_KIND)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FP_KIND, p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == FP_KIND

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == FP_KIND else 0

    @property
    def field(self) -> "FieldSpec":
        return self

    def __str__(self):
        return "QQ" if self.kind == QQ_KIND else f"GF({self.p})"

    def to_json(self) -> dict:
        if self.kind == QQ_KIND:
            return {"kind": "Q"}
        return {"kind": "Fp", "p": self.p}

    # -- elements ---------------------------------------------------------

    def zero(self):
        return Fraction(0) if self.kind == QQ_KIND else 0

    def one(self):
        return Fraction(1) if self.kind == QQ_KIND else 1

    def coerce(self, value):
        """Map an int, Fraction or numeric string into the field."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.kind == QQ_KIND:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise DomainMismatch(f"cannot coerce {value!r} into QQ")
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise DivisionByZeroCoefficient(
                    f"denominator {value.denominator} vanishes in GF({self.p})"
                )
            return (value.numerator * pow(den, -1, self.p)) % self.p
        raise DomainMismatch(f"cannot coerce {value!r} into GF({self.p})")

    def add(self, a, b):
        if self.kind == QQ_KIND:
            return a + b
        return (a + b) % self.p

    def sub(self, a, b):
        if self.kind == QQ_KIND:
            return a - b
        return (a - b) % self.p

    def neg(self, a):
        if self.kind == QQ_KIND:
            return -a
        return (-a) % self.p

    def mul(self, a, b):
        if self.kind == QQ_KIND:
            return a * b
        return (a * b) % self.p

    def is_zero(self, a) -> bool:
        return a == 0

    def is_unit(self, a) -> bool:
        return a != 0

    def eq(self, a, b) -> bool:
        return a == b

    def inv(self, a):
        if a == 0:
            raise NotInvertible("division by zero in " + str(self))
        if self.kind == QQ_KIND:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if self.kind == QQ_KIND:
            return a**k
        return pow(a, k, self.p)

    def residue(self, a):
        """Identity: a field is its own residue field."""
        return a

    def lift(self, a):
        return a

    def render(self, a) -> str:
        """Exact string form; F_p elements use the symmetric range."""
        if self.kind == QQ_KIND:
            return str(a)
        if a > self.p // 2:
            return str(a - self.p)
        return str(a)

    def to_fraction(self, a) -> Fraction:
        if self.kind == QQ_KIND:
            return a
        return Fraction(a - self.p if a > self.p // 2 else a)

    def random_element(self, rng, bound: int = 5):
        """A small random element; ``bound`` caps numerators over QQ."""
        if self.kind == QQ_KIND:
            return Fraction(rng.randint(-bound, bound))
        return rng.randrange(self.p)


QQ = FieldSpec.rationals()


def GF(p: int) -> FieldSpec:
    return FieldSpec.prime(p)


def parse_field(spec) -> FieldSpec:
    """Accept ``{"kind": "Q"}``, ``{"kind": "Fp", "p": 5}`` or strings like "Q", "F5"."""
    if isinstance(spec, FieldSpec):
        return spec
    if isinstance(spec, str):
        s = spec.strip()
        if s in ("Q", "QQ"):
            return QQ
        for prefix in ("GF", "Fp", "F"):
            if s.startswith(prefix) and s[len(prefix):].isdigit():
                return GF(int(s[len(prefix):]))
        raise ValueError(f"unrecognised field {spec!r}")
    kind = spec.get("kind")
    if kind in ("Q", "QQ"):
        return QQ
    if kind == "Fp":
        return GF(int(spec["p"]))
    raise ValueError(f"unrecognised field {spec!r}")
