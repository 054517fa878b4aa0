"""Exact coefficient rings: Z, Z/m, and Z with 2 inverted.

All arithmetic is on arbitrary-precision Python integers; there is never a
denominator anywhere.  Elements of Z[1/2] are stored as plain integers: every
class this package manipulates over Z[1/2] is an integer multiple of some
generator, and an integer is zero in Z[1/2] iff it is zero in Z.  Cyclic
quotients Z[1/2]/d are realized as Z/odd_part(d).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

KIND_INTEGERS = "Z"
KIND_MOD = "Z/m"
KIND_HALF_INVERTED = "Z[1/2]"


def odd_part(d: int) -> int:
    """Largest odd divisor of d, i.e. d with every factor of 2 removed.

    >>> odd_part(12)
    3
    """
    if d <= 0:
        raise ValueError(f"odd_part needs a positive integer, got {d}")
    while d % 2 == 0:
        d //= 2
    return d


@dataclass(frozen=True)
class CoefficientRing:
    """One of Z, Z/m (canonical representatives in [0, m)), or Z[1/2]."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in (KIND_INTEGERS, KIND_MOD, KIND_HALF_INVERTED):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == KIND_MOD:
            if self.modulus is None or self.modulus < 1:
                raise ValueError(f"Z/m needs m >= 1, got {self.modulus}")
        elif self.modulus is not None:
            raise ValueError(f"{self.kind} does not take a modulus")

    @property
    def is_modular(self) -> bool:
        return self.kind == KIND_MOD

    def reduce(self, value: int) -> int:
        """Canonical representative of an integer in this ring."""
        if self.kind == KIND_MOD:
            return value % self.modulus
        return value

    def add(self, a: int, b: int) -> int:
        return self.reduce(a + b)

    def mul(self, a: int, b: int) -> int:
        return self.reduce(a * b)

    def quotient_order(self, d: int) -> int:
        """Order of R/dR for this ring R (0 would mean infinite; d >= 1 here).

        Z/dZ has order d; Z[1/2]/d collapses the 2-part of d; (Z/m)/d(Z/m) is
        cyclic of order gcd(d, m).
        """
        if d < 1:
            raise ValueError(f"divisor degree must be >= 1, got {d}")
        if self.kind == KIND_INTEGERS:
            return d
        if self.kind == KIND_HALF_INVERTED:
            return odd_part(d)
        return gcd(d, self.modulus)

    def __str__(self) -> str:
        if self.kind == KIND_MOD:
            return f"Z/{self.modulus}"
        return self.kind


ZZ = CoefficientRing(KIND_INTEGERS)
Z_HALF = CoefficientRing(KIND_HALF_INVERTED)


def Zmod(m: int) -> CoefficientRing:
    return CoefficientRing(KIND_MOD, m)


def reduce(value: int, ring: CoefficientRing) -> "RingElement":
    """Canonical representative of an integer, wrapped as a ring element."""
    return RingElement(ring, value)


@dataclass(frozen=True)
class RingElement:
    """An integer together with the ring it lives in, stored canonically."""

    ring: CoefficientRing
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.reduce(self.value))

    def _coerce(self, other) -> int:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.value + v)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, -self.value)

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.value - v)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.value * v)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        if self.ring.is_modular:
            return f"{self.value} (mod {self.ring.modulus})"
        return str(self.value)
