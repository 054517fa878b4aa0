"""Truncated graded-commutative polynomial classes over exact coefficient rings.

This is the shared representation for every cohomology-flavoured computation in
the package: free polynomial algebras on named even-degree generators, powers
of a single degree-2 class with cyclic coefficients per degree, and sphere-like
presentations where positive-degree classes multiply to zero.

A :class:`GradedClass` is a finitely supported map from monomials to integer
coefficients, kept in canonical sparse form: coefficients are reduced into the
coefficient ring of their degree, zero terms are dropped, and terms above the
truncation bound (or above a presentation's validity window) are discarded on
construction.  All degrees in scope are even, so the commutative product needs
no signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rings import CoefficientRing, RingElement, ZZ

DEFAULT_MAX_DEGREE = 64

# A monomial is a tuple of (generator name, exponent) pairs, sorted by name,
# with all exponents positive; the empty tuple is the unit monomial.
Monomial = tuple


@dataclass(frozen=True)
class Generator:
    """A polynomial generator of even positive degree."""

    name: str
    degree: int

    def __post_init__(self):
        if self.degree <= 0 or self.degree % 2 != 0:
            raise ValueError(f"generator {self.name!r} needs even positive degree, got {self.degree}")


@dataclass(frozen=True)
class FreePoly:
    """Free polynomial presentation on the given generators over one ring."""

    generators: tuple
    ring: CoefficientRing

    @property
    def degree_cap(self):
        return None

    def coefficient_ring(self, degree: int) -> CoefficientRing:
        return self.ring

    def zero_product(self, m1: Monomial, m2: Monomial) -> bool:
        return False

    def describe(self) -> dict:
        return {
            "kind": "free-polynomial",
            "generators": [[g.name, g.degree] for g in self.generators],
            "ring": str(self.ring),
        }


@dataclass(frozen=True)
class HPowers:
    """Powers of a single degree-2 generator h with cyclic coefficients.

    ``orders[i-1]`` is the order of the coefficient group in degree 2i (0 means
    a free summand, carried in ``ring``); only degrees strictly below ``window``
    are valid, and products landing at or above the window are dropped and
    flagged on the resulting class.  When all orders equal d this is the
    truncation of (Z/d)[h]; with genuinely mixed orders the product is still
    the bilinear "multiply representatives, then reduce" rule, but ring laws
    are only guaranteed in the uniform case.
    """

    orders: tuple
    window: int
    ring: CoefficientRing

    def __post_init__(self):
        expected = max(0, (self.window - 1) // 2)
        if len(self.orders) != expected:
            raise ValueError(
                f"window {self.window} needs {expected} coefficient orders, got {len(self.orders)}"
            )
        if any(m < 0 for m in self.orders):
            raise ValueError("coefficient orders must be >= 0")

    @classmethod
    def uniform(cls, order: int, window: int, ring: CoefficientRing) -> "HPowers":
        return cls(tuple([order] * max(0, (window - 1) // 2)), window, ring)

    @property
    def generators(self):
        return (Generator("h", 2),)

    @property
    def degree_cap(self):
        return self.window - 1

    def coefficient_ring(self, degree: int) -> CoefficientRing:
        if degree == 0:
            return self.ring
        order = self.orders[degree // 2 - 1]
        if order == 0:
            return self.ring
        from .rings import Zmod

        return Zmod(order)

    def zero_product(self, m1: Monomial, m2: Monomial) -> bool:
        return False

    def describe(self) -> dict:
        return {
            "kind": "h-powers",
            "orders": list(self.orders),
            "window": self.window,
            "ring": str(self.ring),
        }


@dataclass(frozen=True)
class SphereLike:
    """Free summands in listed degrees; positive-degree products vanish.

    ``cells`` lists (degree, rank) pairs; rank-1 cells get a generator named
    ``x{degree}``, higher ranks ``x{degree}_{j}``.
    """

    cells: tuple
    ring: CoefficientRing

    def __post_init__(self):
        degrees = [d for d, _ in self.cells]
        if degrees != sorted(set(degrees)):
            raise ValueError("cells must be sorted by degree without repeats")
        if any(r < 1 for _, r in self.cells):
            raise ValueError("cell ranks must be >= 1")

    @property
    def generators(self):
        gens = []
        for degree, rank in self.cells:
            if rank == 1:
                gens.append(Generator(f"x{degree}", degree))
            else:
                gens.extend(Generator(f"x{degree}_{j}", degree) for j in range(rank))
        return tuple(gens)

    @property
    def degree_cap(self):
        return None

    def coefficient_ring(self, degree: int) -> CoefficientRing:
        return self.ring

    def zero_product(self, m1: Monomial, m2: Monomial) -> bool:
        return bool(m1) and bool(m2)

    def describe(self) -> dict:
        return {
            "kind": "sphere-like",
            "cells": [list(c) for c in self.cells],
            "ring": str(self.ring),
        }


@dataclass(frozen=True)
class WedgeSum:
    """One-point union of sphere-like presentations over a common ring.

    Component i of summand generator ``name`` appears as ``name@i``; positive
    degree classes from any components multiply to zero.
    """

    summands: tuple

    def __post_init__(self):
        if not self.summands:
            raise ValueError("wedge needs at least one summand")
        rings = {s.ring for s in self.summands}
        if len(rings) != 1:
            raise ValueError("wedge summands must share one coefficient ring")

    @property
    def ring(self) -> CoefficientRing:
        return self.summands[0].ring

    @property
    def generators(self):
        gens = []
        for i, summand in enumerate(self.summands):
            gens.extend(Generator(f"{g.name}@{i}", g.degree) for g in summand.generators)
        return tuple(gens)

    @property
    def degree_cap(self):
        return None

    def coefficient_ring(self, degree: int) -> CoefficientRing:
        return self.ring

    def zero_product(self, m1: Monomial, m2: Monomial) -> bool:
        return bool(m1) and bool(m2)

    def describe(self) -> dict:
        return {
            "kind": "wedge-sum",
            "summands": [s.describe() for s in self.summands],
        }


@lru_cache(maxsize=None)
def _generator_map(presentation) -> dict:
    return {g.name: g for g in presentation.generators}


def monomial_degree(presentation, mono: Monomial) -> int:
    gens = _generator_map(presentation)
    return sum(gens[name].degree * exp for name, exp in mono)


def _canonical_monomial(presentation, mono) -> Monomial:
    gens = _generator_map(presentation)
    merged = {}
    for name, exp in mono:
        if name not in gens:
            raise ValueError(f"unknown generator {name!r} for this presentation")
        if exp < 0:
            raise ValueError(f"negative exponent on {name!r}")
        if exp:
            merged[name] = merged.get(name, 0) + exp
    mono = tuple(sorted(merged.items()))
    if isinstance(presentation, (SphereLike, WedgeSum)):
        if len(mono) > 1 or any(e > 1 for _, e in mono):
            raise ValueError(f"sphere-like monomials are single generators, got {mono}")
    return mono


def _merge_monomials(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for name, exp in m2:
        merged[name] = merged.get(name, 0) + exp
    return tuple(sorted(merged.items()))


def monomial_text(mono: Monomial) -> str:
    if not mono:
        return ""
    return "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in mono)


class GradedClass:
    """A truncated graded class in canonical sparse form.

    Supports +, -, * (with another class in the same presentation and
    truncation, or with an integer scalar).  ``dropped_above_window`` records
    whether any term was discarded for landing at or above a presentation
    window; it does not take part in equality.
    """

    __slots__ = ("presentation", "max_degree", "terms", "dropped_above_window")

    def __init__(self, presentation, terms=None, max_degree: int = DEFAULT_MAX_DEGREE, _dropped: bool = False):
        acc = {}
        dropped = _dropped
        cap = presentation.degree_cap
        for mono, coeff in (terms or {}).items():
            mono = _canonical_monomial(presentation, mono)
            degree = monomial_degree(presentation, mono)
            if degree > max_degree:
                continue
            if cap is not None and degree > cap:
                dropped = True
                continue
            value = coeff.value if isinstance(coeff, RingElement) else int(coeff)
            acc[mono] = acc.get(mono, 0) + value
        clean = {}
        for mono, value in acc.items():
            degree = monomial_degree(presentation, mono)
            value = presentation.coefficient_ring(degree).reduce(value)
            if value:
                clean[mono] = value
        self.presentation = presentation
        self.max_degree = max_degree
        self.terms = clean
        self.dropped_above_window = dropped

    @classmethod
    def zero(cls, presentation, max_degree: int = DEFAULT_MAX_DEGREE) -> "GradedClass":
        return cls(presentation, {}, max_degree)

    @classmethod
    def unit(cls, presentation, max_degree: int = DEFAULT_MAX_DEGREE) -> "GradedClass":
        return cls(presentation, {(): 1}, max_degree)

    @classmethod
    def from_generator(cls, presentation, name: str, coeff: int = 1,
                       max_degree: int = DEFAULT_MAX_DEGREE) -> "GradedClass":
        return cls(presentation, {((name, 1),): coeff}, max_degree)

    def _check_compatible(self, other: "GradedClass"):
        if self.presentation != other.presentation:
            raise ValueError("presentation mismatch")
        if self.max_degree != other.max_degree:
            raise ValueError(f"truncation mismatch: {self.max_degree} vs {other.max_degree}")

    def __add__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for mono, value in other.terms.items():
            acc[mono] = acc.get(mono, 0) + value
        return GradedClass(self.presentation, acc, self.max_degree,
                           _dropped=self.dropped_above_window or other.dropped_above_window)

    def __neg__(self):
        return GradedClass(self.presentation, {m: -v for m, v in self.terms.items()},
                           self.max_degree, _dropped=self.dropped_above_window)

    def __sub__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedClass(self.presentation, {m: other * v for m, v in self.terms.items()},
                               self.max_degree, _dropped=self.dropped_above_window)
        if not isinstance(other, GradedClass):
            return NotImplemented
        self._check_compatible(other)
        presentation = self.presentation
        cap = presentation.degree_cap
        acc = {}
        dropped = self.dropped_above_window or other.dropped_above_window
        degrees_a = {m: monomial_degree(presentation, m) for m in self.terms}
        degrees_b = {m: monomial_degree(presentation, m) for m in other.terms}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if presentation.zero_product(m1, m2):
                    continue
                degree = degrees_a[m1] + degrees_b[m2]
                if degree > self.max_degree:
                    continue
                if cap is not None and degree > cap:
                    dropped = True
                    continue
                mono = _merge_monomials(m1, m2)
                acc[mono] = acc.get(mono, 0) + c1 * c2
        return GradedClass(presentation, acc, self.max_degree, _dropped=dropped)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, GradedClass):
            return NotImplemented
        return (self.presentation == other.presentation
                and self.max_degree == other.max_degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.presentation, self.max_degree, tuple(sorted(self.terms.items()))))

    def is_zero(self) -> bool:
        return not self.terms

    def degree_part(self, degree: int) -> "GradedClass":
        """The homogeneous component in the given degree (zero if absent)."""
        picked = {m: v for m, v in self.terms.items()
                  if monomial_degree(self.presentation, m) == degree}
        return GradedClass(self.presentation, picked, self.max_degree)

    def truncate(self, max_degree: int) -> "GradedClass":
        if max_degree > self.max_degree:
            raise ValueError("truncate only lowers the degree bound")
        return GradedClass(self.presentation, self.terms, max_degree,
                           _dropped=self.dropped_above_window)

    def coefficient(self, mono) -> RingElement:
        mono = _canonical_monomial(self.presentation, mono)
        degree = monomial_degree(self.presentation, mono)
        ring = self.presentation.coefficient_ring(degree) if (
            self.presentation.degree_cap is None or degree <= self.presentation.degree_cap
        ) else ZZ
        return RingElement(ring, self.terms.get(mono, 0))

    def sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda item: (monomial_degree(self.presentation, item[0]), item[0]))

    def to_text(self) -> str:
        """Canonical text form: terms sorted by (degree, monomial), e.g. ``2*h^3 (mod 3)``."""
        if not self.terms:
            return "0"
        parts = []
        for mono, value in self.sorted_terms():
            degree = monomial_degree(self.presentation, mono)
            body = str(value) if not mono else f"{value}*{monomial_text(mono)}"
            ring = self.presentation.coefficient_ring(degree)
            if ring.is_modular:
                body += f" (mod {ring.modulus})"
            parts.append(body)
        return " + ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"<GradedClass {self.to_text()}>"
