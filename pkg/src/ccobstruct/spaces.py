"""Concrete space models: divisor complements in projective space, total
spaces of bundles over the 6-sphere, wedges, and stabilizations.

A :class:`SpaceModel` packages a cohomology presentation, the Chern classes of
the stable tangent bundle, and a degree window inside which the data is
trusted.  For the complement of a smooth degree-d hypersurface in P^n the even
cohomology below degree n is cyclic of order d (with the order adjusted per
coefficient ring) generated by powers of the restricted hyperplane class, and
c_i restricts from C(n+1, i) h^i; the middle-dimensional group is deliberately
left out of the model, so every consumer must stay strictly below the window.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from math import gcd

from .graded import GradedClass, HPowers, SphereLike, WedgeSum
from .numtheory import binom_exact, is_prime
from .rings import KIND_HALF_INVERTED, KIND_INTEGERS, KIND_MOD, CoefficientRing, Z_HALF, ZZ, Zmod, odd_part


@dataclass(frozen=True)
class SpaceModel:
    """Cohomology presentation plus tangent Chern data, trusted below ``window``."""

    name: str
    presentation: object
    chern: tuple  # ((i, GradedClass), ...) with contiguous indices from 1
    window: int
    meta: tuple = field(default_factory=tuple)

    def __post_init__(self):
        for i, cls in self.chern:
            if cls != cls.degree_part(2 * i):
                raise ValueError(f"c_{i} must be homogeneous of degree {2 * i}")

    @property
    def ring(self) -> CoefficientRing:
        pres = self.presentation
        return pres.ring

    @property
    def max_chern_index(self) -> int:
        return max((i for i, _ in self.chern), default=0)

    def chern_class(self, i: int) -> GradedClass:
        for j, cls in self.chern:
            if j == i:
                return cls
        return GradedClass.zero(self.presentation, max_degree=self.window - 1)

    def with_meta(self, note: str) -> "SpaceModel":
        return replace(self, meta=self.meta + (note,))


def divisor_complement(n: int, d: int, ring: CoefficientRing = ZZ) -> SpaceModel:
    """Complement of a smooth degree-d hypersurface in P^n, modeled below degree n."""
    if n < 2:
        raise ValueError(f"divisor complement needs n >= 2, got {n}")
    if d < 1:
        raise ValueError(f"divisor degree must be >= 1, got {d}")
    order = ring.quotient_order(d)
    presentation = HPowers.uniform(order, window=n, ring=ring)
    chern = []
    for i in range(1, (n - 1) // 2 + 1):
        cls = GradedClass(presentation, {(("h", i),): binom_exact(n + 1, i)},
                          max_degree=n - 1)
        chern.append((i, cls))
    return SpaceModel(
        name=f"X(n={n},d={d})/{ring}",
        presentation=presentation,
        chern=tuple(chern),
        window=n,
        meta=(f"hypersurface complement: n={n}, d={d}, coefficients {ring}",),
    )


def sphere6_bundle_total_space(k: int) -> SpaceModel:
    """Total space of k copies of the tangent bundle over S^6 (complex rank 3k).

    Homotopy equivalent to S^6; the only interesting class is c_3, which pairs
    to 2(k+1) with the fundamental class of the base.  The h-principle behind
    this construction needs complex rank at least 3, hence k >= 1.
    """
    if k < 1:
        raise ValueError(f"bundle construction needs k >= 1, got {k}")
    presentation = SphereLike(((6, 1),), ZZ)
    c3 = GradedClass.from_generator(presentation, "x6", 2 * (k + 1), max_degree=6)
    zero = GradedClass.zero(presentation, max_degree=6)
    return SpaceModel(
        name=f"S6-bundle(k={k})",
        presentation=presentation,
        chern=((1, zero), (2, zero), (3, c3)),
        window=7,
        meta=(f"rank-{3 * k} bundle over S^6, c3 pairing {2 * (k + 1)}",),
    )


def cotangent_sphere6() -> SpaceModel:
    """Cotangent model of S^6 with 2 inverted: all odd Chern classes vanish there."""
    presentation = SphereLike(((6, 1),), Z_HALF)
    zero = GradedClass.zero(presentation, max_degree=6)
    return SpaceModel(
        name="T*S6",
        presentation=presentation,
        chern=((1, zero), (2, zero), (3, zero)),
        window=7,
        meta=("cotangent bundle of S^6; tangent classes from a complexification",),
    )


def point_space(window: int = 7) -> SpaceModel:
    """A contractible model (no positive-degree cohomology)."""
    presentation = SphereLike((), ZZ)
    return SpaceModel(name="pt", presentation=presentation, chern=(), window=window)


def _coerce_rings(a: SpaceModel, b: SpaceModel):
    if a.ring == b.ring:
        return a, b
    kinds = {a.ring.kind, b.ring.kind}
    if kinds == {KIND_INTEGERS, KIND_HALF_INVERTED}:
        return with_coefficients(a, Z_HALF), with_coefficients(b, Z_HALF)
    raise ValueError(f"cannot wedge models over {a.ring} and {b.ring}")


def wedge(a: SpaceModel, b: SpaceModel) -> SpaceModel:
    """One-point union of two sphere-like models.

    Component order follows argument order: generators of ``a`` appear as
    ``name@0`` and those of ``b`` as ``name@1``.  Chern classes restrict to the
    summands componentwise.  Models over Z and over Z[1/2] may be mixed, in
    which case everything is pushed into Z[1/2].
    """
    for x in (a, b):
        if not isinstance(x.presentation, SphereLike):
            raise ValueError(f"wedge needs sphere-like inputs, got {x.name}")
    a, b = _coerce_rings(a, b)
    presentation = WedgeSum((a.presentation, b.presentation))
    window = min(a.window, b.window)
    max_degree = window - 1
    chern = []
    for i in range(1, max(a.max_chern_index, b.max_chern_index) + 1):
        terms = {}
        for component, model in enumerate((a, b)):
            for mono, value in model.chern_class(i).terms.items():
                renamed = tuple((f"{name}@{component}", exp) for name, exp in mono)
                terms[renamed] = value
        chern.append((i, GradedClass(presentation, terms, max_degree=max_degree)))
    return SpaceModel(
        name=f"wedge({a.name}, {b.name})",
        presentation=presentation,
        chern=tuple(chern),
        window=window,
        meta=a.meta + b.meta + ("wedge: components ordered by argument order",),
    )


def stabilize(x: SpaceModel, m: int) -> SpaceModel:
    """Add m trivial complex line summands; Chern data is unchanged."""
    if m < 0:
        raise ValueError(f"stabilization count must be >= 0, got {m}")
    if m == 0:
        return x
    return x.with_meta(f"stabilized by a trivial rank-{m} summand")


def _convert_order(order: int, target: CoefficientRing) -> int:
    """Order of (cyclic group of given order) tensored into the target ring."""
    if target.kind == KIND_HALF_INVERTED:
        return odd_part(order) if order else 0
    p = target.modulus
    return gcd(order, p) if order else p


def with_coefficients(x: SpaceModel, target: CoefficientRing) -> SpaceModel:
    """Reinterpret a model's Chern data in another coefficient ring.

    Supported targets: Z[1/2] (from Z or Z[1/2]) and Z/p for odd prime p (from
    Z or Z[1/2]).  Models already carrying Z/m coefficients cannot be
    re-reduced faithfully and are rejected unless the target matches.
    """
    source = x.ring
    if source == target:
        return x
    if source.kind == KIND_MOD:
        raise ValueError(f"cannot convert a {source} model to {target}")
    if target.kind == KIND_MOD:
        p = target.modulus
        if p == 2 or not is_prime(p):
            raise ValueError(f"modular conversion needs an odd prime, got {p}")
    elif target.kind != KIND_HALF_INVERTED:
        raise ValueError(f"cannot convert a {source} model to {target}")

    pres = x.presentation
    if isinstance(pres, HPowers):
        new_pres = HPowers(tuple(_convert_order(m, target) for m in pres.orders),
                           pres.window, target)
    elif isinstance(pres, SphereLike):
        new_pres = SphereLike(pres.cells, target)
    elif isinstance(pres, WedgeSum):
        new_pres = WedgeSum(tuple(SphereLike(s.cells, target) for s in pres.summands))
    else:
        raise ValueError(f"unsupported presentation for conversion: {pres!r}")
    chern = tuple(
        (i, GradedClass(new_pres, cls.terms, max_degree=cls.max_degree))
        for i, cls in x.chern
    )
    return SpaceModel(
        name=f"{x.name}->{target}",
        presentation=new_pres,
        chern=chern,
        window=x.window,
        meta=x.meta + (f"coefficients reinterpreted in {target}",),
    )


def top_cell_pairing(x: SpaceModel, i: int):
    """Pairing of c_i against the top cells of a sphere-like model.

    Returns an integer for a single sphere-like summand, or a tuple with one
    entry per wedge component (argument order).
    """
    pres = x.presentation
    cls = x.chern_class(i)

    def single(summand: SphereLike, suffix: str = "") -> int:
        if not summand.cells:
            return 0
        top_degree = summand.cells[-1][0]
        value = 0
        for mono, coeff in cls.terms.items():
            if mono == ((f"x{top_degree}{suffix}", 1),):
                value = coeff
        return value

    if isinstance(pres, SphereLike):
        return single(pres)
    if isinstance(pres, WedgeSum):
        return tuple(single(s, suffix=f"@{j}") for j, s in enumerate(pres.summands))
    raise ValueError("pairing is defined for sphere-like models only")


def space_to_json(x: SpaceModel) -> dict:
    """Schema-versioned JSON description with byte-stable ordering."""
    chern = []
    for i, cls in x.chern:
        coefficients = []
        for mono, value in cls.sorted_terms():
            ring = cls.coefficient(mono).ring
            coefficients.append({
                "monomial": "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono) or "1",
                "value": value,
                "mod": ring.modulus if ring.is_modular else None,
            })
        chern.append({"i": i, "degree": 2 * i, "coefficients": coefficients})
    return {
        "schema": "ccobstruct/1",
        "name": x.name,
        "window": x.window,
        "presentation": x.presentation.describe(),
        "chern": chern,
        "meta": list(x.meta),
    }
