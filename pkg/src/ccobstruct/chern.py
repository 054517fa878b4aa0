"""Chern-class calculus: total classes, Whitney products, and the
real-plus-line specialization with its kernel test.

The specialization maps act on polynomials in the Chern generators c1, c2, ...
(degree of c_i is 2i) with 2 inverted, landing in polynomials in Pontryagin
generators p1, p2, ... (degree of p_i is 4i) and a degree-2 line class e:

* a complexified real bundle contributes ``c_{2m} -> (-1)^m p_m`` and kills
  odd classes;
* an extra line summand contributes ``c_1 -> e`` and
  ``c_{2m+1} -> (-1)^m p_m * e``.

Both maps extend multiplicatively to monomials and linearly to polynomials;
``c1*c_{2k} - c_{2k+1}`` lies in the kernel of the real-plus-line map for
every k >= 1.
"""

from __future__ import annotations

from .graded import DEFAULT_MAX_DEGREE, FreePoly, Generator, GradedClass
from .numtheory import binom_exact
from .rings import CoefficientRing, Z_HALF


def chern_presentation(max_degree: int = DEFAULT_MAX_DEGREE,
                       ring: CoefficientRing = Z_HALF) -> FreePoly:
    """Polynomials in c1..c_N over the given ring, N capped by max_degree."""
    gens = tuple(Generator(f"c{i}", 2 * i) for i in range(1, max_degree // 2 + 1))
    return FreePoly(gens, ring)


def pontryagin_line_presentation(max_degree: int = DEFAULT_MAX_DEGREE,
                                 ring: CoefficientRing = Z_HALF) -> FreePoly:
    """Polynomials in p1..p_M and the line class e (degree 2)."""
    gens = (Generator("e", 2),) + tuple(
        Generator(f"p{i}", 4 * i) for i in range(1, max_degree // 4 + 1))
    return FreePoly(gens, ring)


def pontryagin_presentation(max_degree: int = DEFAULT_MAX_DEGREE,
                            ring: CoefficientRing = Z_HALF) -> FreePoly:
    gens = tuple(Generator(f"p{i}", 4 * i) for i in range(1, max_degree // 4 + 1))
    return FreePoly(gens, ring)


def projective_space_presentation(n: int, ring: CoefficientRing) -> FreePoly:
    """The hyperplane-class algebra of P^n (relation enforced by truncation)."""
    return FreePoly((Generator("h", 2),), ring)


def total_chern_projective(n: int, ring: CoefficientRing) -> GradedClass:
    """Total Chern class of P^n: sum of C(n+1, i) h^i for 0 <= i <= n."""
    if n < 1:
        raise ValueError(f"projective space needs n >= 1, got {n}")
    presentation = projective_space_presentation(n, ring)
    terms = {(("h", i),) if i else (): binom_exact(n + 1, i) for i in range(n + 1)}
    return GradedClass(presentation, terms, max_degree=2 * n)


def whitney_product(a: GradedClass, b: GradedClass) -> GradedClass:
    """Product of two total classes; both factors must have constant term 1."""
    for cls in (a, b):
        if cls.coefficient(()).value != 1:
            raise ValueError("total classes must have constant term 1")
    return a * b


def _chern_index(name: str) -> int:
    if not name.startswith("c") or not name[1:].isdigit():
        raise ValueError(f"expected a Chern generator c<i>, got {name!r}")
    return int(name[1:])


def _image_monomial(mono, line_to_zero: bool):
    """Image of a Chern monomial as (sign, target monomial), or None if killed."""
    sign = 1
    exps: dict = {}

    def bump(name, by):
        exps[name] = exps.get(name, 0) + by

    for name, exp in mono:
        i = _chern_index(name)
        if i == 1:
            if line_to_zero:
                return None
            bump("e", exp)
        elif i % 2 == 0:
            m = i // 2
            sign *= (-1) ** (m * exp)
            bump(f"p{m}", exp)
        else:
            if line_to_zero:
                return None
            m = (i - 1) // 2
            sign *= (-1) ** (m * exp)
            bump(f"p{m}", exp)
            bump("e", exp)
    return sign, tuple(sorted(exps.items()))


def _specialize(P: GradedClass, target: FreePoly, line_to_zero: bool) -> GradedClass:
    if P.presentation.ring != Z_HALF:
        raise ValueError("specialization is defined over the half-inverted integers")
    acc: dict = {}
    for mono, coeff in P.terms.items():
        image = _image_monomial(mono, line_to_zero)
        if image is None:
            continue
        sign, target_mono = image
        acc[target_mono] = acc.get(target_mono, 0) + sign * coeff
    return GradedClass(target, acc, P.max_degree)


def real_plus_line_image(P: GradedClass) -> GradedClass:
    """Image of a Chern polynomial under c1 -> e, c_{2m} -> (-1)^m p_m,
    c_{2m+1} -> (-1)^m p_m * e, extended multiplicatively."""
    return _specialize(P, pontryagin_line_presentation(P.max_degree, Z_HALF), line_to_zero=False)


def complexification_image(P: GradedClass) -> GradedClass:
    """Image under c_{2m} -> (-1)^m p_m with all odd Chern generators killed."""
    return _specialize(P, pontryagin_presentation(P.max_degree, Z_HALF), line_to_zero=True)


def in_real_plus_line_kernel(P: GradedClass):
    """Whether P maps to zero under the real-plus-line specialization.

    Returns (True, None) in the kernel, else (False, image class).
    """
    image = real_plus_line_image(P)
    if image.is_zero():
        return True, None
    return False, image


def drop_line_class(P: GradedClass) -> GradedClass:
    """Set the line class e to zero, landing in pure Pontryagin polynomials."""
    target = pontryagin_presentation(P.max_degree, P.presentation.ring)
    kept = {m: v for m, v in P.terms.items() if all(name != "e" for name, _ in m)}
    return GradedClass(target, kept, P.max_degree)
