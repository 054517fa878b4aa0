import random

import pytest

from ccobstruct.graded import (
    FreePoly,
    Generator,
    GradedClass,
    HPowers,
    SphereLike,
    WedgeSum,
    monomial_degree,
)
from ccobstruct.rings import ZZ, Z_HALF, Zmod


def free_hx(ring=ZZ):
    return FreePoly((Generator("h", 2), Generator("x", 4)), ring)


def test_generator_degree_must_be_even_positive():
    with pytest.raises(ValueError):
        Generator("h", 3)
    with pytest.raises(ValueError):
        Generator("h", 0)


def test_addition_identity_and_cancellation():
    pres = HPowers.uniform(3, window=10, ring=ZZ)
    x = GradedClass(pres, {(("h", 2),): 2}, max_degree=9)
    zero = GradedClass.zero(pres, max_degree=9)
    assert x + zero == x
    two_h3 = GradedClass(pres, {(("h", 3),): 2}, max_degree=9)
    one_h3 = GradedClass(pres, {(("h", 3),): 1}, max_degree=9)
    assert (two_h3 + one_h3).is_zero()  # 2 + 1 = 0 (mod 3)
    h = GradedClass.from_generator(free_hx(), "h", max_degree=8)
    assert (h + h).to_text() == "2*h"


def test_multiplication_unit_and_h_powers():
    pres = free_hx()
    x = GradedClass(pres, {(("h", 1), ("x", 1)): 5}, max_degree=8)
    one = GradedClass.unit(pres, max_degree=8)
    assert x * one == x
    # in the half-inverted model of the degree-3 complement over P^7,
    # c1*c2 = (2h)(h^2) = 2h^3
    from ccobstruct.spaces import divisor_complement

    model = divisor_complement(7, 3, Z_HALF)
    product = model.chern_class(1) * model.chern_class(2)
    assert product.to_text() == "2*h^3 (mod 3)"


def test_sphere_like_products_vanish():
    pres = SphereLike(((6, 1),), ZZ)
    a = GradedClass.from_generator(pres, "x6", 3, max_degree=12)
    b = GradedClass.from_generator(pres, "x6", 5, max_degree=12)
    assert (a * b).is_zero()
    assert (GradedClass.unit(pres, max_degree=12) * a) == a


def test_sphere_like_rejects_composite_monomials():
    pres = SphereLike(((6, 1),), ZZ)
    with pytest.raises(ValueError):
        GradedClass(pres, {(("x6", 2),): 1}, max_degree=20)


def test_degree_part():
    total = GradedClass(free_hx(), {(): 1, (("h", 1),): 8, (("h", 2),): 28}, max_degree=8)
    assert total.degree_part(2).to_text() == "8*h"
    assert total.degree_part(3).is_zero()
    assert GradedClass.zero(free_hx(), 8).degree_part(4).is_zero()


def test_unknown_generator_rejected():
    with pytest.raises(ValueError):
        GradedClass(free_hx(), {(("y", 1),): 1})


def test_presentation_mismatch_rejected():
    a = GradedClass.unit(free_hx(), max_degree=8)
    b = GradedClass.unit(free_hx(Z_HALF), max_degree=8)
    with pytest.raises(ValueError):
        a + b
    c = GradedClass.unit(free_hx(), max_degree=10)
    with pytest.raises(ValueError):
        a * c  # same presentation, different truncation


def test_truncation_drops_high_degrees_on_construction():
    pres = free_hx()
    cls = GradedClass(pres, {(("h", 5),): 1, (("h", 1),): 1}, max_degree=4)
    assert cls.to_text() == "1*h"


def test_window_drop_is_flagged():
    pres = HPowers.uniform(5, window=7, ring=ZZ)
    h2 = GradedClass(pres, {(("h", 2),): 1}, max_degree=12)
    product = h2 * h2  # degree 8 lands at/above the window
    assert product.is_zero()
    assert product.dropped_above_window
    assert not (h2 * GradedClass.unit(pres, 12)).dropped_above_window
    # the flag never takes part in equality
    assert product == GradedClass.zero(pres, 12)


def random_class(rng, pres, max_degree, ring_span=9, n_terms=4):
    gens = list(pres.generators)
    terms = {}
    for _ in range(n_terms):
        mono = []
        degree = 0
        while gens and degree < max_degree:
            g = rng.choice(gens)
            exp = rng.randint(1, 2)
            if degree + g.degree * exp > max_degree:
                break
            mono.append((g.name, exp))
            degree += g.degree * exp
            if rng.random() < 0.5:
                break
        terms[tuple(mono)] = rng.randint(-ring_span, ring_span)
    return GradedClass(pres, terms, max_degree)


@pytest.mark.parametrize("ring", [ZZ, Z_HALF, Zmod(12)])
def test_product_laws_random(ring):
    rng = random.Random(3)
    pres = FreePoly((Generator("a", 2), Generator("b", 4), Generator("c", 6)), ring)
    for _ in range(150):
        x = random_class(rng, pres, 40)
        y = random_class(rng, pres, 40)
        z = random_class(rng, pres, 40)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_truncation_compatibility_random():
    rng = random.Random(5)
    pres = free_hx()
    for _ in range(200):
        x = random_class(rng, pres, 24)
        y = random_class(rng, pres, 24)
        assert (x * y).truncate(12) == x.truncate(12) * y.truncate(12)
        assert (x + y).truncate(12) == x.truncate(12) + y.truncate(12)


def test_truncate_only_lowers():
    x = GradedClass.unit(free_hx(), max_degree=8)
    with pytest.raises(ValueError):
        x.truncate(10)


def test_uniform_h_powers_multiplication_table():
    """With every order equal to d the h-powers form (Z/d)[h] below the window."""
    window = 20
    top = (window - 1) // 2
    for d in range(2, 31):
        pres = HPowers.uniform(d, window=window, ring=ZZ)
        reps = range(d) if d <= 8 else {1, 2, d // 2, d - 1}
        for i in range(1, top + 1):
            for j in range(1, top + 1):
                for a in reps:
                    for b in reps:
                        x = GradedClass(pres, {(("h", i),): a}, max_degree=window - 1)
                        y = GradedClass(pres, {(("h", j),): b}, max_degree=window - 1)
                        product = x * y
                        if 2 * (i + j) >= window:
                            assert product.is_zero()
                        else:
                            expected = GradedClass(
                                pres, {(("h", i + j),): (a * b) % d}, max_degree=window - 1)
                            assert product == expected


def test_mixed_orders_supported():
    pres = HPowers((4, 6, 9), window=8, ring=ZZ)
    assert pres.coefficient_ring(2).modulus == 4
    assert pres.coefficient_ring(6).modulus == 9
    x = GradedClass(pres, {(("h", 1),): 3}, max_degree=7)
    y = GradedClass(pres, {(("h", 2),): 5}, max_degree=7)
    assert (x * y).to_text() == "6*h^3 (mod 9)"  # 15 reduced in degree 6


def test_serialization_is_canonical():
    pres = FreePoly((Generator("e", 2), Generator("p1", 4)), Z_HALF)
    cls = GradedClass(pres, {(("p1", 1), ("e", 1)): -1, (("e", 1),): 1, (): 1}, max_degree=8)
    assert cls.to_text() == "1 + 1*e + -1*e*p1"
    assert GradedClass.zero(pres, 8).to_text() == "0"


def test_wedge_sum_presentation():
    left = SphereLike(((6, 1),), ZZ)
    right = SphereLike(((6, 1),), ZZ)
    pres = WedgeSum((left, right))
    names = [g.name for g in pres.generators]
    assert names == ["x6@0", "x6@1"]
    a = GradedClass.from_generator(pres, "x6@0", 48, max_degree=6)
    b = GradedClass.from_generator(pres, "x6@1", 1, max_degree=6)
    assert (a * b).is_zero()
    assert (a + b).to_text() == "48*x6@0 + 1*x6@1"
    with pytest.raises(ValueError):
        WedgeSum((left, SphereLike(((6, 1),), Z_HALF)))


def test_monomial_degree_and_coefficient_access():
    pres = free_hx()
    cls = GradedClass(pres, {(("h", 2), ("x", 1)): 7}, max_degree=10)
    assert monomial_degree(pres, (("h", 2), ("x", 1))) == 8
    element = cls.coefficient((("x", 1), ("h", 2)))  # unsorted input is canonicalized
    assert element.value == 7 and element.ring == ZZ
