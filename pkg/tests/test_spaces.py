import json
import random

import pytest

from ccobstruct.graded import HPowers, SphereLike, WedgeSum
from ccobstruct.numtheory import binom_exact
from ccobstruct.rings import ZZ, Z_HALF, Zmod, odd_part
from ccobstruct.spaces import (
    cotangent_sphere6,
    divisor_complement,
    point_space,
    space_to_json,
    sphere6_bundle_total_space,
    stabilize,
    top_cell_pairing,
    wedge,
    with_coefficients,
)


def test_divisor_complement_examples():
    x = divisor_complement(11, 12, Zmod(3))
    assert x.chern_class(1).is_zero()
    assert x.chern_class(2).is_zero()
    assert x.chern_class(3).to_text() == "1*h^3 (mod 3)"

    anticanonical = divisor_complement(9, 10, ZZ)
    assert anticanonical.chern_class(1).is_zero()

    trivial = divisor_complement(7, 1, ZZ)
    assert all(trivial.chern_class(i).is_zero() for i in range(1, 4))
    assert trivial.presentation.coefficient_ring(2).modulus == 1


def test_divisor_complement_validation():
    with pytest.raises(ValueError):
        divisor_complement(1, 3, ZZ)
    with pytest.raises(ValueError):
        divisor_complement(7, 0, ZZ)


def test_divisor_complement_window_and_indices():
    x = divisor_complement(11, 12, ZZ)
    assert x.window == 11
    assert [i for i, _ in x.chern] == [1, 2, 3, 4, 5]  # 2i < 11
    assert x.chern_class(6).is_zero()  # absent indices read as zero
    assert isinstance(x.presentation, HPowers)
    assert x.presentation.orders == (12,) * 5


def test_chern_data_matches_binomials():
    for n in range(2, 31):
        for d in (1, 2, 3, 7, 12, 40):
            x = divisor_complement(n, d, ZZ)
            for i in range(1, (n - 1) // 2 + 1):
                expected = binom_exact(n + 1, i) % d
                assert x.chern_class(i).coefficient((("h", i),)).value == expected


def test_restriction_compatibility():
    """Reducing the integral model mod m matches building the model mod m."""
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(7, 25)
        d = rng.randint(1, 30)
        p = rng.choice([3, 5, 7, 11, 13])
        integral = divisor_complement(n, d, ZZ)
        assert with_coefficients(integral, Zmod(p)).chern == \
            divisor_complement(n, d, Zmod(p)).chern
        assert with_coefficients(integral, Z_HALF).chern == \
            divisor_complement(n, d, Z_HALF).chern


def test_half_inverted_uses_odd_part():
    x = divisor_complement(8, 12, Z_HALF)
    assert x.presentation.orders == (odd_part(12),) * 3
    assert x.presentation.orders[0] == 3


def test_with_coefficients_guards():
    modular = divisor_complement(8, 9, Zmod(3))
    with pytest.raises(ValueError):
        with_coefficients(modular, Z_HALF)
    with pytest.raises(ValueError):
        with_coefficients(divisor_complement(8, 9, ZZ), Zmod(4))
    x = divisor_complement(8, 9, ZZ)
    assert with_coefficients(x, ZZ) is x


def test_sphere6_bundle():
    x = sphere6_bundle_total_space(23)
    assert x.window == 7
    assert top_cell_pairing(x, 3) == 48
    assert top_cell_pairing(x, 1) == 0
    assert x.chern_class(1).is_zero() and x.chern_class(2).is_zero()
    assert top_cell_pairing(sphere6_bundle_total_space(1), 3) == 4
    assert top_cell_pairing(sphere6_bundle_total_space(11), 3) == 24
    with pytest.raises(ValueError):
        sphere6_bundle_total_space(0)


def test_wedge_components_and_order():
    z = wedge(sphere6_bundle_total_space(23), cotangent_sphere6())
    assert isinstance(z.presentation, WedgeSum)
    assert z.ring == Z_HALF  # integral summand was pushed into Z[1/2]
    assert top_cell_pairing(z, 3) == (48, 0)
    flipped = wedge(cotangent_sphere6(), sphere6_bundle_total_space(23))
    assert top_cell_pairing(flipped, 3) == (0, 48)


def test_wedge_with_point_keeps_chern_data():
    a = sphere6_bundle_total_space(5)
    z = wedge(a, point_space())
    assert top_cell_pairing(z, 3) == (12, 0)
    assert z.chern_class(3).to_text() == "12*x6@0"
    assert z.window == a.window


def test_wedge_rejects_non_sphere_models():
    with pytest.raises(ValueError):
        wedge(divisor_complement(8, 9, ZZ), sphere6_bundle_total_space(1))


def test_stabilize_is_inert():
    x = sphere6_bundle_total_space(23)
    assert stabilize(x, 0) is x
    stabilized = stabilize(x, 66)
    assert stabilized.chern == x.chern
    assert stabilized.window == x.window
    twice = stabilize(stabilize(x, 30), 36)
    assert twice.chern == stabilize(x, 66).chern
    with pytest.raises(ValueError):
        stabilize(x, -1)


def test_space_json_is_schema_versioned_and_stable():
    x = divisor_complement(8, 9, ZZ)
    payload = space_to_json(x)
    assert payload["schema"] == "ccobstruct/1"
    assert payload["window"] == 8
    assert payload["presentation"]["kind"] == "h-powers"
    degree6 = [entry for entry in payload["chern"] if entry["i"] == 3]
    assert degree6[0]["coefficients"] == [{"monomial": "h^3", "value": 3, "mod": 9}]
    # byte-stable: two builds serialize identically
    again = json.dumps(space_to_json(divisor_complement(8, 9, ZZ)), sort_keys=True)
    assert json.dumps(payload, sort_keys=True) == again


def test_sphere_json_roundtrip_shape():
    payload = space_to_json(sphere6_bundle_total_space(23))
    assert payload["presentation"] == {"kind": "sphere-like", "cells": [[6, 1]], "ring": "Z"}
    assert payload["chern"][2]["coefficients"] == [{"monomial": "x6", "value": 48, "mod": None}]
