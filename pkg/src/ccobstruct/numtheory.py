"""Exact binomial arithmetic and the closed-form divisibility criteria.

The exact binomial is the oracle for every modular reduction in the package;
the base-p digit product (Lucas) is the fast path and an independent
cross-check for prime moduli.
"""

from __future__ import annotations

from math import comb


def is_prime(n: int) -> bool:
    """Trial division; adequate for the moduli this package handles (<= 10**6)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def binom_exact(n: int, k: int) -> int:
    """Exact C(n, k) as an arbitrary-precision integer; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binom_exact needs n, k >= 0, got ({n}, {k})")
    return comb(n, k)


def binom_mod_lucas(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via the base-p digit product, for p prime.

    >>> binom_mod_lucas(12, 3, 3)
    1
    """
    if n < 0 or k < 0:
        raise ValueError(f"binom_mod_lucas needs n, k >= 0, got ({n}, {k})")
    if not is_prime(p):
        raise ValueError(f"binom_mod_lucas needs a prime modulus, got {p}")
    result = 1
    while (n or k) and result:
        result = result * comb(n % p, k % p) % p
        n //= p
        k //= p
    return result


def padic_valuation(n: int, p: int) -> int:
    """Exponent of the prime p in n (n != 0)."""
    if n == 0:
        raise ValueError("valuation of 0 is infinite")
    if not is_prime(p):
        raise ValueError(f"padic_valuation needs a prime, got {p}")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def triple_product_over_three(n: int) -> int:
    """n(n+1)(n+2)/3, always an integer since one factor is divisible by 3."""
    product = n * (n + 1) * (n + 2)
    assert product % 3 == 0
    return product // 3


def arboreal_divisor_criterion(n: int, d: int) -> bool:
    """True when the degree-6 skeleton obstruction fires on X(n, d).

    For odd d and n > 6: the class c1*c2 - c3 of the divisor complement is
    nonzero with 2 inverted exactly when d does not divide n(n+1)(n+2)/3.
    """
    if n <= 6:
        raise ValueError(f"criterion needs n > 6, got {n}")
    if d < 1 or d % 2 == 0:
        raise ValueError(f"criterion needs odd d >= 1, got {d}")
    return triple_product_over_three(n) % d != 0


def anticanonical_congruence(n: int) -> bool:
    """True when the anticanonical complement over P^n fails the degree-6 test.

    Equivalent to n = 2 (mod 6); agrees with arboreal_divisor_criterion(n, n+1)
    whenever n+1 is odd.
    """
    if n <= 6:
        raise ValueError(f"congruence test needs n > 6, got {n}")
    return n % 6 == 2
