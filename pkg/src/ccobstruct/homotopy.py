"""Table-backed homotopy-group facts: stable groups of O, U and U/O, the
low-degree image-of-J input, mod-p vanishing ranges for stable stems, unitary
stability, and the derived record for the 6-sphere bundle construction.

Nothing here is computed from first principles; these are the standard
periodicity tables, stored only over the ranges the rest of the package
actually consumes.  Requests outside a table's cited range raise instead of
extrapolating.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .numtheory import is_prime

# Stable homotopy of the infinite orthogonal group, indexed by k mod 8
# (entries are cyclic orders: 0 means an infinite cyclic group, 1 trivial).
_PI_O_PERIOD8 = (2, 2, 1, 0, 1, 1, 1, 0)

# The image of J in the 3-stem: an infinite cyclic group surjecting onto Z/24.
J_SURJECTION_TARGET_ORDER = 24


@dataclass(frozen=True)
class HomotopyGroup:
    """A finite direct sum of cyclic groups; order 0 encodes an infinite one."""

    orders: tuple

    def __post_init__(self):
        cleaned = tuple(sorted(o for o in self.orders if o != 1))
        if any(o < 0 for o in cleaned):
            raise ValueError("cyclic orders must be >= 0")
        object.__setattr__(self, "orders", cleaned)

    def is_trivial(self) -> bool:
        return not self.orders

    def __str__(self) -> str:
        if not self.orders:
            return "0"
        return " + ".join("Z" if o == 0 else f"Z/{o}" for o in self.orders)


TRIVIAL = HomotopyGroup(())
Z = HomotopyGroup((0,))


def _cyclic(order: int) -> HomotopyGroup:
    return HomotopyGroup((order,))


def bott_pi(group: str, k: int) -> HomotopyGroup:
    """pi_k of O, U or U/O from the periodicity tables (k >= 0)."""
    if k < 0:
        raise ValueError(f"homotopy index must be >= 0, got {k}")
    if group == "O":
        return _cyclic(_PI_O_PERIOD8[k % 8])
    if group == "U":
        return Z if k % 2 == 1 else TRIVIAL
    if group in ("U/O", "U_mod_O"):
        if k == 0:
            return TRIVIAL
        if k == 1:
            return Z
        return bott_pi("O", k - 2)
    raise ValueError(f"unknown group {group!r}; expected O, U or U/O")


J_SHAPE_TIMES_TWO = "Z --2--> Z -> Z/2 -> 0"
J_SHAPE_ISO = "Z --iso--> Z -> 0 -> 0"


def j_sequence_shape(p: int) -> str:
    """Shape of pi_{2p-1}(U) -> pi_{2p-1}(U/O) -> pi_{2p-2}(O) -> 0 for odd prime p.

    The middle group pi_{2p-1}(U/O) is infinite cyclic because 2p-1 is odd and
    never 3 or 7 mod 8; the tail is pi_{2p-2}(O), either trivial or Z/2.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"shape classification needs an odd prime, got {p}")
    residue = (2 * p - 1) % 8
    assert residue in (1, 5), f"odd prime {p} gave residue {residue}"
    middle = bott_pi("U/O", 2 * p - 1)
    assert middle == Z, f"expected an infinite cyclic middle group, got {middle}"
    tail = bott_pi("O", 2 * p - 2)
    if tail.is_trivial():
        return J_SHAPE_ISO
    assert tail == _cyclic(2)
    return J_SHAPE_TIMES_TWO


def stable_stem_mod_p(p: int, k: int) -> HomotopyGroup:
    """pi_k^s tensored with Z/p for 0 < k <= 2p-3: zero until the edge Z/p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"stable-stem table needs an odd prime, got {p}")
    if not 0 < k <= 2 * p - 3:
        raise ValueError(
            f"fact table does not extend beyond 0 < k <= {2 * p - 3} for p={p}, got k={k}")
    if k < 2 * p - 3:
        return TRIVIAL
    return _cyclic(p)


def unitary_stable_rank(k: int) -> int:
    """Smallest m with pi_k(BU(m)) -> pi_k(BU) surjective, namely ceil(k/2)."""
    if k < 1:
        raise ValueError(f"stable range needs k >= 1, got {k}")
    return (k + 1) // 2


@dataclass(frozen=True)
class Sphere6Record:
    """Derived invariants of the rank-3k bundle total space over S^6."""

    c3_pairing: int
    maslov_sufficient: bool
    arboreal_obstructed: bool
    destabilized_rank: int

    def to_json(self) -> dict:
        return {"schema": "ccobstruct/1", **asdict(self)}


def sphere6_report(k: int) -> Sphere6Record:
    """Invariants of the total space of k tangent copies over S^6.

    c3 pairs to 2(k+1) with the base fundamental class; the degree-6 class of
    the classifying map is (k+1) times a generator, so landing in the kernel
    of the surjection onto Z/24 is a sufficient (not necessary) condition for
    Maslov data; a nonzero pairing obstructs an arboreal skeleton outright;
    and the construction destabilizes to complex rank ceil(6/2) = 3.
    """
    if k < 1:
        raise ValueError(f"bundle construction needs k >= 1, got {k}")
    pairing = 2 * (k + 1)
    return Sphere6Record(
        c3_pairing=pairing,
        maslov_sufficient=(k + 1) % J_SURJECTION_TARGET_ORDER == 0,
        arboreal_obstructed=pairing != 0,
        destabilized_rank=unitary_stable_rank(6),
    )
