"""The four cohomological obstruction checks, with honest tri-state verdicts.

Every check is an obstruction, never an existence proof: ``Obstructed`` means
the corresponding structure cannot exist, ``NotObstructedByThisTest`` means
exactly what it says and nothing more, and ``Inapplicable`` means the model
does not carry enough trusted degrees (or the right coefficients) to run the
test.  The checks are:

* gradability: 2*c1 must vanish integrally in degree 2;
* polarization: 2*c_{2k+1} must vanish for every k >= 0 in the window;
* arboreal skeleton: c1*c_{2k} - c_{2k+1} must vanish with 2 inverted for
  every k >= 1 in the window;
* Maslov data mod an odd prime p: if c_1, ..., c_{p-1} all vanish mod p, then
  c_p must vanish mod p as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import KIND_INTEGERS, Z_HALF, Zmod
from .numtheory import is_prime
from .spaces import SpaceModel, with_coefficients

OBSTRUCTED = "Obstructed"
NOT_OBSTRUCTED = "NotObstructedByThisTest"
INAPPLICABLE = "Inapplicable"


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str | None = None

    def __str__(self) -> str:
        return self.status


def obstructed() -> Verdict:
    return Verdict(OBSTRUCTED)


def not_obstructed() -> Verdict:
    return Verdict(NOT_OBSTRUCTED)


def inapplicable(reason: str) -> Verdict:
    return Verdict(INAPPLICABLE, reason)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check: verdict plus (parameter, class value) witnesses."""

    name: str
    verdict: Verdict
    witnesses: tuple = ()

    def witness_params(self) -> tuple:
        return tuple(param for param, _ in self.witnesses)


@dataclass(frozen=True)
class ObstructionReport:
    space: str
    checks: tuple

    def check(self, name: str) -> CheckResult:
        for result in self.checks:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "schema": "ccobstruct/1",
            "space": self.space,
            "checks": [
                {
                    "name": result.name,
                    "verdict": result.verdict.status,
                    "reason": result.verdict.reason,
                    "witnesses": [
                        {"param": param, "value": value}
                        for param, value in result.witnesses
                    ],
                }
                for result in self.checks
            ],
        }


def _result(name: str, verdict: Verdict, witnesses=()) -> CheckResult:
    return CheckResult(name, verdict, tuple(witnesses))


def check_gradability(x: SpaceModel) -> CheckResult:
    """Whether 2*c1 is nonzero in degree 2 (integral coefficients required)."""
    name = "Gradability"
    if x.ring.kind != KIND_INTEGERS:
        return _result(name, inapplicable(f"integral Chern data required, model is over {x.ring}"))
    if x.window <= 2:
        return _result(name, inapplicable("degree 2 outside window"))
    doubled = 2 * x.chern_class(1)
    witnesses = [(1, doubled.to_text())]
    if doubled.is_zero():
        return _result(name, not_obstructed(), witnesses)
    return _result(name, obstructed(), witnesses)


def check_polarization(x: SpaceModel) -> CheckResult:
    """Whether some 2*c_{2k+1} with 4k+2 inside the window is nonzero."""
    name = "Polarization"
    ks = [k for k in range(0, x.window) if 4 * k + 2 < x.window]
    if not ks:
        return _result(name, inapplicable("no degree 4k+2 inside window"))
    witnesses = []
    for k in ks:
        value = 2 * x.chern_class(2 * k + 1)
        if not value.is_zero():
            witnesses.append((k, value.to_text()))
    if witnesses:
        return _result(name, obstructed(), witnesses)
    return _result(name, not_obstructed())


def check_arboreal(x: SpaceModel) -> CheckResult:
    """Whether some c1*c_{2k} - c_{2k+1} (k >= 1) is nonzero with 2 inverted."""
    name = "Arboreal"
    try:
        xh = with_coefficients(x, Z_HALF)
    except ValueError as err:
        return _result(name, inapplicable(str(err)))
    ks = [k for k in range(1, x.window) if 4 * k + 2 < x.window]
    if not ks:
        return _result(name, inapplicable("no k >= 1 inside window"))
    c1 = xh.chern_class(1)
    witnesses = []
    for k in ks:
        value = c1 * xh.chern_class(2 * k) - xh.chern_class(2 * k + 1)
        if not value.is_zero():
            witnesses.append((k, value.to_text()))
    if witnesses:
        return _result(name, obstructed(), witnesses)
    return _result(name, not_obstructed())


def check_maslov_mod_p(x: SpaceModel, p: int) -> CheckResult:
    """Mod-p test: all of c_1..c_{p-1} zero but c_p nonzero means obstructed.

    When the vanishing hypothesis fails the test asserts nothing, hence
    ``NotObstructedByThisTest``.
    """
    name = f"MaslovModP({p})"
    if p == 2 or not is_prime(p):
        raise ValueError(f"Maslov check needs an odd prime, got {p}")
    if 2 * p >= x.window:
        return _result(name, inapplicable("degree 2p outside window"))
    try:
        xp = with_coefficients(x, Zmod(p))
    except ValueError as err:
        return _result(name, inapplicable(str(err)))
    residues = [(i, xp.chern_class(i)) for i in range(1, p + 1)]
    witnesses = [(i, cls.to_text()) for i, cls in residues]
    hypothesis = all(cls.is_zero() for i, cls in residues[:-1])
    top_nonzero = not residues[-1][1].is_zero()
    if hypothesis and top_nonzero:
        return _result(name, obstructed(), witnesses)
    return _result(name, not_obstructed(), witnesses)


def classify(x: SpaceModel, primes=(3, 5, 7, 11, 13)) -> ObstructionReport:
    """Run every check (Maslov once per prime); failures degrade to Inapplicable."""
    checks = [check_gradability(x), check_polarization(x), check_arboreal(x)]
    for p in sorted(set(primes)):
        try:
            checks.append(check_maslov_mod_p(x, p))
        except ValueError as err:
            checks.append(_result(f"MaslovModP({p})", inapplicable(str(err))))
    return ObstructionReport(space=x.name, checks=tuple(checks))
