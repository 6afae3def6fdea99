"""Closed-form cohomology of sign local systems.

Two formulas live here: the combinatorial one valid under the CDO condition,
and the central-arrangement identification with the mod 2 cohomology of the
projectivised complement when the total turn monodromy is -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arrangement import Arrangement, betti_numbers, intersection_poset, projective_betti
from .core_math import AbelianGroup
from .density import DenseEdgeReport, ProjectiveClosure, SignLocalSystem, cdo_check

METHODS = ("theorem", "lemma", "oracle")


class CDOViolation(Exception):
    """The local system fails the CDO condition; carries the offending dense edges."""

    def __init__(self, violations: list[DenseEdgeReport]):
        self.violations = violations
        labels = ", ".join("{" + ",".join(f"H{i}" for i in r.labels) + "}" for r in violations)
        super().__init__(f"CDO condition fails on dense edge(s) at infinity: {labels}")


class HypothesisError(ValueError):
    """Inputs do not meet the hypotheses of the central-arrangement formula."""


@dataclass(frozen=True)
class CohomologyProfile:
    groups: tuple
    method: str
    cdo_verdict: Optional[bool] = None
    asserted: bool = True

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        object.__setattr__(self, "groups", tuple(self.groups))

    def same_groups(self, other: "CohomologyProfile") -> bool:
        return self.groups == other.groups

    def to_dict(self):
        return {
            "method": self.method,
            "asserted": self.asserted,
            "cdo": self.cdo_verdict,
            "groups": [g.to_dict() for g in self.groups],
        }

    def __str__(self):
        return ", ".join(f"H^{i}={g}" for i, g in enumerate(self.groups))


def beta_sequence(b: list[int]) -> list[int]:
    """beta_i = |b_0 - b_1 + ... + (-1)^i b_i|."""
    if not b or b[0] != 1:
        raise ValueError(f"Betti list must start with b_0 = 1, got {b}")
    out, acc = [], 0
    for k, bk in enumerate(b):
        acc += (-1) ** k * bk
        out.append(abs(acc))
    return out


def formula_groups(n: int, beta: list[int]) -> list[AbelianGroup]:
    """Evaluate the CDO cohomology formula for given beta values (beta_{-1} = 0)."""

    def bt(i):
        return beta[i] if 0 <= i < len(beta) else 0

    groups = []
    for i in range(n + 1):
        if i == n:
            groups.append(AbelianGroup(bt(n), (2,) * bt(n - 1)))
        elif i >= 1:
            groups.append(AbelianGroup(0, (2,) * bt(i - 1)))
        else:
            groups.append(AbelianGroup())
    return groups


def theorem_cohomology(arr: Arrangement, ls: SignLocalSystem, force: bool = False,
                       closure: Optional[ProjectiveClosure] = None) -> CohomologyProfile:
    """Cohomology from the Betti numbers alone; requires the CDO condition.

    With ``force=True`` the formula is evaluated anyway and the profile is
    marked ``asserted=False``.
    """
    ok, bad = cdo_check(arr, ls, closure)
    if not ok and not force:
        raise CDOViolation(bad)
    beta = beta_sequence(betti_numbers(intersection_poset(arr)))
    return CohomologyProfile(formula_groups(arr.dimension, beta), "theorem", ok, asserted=ok)


def lemma_central_cohomology(central: Arrangement, ls: SignLocalSystem) -> CohomologyProfile:
    if not central.is_central:
        raise HypothesisError("the arrangement is not central")
    if len(ls) != len(central):
        raise ValueError(f"local system has {len(ls)} signs for {len(central)} hyperplanes")
    if ls.t0 != -1:
        raise HypothesisError("the product of the monodromies must be -1")
    pb = projective_betti(central)
    n = central.dimension
    groups = [AbelianGroup()]
    for i in range(1, n + 1):
        k = pb[i - 1] if i - 1 < len(pb) else 0
        groups.append(AbelianGroup(0, (2,) * k))
    return CohomologyProfile(groups, "lemma", None)
