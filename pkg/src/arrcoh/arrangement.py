"""Affine rational hyperplane arrangements and their intersection posets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .core_math import AffineSubspace, rank, solve_intersection, to_fraction


@dataclass(frozen=True)
class Hyperplane:
    """The affine hyperplane ``normal . x = offset``."""

    normal: tuple
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(to_fraction(a) for a in self.normal))
        object.__setattr__(self, "offset", to_fraction(self.offset))
        if not any(self.normal):
            raise ValueError("hyperplane normal must be nonzero")

    def evaluate(self, x) -> Fraction:
        return sum((a * b for a, b in zip(self.normal, x)), Fraction(0)) - self.offset

    def contains(self, sub: AffineSubspace) -> bool:
        if self.evaluate(sub.point) != 0:
            return False
        return all(sum(a * b for a, b in zip(self.normal, v)) == 0 for v in sub.basis)

    def is_same_as(self, other: "Hyperplane") -> bool:
        a = self.normal + (self.offset,)
        b = other.normal + (other.offset,)
        return rank([a, b]) == 1


@dataclass(frozen=True)
class Arrangement:
    dimension: int
    hyperplanes: tuple = ()

    def __post_init__(self):
        hs = tuple(h if isinstance(h, Hyperplane) else Hyperplane(*h) for h in self.hyperplanes)
        for i, h in enumerate(hs):
            if len(h.normal) != self.dimension:
                raise ValueError(f"hyperplane {i} has {len(h.normal)} coefficients, expected {self.dimension}")
            for j in range(i):
                if h.is_same_as(hs[j]):
                    raise ValueError(f"hyperplanes {j} and {i} coincide")
        object.__setattr__(self, "hyperplanes", hs)

    @classmethod
    def from_rows(cls, rows):
        """``rows`` are ``(normal, offset)`` pairs; dimension is read off the first."""
        rows = list(rows)
        if not rows:
            raise ValueError("use Arrangement(n) for the empty arrangement")
        return cls(len(rows[0][0]), tuple(Hyperplane(a, c) for a, c in rows))

    def __len__(self):
        return len(self.hyperplanes)

    @property
    def normals(self):
        return [h.normal for h in self.hyperplanes]

    @property
    def is_central(self) -> bool:
        return all(h.offset == 0 for h in self.hyperplanes)

    @property
    def rank(self) -> int:
        return rank(self.normals) if self.hyperplanes else 0

    def subspace_of(self, indices) -> Optional[AffineSubspace]:
        hs = [self.hyperplanes[i] for i in indices]
        return solve_intersection([h.normal for h in hs], [h.offset for h in hs], n=self.dimension)

    def closure(self, sub: AffineSubspace) -> frozenset:
        return frozenset(i for i, h in enumerate(self.hyperplanes) if h.contains(sub))

    def permuted(self, order) -> "Arrangement":
        return Arrangement(self.dimension, tuple(self.hyperplanes[i] for i in order))


@dataclass(frozen=True)
class Flat:
    hyperplane_set: frozenset
    subspace: AffineSubspace
    codim: int

    @property
    def dim(self):
        return self.subspace.dim

    def sort_key(self):
        return (self.codim, sorted(self.hyperplane_set))


@dataclass
class IntersectionPoset:
    """Flats ordered by reverse inclusion, with Möbius values from the minimum."""

    arrangement: Arrangement
    flats: list
    covers: dict = field(default_factory=dict)  # flat index -> indices of flats it covers
    mobius: list = field(default_factory=list)

    @property
    def ambient(self) -> Flat:
        return self.flats[0]

    def index(self, hyperplane_set) -> int:
        key = frozenset(hyperplane_set)
        for i, f in enumerate(self.flats):
            if f.hyperplane_set == key:
                return i
        raise KeyError(f"no flat with hyperplane set {sorted(key)}")

    def leq(self, i, j) -> bool:
        """Y <= X: the subspace of X lies inside that of Y."""
        return self.flats[i].hyperplane_set <= self.flats[j].hyperplane_set

    def edges(self):
        return [f for f in self.flats if f.hyperplane_set]


def intersection_poset(arr: Arrangement) -> IntersectionPoset:
    n = arr.dimension
    ambient = solve_intersection([], [], n=n)
    by_set = {frozenset(): Flat(frozenset(), ambient, 0)}
    frontier = [by_set[frozenset()]]
    while frontier:
        nxt = []
        for flat in frontier:
            for i, h in enumerate(arr.hyperplanes):
                if i in flat.hyperplane_set:
                    continue
                sub = flat.subspace.meet_hyperplane(h.normal, h.offset)
                if sub is None:
                    continue
                closed = arr.closure(sub)
                if closed not in by_set:
                    new = Flat(closed, sub, n - sub.dim)
                    by_set[closed] = new
                    nxt.append(new)
        frontier = nxt
    flats = sorted(by_set.values(), key=Flat.sort_key)

    covers = {}
    for j, x in enumerate(flats):
        below = [i for i, y in enumerate(flats) if y.hyperplane_set < x.hyperplane_set]
        covers[j] = [i for i in below if flats[i].codim == x.codim - 1]

    # flats are sorted by codim so every strict predecessor has a smaller index
    mobius = []
    for j, x in enumerate(flats):
        if j == 0:
            mobius.append(1)
            continue
        mobius.append(-sum(mobius[i] for i, y in enumerate(flats[:j]) if y.hyperplane_set < x.hyperplane_set))
    return IntersectionPoset(arr, flats, covers, mobius)


def betti_numbers(poset: IntersectionPoset) -> list[int]:
    """Betti numbers of the complement, b_i = sum over codim-i flats of |mu|."""
    n = poset.arrangement.dimension
    b = [0] * (n + 1)
    for flat, mu in zip(poset.flats, poset.mobius):
        b[flat.codim] += abs(mu)
    return b


def cone(arr: Arrangement) -> tuple[Arrangement, int]:
    """Projective closure as a central arrangement in one more variable.

    The extra coordinate z is appended last. The hyperplane at infinity
    ``z = 0`` gets index 0 and the i-th input hyperplane gets index i + 1,
    so cone indices agree with the labels H_0, H_1, ..., H_d.
    """
    n = arr.dimension
    h0 = Hyperplane(tuple([0] * n + [1]), 0)
    lifted = [Hyperplane(h.normal + (-h.offset,), 0) for h in arr.hyperplanes]
    return Arrangement(n + 1, tuple([h0] + lifted)), 0


def localization(poset: IntersectionPoset, flat: Flat) -> list[tuple]:
    """Normals of the hyperplanes through ``flat``, in index order."""
    hs = poset.arrangement.hyperplanes
    return [hs[i].normal for i in sorted(flat.hyperplane_set)]


def poincare_divide(b: list[int]) -> list[int]:
    """Coefficients of ``P(t) / (1 + t)``; raises if the division leaves a remainder."""
    q = []
    carry = 0
    for coef in b[:-1]:
        carry = coef - carry
        q.append(carry)
    if not b or b[-1] != carry:
        raise ArithmeticError(f"Poincare polynomial {b} is not divisible by 1 + t")
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    return q


def projective_betti(central: Arrangement) -> list[int]:
    """Betti numbers of the projectivised complement of a central arrangement."""
    if not central.is_central:
        raise ValueError("projective_betti needs a central arrangement")
    if not central.hyperplanes:
        raise ValueError("the empty arrangement has no projectivised complement")
    b = betti_numbers(intersection_poset(central))
    while len(b) > 1 and b[-1] == 0:
        b.pop()
    return poincare_divide(b)
