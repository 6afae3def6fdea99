"""Dense edges of the projective closure and the CDO condition.

An edge is dense when the linear matroid on the normals of the hyperplanes
through it is connected. Connectivity is read off the fundamental circuits of
one basis: two elements share a component exactly when they are linked in the
bipartite basis/non-basis graph whose edges are the fundamental circuits.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Optional

from .arrangement import Arrangement, Flat, IntersectionPoset, cone, intersection_poset, localization
from .core_math import rank, rref, transpose


@dataclass(frozen=True)
class SignLocalSystem:
    """Rank-one Z local system given by the meridian monodromies t_1..t_d."""

    signs: tuple

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        if any(s not in (1, -1) for s in signs):
            raise ValueError(f"monodromies must be +1 or -1, got {signs}")
        object.__setattr__(self, "signs", signs)

    @property
    def t0(self) -> int:
        # the meridians sum to zero in H_1, and each sign is its own inverse
        return prod(self.signs)

    def __len__(self):
        return len(self.signs)

    def at(self, cone_index: int) -> int:
        """Monodromy around H_i with the cone's labels (0 is infinity)."""
        return self.t0 if cone_index == 0 else self.signs[cone_index - 1]

    @classmethod
    def trivial(cls, d):
        return cls((1,) * d)


@dataclass(frozen=True)
class DenseEdgeReport:
    edge: Flat
    t_value: Optional[int]
    at_infinity: bool

    @property
    def labels(self):
        return sorted(self.edge.hyperplane_set)

    @property
    def projective_dim(self):
        return self.edge.dim - 1

    def to_dict(self):
        return {
            "hyperplanes": self.labels,
            "projective_dimension": self.projective_dim,
            "at_infinity": self.at_infinity,
            "t": self.t_value,
        }


def matroid_components(normals) -> list[list[int]]:
    """Connected components of the linear matroid on ``normals``.

    Blocks are sorted lists of indices, ordered by smallest element.
    """
    vecs = [list(v) for v in normals]
    m = len(vecs)
    if m == 0:
        return []
    if any(not any(v) for v in vecs):
        raise ValueError("zero vectors (loops) are not allowed")
    # columns are the elements; reduced form expresses non-basis columns in the basis
    red, pivots = rref(transpose(vecs))
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(m):
        if e in pivots:
            continue
        for row, b in zip(red, pivots):
            if row[e] != 0:
                parent[find(e)] = find(b)
    blocks = {}
    for i in range(m):
        blocks.setdefault(find(i), []).append(i)
    return sorted(blocks.values(), key=lambda blk: blk[0])


def is_irreducible(normals) -> bool:
    if not normals:
        raise ValueError("irreducibility is undefined for an empty arrangement")
    return len(matroid_components(normals)) == 1


def bipartition_irreducible(normals, limit: int = 20) -> bool:
    """Brute-force irreducibility: no bipartition has additive rank."""
    m = len(normals)
    if m == 0:
        raise ValueError("irreducibility is undefined for an empty arrangement")
    if m > limit:
        raise ValueError(f"exhaustive bipartition search refused for {m} > {limit} elements")
    total = rank(normals)
    # element 0 stays on the left so each bipartition is visited once
    for mask in range(0, 1 << (m - 1)):
        left = [normals[0]] + [normals[i + 1] for i in range(m - 1) if not mask >> i & 1]
        right = [normals[i + 1] for i in range(m - 1) if mask >> i & 1]
        if not right:
            continue
        if rank(left) + rank(right) == total:
            return False
    return True


class ProjectiveClosure:
    """Cone of an affine arrangement with its poset, built once and queried."""

    def __init__(self, arr: Arrangement):
        self.arrangement = arr
        self.cone, self.infinity = cone(arr)
        self.poset: IntersectionPoset = intersection_poset(self.cone)

    def projective_edges(self):
        """Cone flats with nonempty projectivisation (the origin-only flat is dropped)."""
        return [f for f in self.poset.flats if f.hyperplane_set and f.dim >= 1]

    def dense_edges(self, at_infinity_only=True, ls: Optional[SignLocalSystem] = None):
        out = []
        for f in self.projective_edges():
            inf = self.infinity in f.hyperplane_set
            if at_infinity_only and not inf:
                continue
            if not is_irreducible(localization(self.poset, f)):
                continue
            t = edge_monodromy(f, ls) if ls is not None else None
            out.append(DenseEdgeReport(f, t, inf))
        return out


def dense_edges_at_infinity(arr: Arrangement, ls: Optional[SignLocalSystem] = None) -> list[DenseEdgeReport]:
    return ProjectiveClosure(arr).dense_edges(True, ls)


def edge_monodromy(edge: Flat, ls: SignLocalSystem) -> int:
    """t_X: product of the monodromies of every H_i (i = 0 allowed) through the edge."""
    return prod(ls.at(i) for i in edge.hyperplane_set)


def cdo_check(arr, ls: SignLocalSystem, closure: Optional[ProjectiveClosure] = None):
    """Return ``(passes, violations)``; violations are the dense edges at infinity with t_X = +1."""
    if len(ls) != len(arr):
        raise ValueError(f"local system has {len(ls)} signs for {len(arr)} hyperplanes")
    closure = closure or ProjectiveClosure(arr)
    bad = [r for r in closure.dense_edges(True, ls) if r.t_value == 1]
    return not bad, bad
