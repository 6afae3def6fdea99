"""Salvetti complex of a complexified real arrangement, twisted by a sign local system.

Cells are pairs ``(C, F)`` of a chamber C and a face F in its closure; the
cell has dimension codim F. Its facets are the cells ``(G o C, G)`` for the
faces G covering F, where ``G o C`` is the chamber next to G on the side of
C. The complex is regular, so incidence numbers are obtained by propagating
orientations through each cell boundary instead of from a closed formula.

The local system is transported along positive minimal paths in the
1-skeleton: crossing hyperplane i from its negative side costs t_i, crossing
from the positive side costs 1. The loop formed by the two edges through a
wall of H_i therefore has monodromy t_i, and transport is multiplicative
along nested faces, which keeps the twisted boundary a complex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Optional

from .arrangement import Arrangement, intersection_poset
from .core_math import AbelianGroup, ComplexError, cohomology_of_pair, is_zero, matmul, rank_mod_p, smith_normal_form
from .density import SignLocalSystem
from .engine import CohomologyProfile

DEFAULT_MAX_CELLS = 6000


class OracleUnavailable(RuntimeError):
    """The input is outside what the Salvetti oracle can handle."""


@dataclass(frozen=True)
class Face:
    sign_vector: tuple
    dim: int
    witness: tuple

    @property
    def is_chamber(self):
        return all(self.sign_vector)

    def __le__(self, other: "Face"):
        """Face order: self lies in the closure of other."""
        return all(s == 0 or s == o for s, o in zip(self.sign_vector, other.sign_vector))


@dataclass(frozen=True)
class SalvettiCell:
    chamber: tuple
    face: tuple
    dim: int


def compose(g, c):
    """Sign vector of the chamber met by leaving face g towards c."""
    return tuple(gi if gi else ci for gi, ci in zip(g, c))


def strict_feasible_point(constraints, k: int) -> Optional[list[Fraction]]:
    """Find y in Q^k with ``a . y + b > 0`` for every ``(a, b)``, or None.

    Fourier-Motzkin elimination with back substitution; exact.
    """
    if k == 0:
        return [] if all(b > 0 for _, b in constraints) else None
    lower, upper, rest = [], [], []
    for a, b in constraints:
        c = a[-1]
        head = list(a[:-1])
        if c > 0:
            # y_k > -(head . y + b) / c
            lower.append(([-x / c for x in head], -b / c))
        elif c < 0:
            # y_k < (head . y + b) / -c
            upper.append(([x / -c for x in head], b / -c))
        else:
            rest.append((head, b))
    for la, lb in lower:
        for ua, ub in upper:
            rest.append(([u - l for u, l in zip(ua, la)], ub - lb))
    sub = strict_feasible_point(rest, k - 1)
    if sub is None:
        return None

    def ev(form):
        a, b = form
        return sum((x * y for x, y in zip(a, sub)), b)

    lo = max((ev(f) for f in lower), default=None)
    hi = min((ev(f) for f in upper), default=None)
    if lo is None and hi is None:
        last = Fraction(0)
    elif hi is None:
        last = lo + 1
    elif lo is None:
        last = hi - 1
    else:
        last = (lo + hi) / 2
    return sub + [last]


def enumerate_faces(arr: Arrangement) -> list[Face]:
    """All faces of the real stratification, each with a rational witness point.

    Faces are grouped by the flat they span: inside each flat the remaining
    hyperplanes cut out open chambers, found by splitting regions one
    hyperplane at a time.
    """
    hs = arr.hyperplanes
    faces = []
    for flat in intersection_poset(arr).flats:
        p, basis = flat.subspace.point, flat.subspace.basis
        k = len(basis)
        others = []
        for i, h in enumerate(hs):
            if i in flat.hyperplane_set:
                continue
            coeffs = [sum(a * v for a, v in zip(h.normal, b)) for b in basis]
            others.append((i, coeffs, h.evaluate(p)))
        regions = [({}, [], [Fraction(0)] * k)]
        for i, coeffs, const in others:
            split = []
            for signs, cons, _ in regions:
                for s in (1, -1):
                    c2 = cons + [([s * x for x in coeffs], s * const)]
                    y = strict_feasible_point(c2, k)
                    if y is not None:
                        split.append(({**signs, i: s}, c2, y))
            regions = split
        for signs, _, y in regions:
            x = tuple(pi + sum((yj * b[t] for yj, b in zip(y, basis)), Fraction(0)) for t, pi in enumerate(p))
            sv = tuple(signs.get(i, 0) for i in range(len(hs)))
            faces.append(Face(sv, k, x))
    faces.sort(key=lambda f: (-f.dim, f.sign_vector))
    return faces


def _face_covers(faces):
    """For every face, the faces of one dimension higher having it in their closure."""
    by_dim = {}
    for f in faces:
        by_dim.setdefault(f.dim, []).append(f)
    return {f.sign_vector: [g.sign_vector for g in by_dim.get(f.dim + 1, []) if f <= g] for f in faces}


class SalvettiComplex:
    """Cells and oriented untwisted incidences; twist on demand with :meth:`twisted`."""

    def __init__(self, arr: Arrangement, max_cells: int = DEFAULT_MAX_CELLS):
        self.arrangement = arr
        self.n = arr.dimension
        self.faces = enumerate_faces(arr)
        self.chambers = [f.sign_vector for f in self.faces if f.is_chamber]
        total = sum(1 for f in self.faces for c in self.chambers if f <= Face(c, self.n, ()))
        if total > max_cells:
            raise OracleUnavailable(f"Salvetti complex would have {total} cells (limit {max_cells})")
        self.cells = build_salvetti(self.faces)
        self.index = [{(c.chamber, c.face): j for j, c in enumerate(cs)} for cs in self.cells]
        self.boundary = self._orient()

    def _orient(self):
        """Untwisted boundary as ``boundary[k][j] = {facet index: +-1}`` for k-cells."""
        covers = _face_covers(self.faces)
        bd = [[{} for _ in self.cells[0]]]
        for k in range(1, self.n + 1):
            layer = []
            for cell in self.cells[k]:
                facets = [self.index[k - 1][(compose(g, cell.chamber), g)] for g in covers[cell.face]]
                if k == 1:
                    # an edge runs from its own chamber to the opposite one
                    a, b = facets
                    if self.cells[0][a].chamber == cell.chamber:
                        layer.append({a: -1, b: 1})
                    else:
                        layer.append({a: 1, b: -1})
                    continue
                layer.append(_propagate_orientation(facets, bd[k - 1]))
            bd.append(layer)
        return bd

    def cell_counts(self):
        return [len(cs) for cs in self.cells]

    def twisted(self, ls: SignLocalSystem) -> "TwistedComplex":
        if len(ls) != len(self.arrangement):
            raise ValueError(f"local system has {len(ls)} signs for {len(self.arrangement)} hyperplanes")
        t = ls.signs
        cobs = []
        for k in range(self.n):
            # coboundary from k-cochains to (k+1)-cochains is the transposed boundary
            rows = []
            for j, cell in enumerate(self.cells[k + 1]):
                row = [0] * len(self.cells[k])
                for f, eps in self.boundary[k + 1][j].items():
                    row[f] = eps * transport(cell.chamber, self.cells[k][f].chamber, t)
                rows.append(row)
            cobs.append(rows)
        return TwistedComplex(self.cell_counts(), cobs)


def _propagate_orientation(facets, lower):
    """Signs eps_f with sum eps_f * boundary(f) = 0, fixed by eps = +1 on the first facet."""
    where = {}
    for f in facets:
        for g in lower[f]:
            where.setdefault(g, []).append(f)
    eps = {facets[0]: 1}
    queue = deque([facets[0]])
    while queue:
        f = queue.popleft()
        for g, s in lower[f].items():
            pair = where[g]
            if len(pair) != 2:
                raise ComplexError(f"cell boundary is not a pseudomanifold at {g}")
            other = pair[0] if pair[1] == f else pair[1]
            want = -eps[f] * s * lower[other][g]
            if other in eps:
                if eps[other] != want:
                    raise ComplexError("inconsistent orientation in a cell boundary")
            else:
                eps[other] = want
                queue.append(other)
    if len(eps) != len(facets):
        raise ComplexError("cell boundary is disconnected")
    return {f: eps[f] for f in facets}


def transport(src, dst, t) -> int:
    """Monodromy along a positive minimal path between chambers."""
    return prod(ti for si, di, ti in zip(src, dst, t) if si != di and si < 0)


def build_salvetti(faces) -> list[list[SalvettiCell]]:
    """Cells grouped by dimension; k-cells are (chamber, face) pairs with codim face = k."""
    if not faces:
        return [[]]
    n = max(f.dim for f in faces)
    chambers = [f for f in faces if f.is_chamber]
    cells = [[] for _ in range(n + 1)]
    for f in faces:
        k = n - f.dim
        for c in chambers:
            if f <= c:
                cells[k].append(SalvettiCell(c.sign_vector, f.sign_vector, k))
    for cs in cells:
        cs.sort(key=lambda c: (c.face, c.chamber))
    return cells


@dataclass
class TwistedComplex:
    """Cochain complex ``C^0 -> C^1 -> ... -> C^n`` of free abelian groups."""

    counts: list
    coboundaries: list  # coboundaries[k] is the matrix of C^k -> C^{k+1}

    def _map(self, k):
        if 0 <= k < len(self.coboundaries):
            return self.coboundaries[k]
        return []

    def check(self):
        for k in range(len(self.coboundaries) - 1):
            a, b = self.coboundaries[k], self.coboundaries[k + 1]
            if a and b and a[0] and not is_zero(matmul(b, a)):
                raise ComplexError(f"coboundary composition nonzero in degree {k}")

    def is_complex(self) -> bool:
        try:
            self.check()
        except ComplexError:
            return False
        return True

    def cohomology(self) -> list[AbelianGroup]:
        return [cohomology_of_pair(self._map(k - 1), self._map(k), dim=self.counts[k]) for k in range(len(self.counts))]

    def ranks(self, p: Optional[int] = None):
        """Ranks of the coboundaries over Q (p=None) or GF(p)."""
        out = []
        for m in self.coboundaries:
            if not m or not m[0]:
                out.append(0)
            elif p is None:
                out.append(len(smith_normal_form(m)))
            else:
                out.append(rank_mod_p(m, p))
        return out

    def betti(self, p: Optional[int] = None) -> list[int]:
        r = self.ranks(p)
        return [self.counts[k] - (r[k] if k < len(r) else 0) - (r[k - 1] if k >= 1 else 0)
                for k in range(len(self.counts))]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * b for k, b in enumerate(self.betti()))


def twisted_coboundaries(cells_or_complex, ls: SignLocalSystem) -> TwistedComplex:
    if isinstance(cells_or_complex, Arrangement):
        cells_or_complex = SalvettiComplex(cells_or_complex)
    return cells_or_complex.twisted(ls)


def oracle_cohomology(arr: Arrangement, ls: SignLocalSystem,
                      complex_: Optional[SalvettiComplex] = None) -> CohomologyProfile:
    sc = complex_ or SalvettiComplex(arr)
    tc = sc.twisted(ls)
    try:
        tc.check()
    except ComplexError as exc:
        raise ComplexError(f"internal error, twisted Salvetti complex is broken: {exc}") from exc
    return CohomologyProfile(tc.cohomology(), "oracle", None)
