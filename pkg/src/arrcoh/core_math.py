"""Exact linear algebra over Q and Z.

Rationals are :class:`fractions.Fraction`; matrices are plain lists of rows.
Nothing in here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence


class ComplexError(ValueError):
    """Raised when a pair of coboundary maps does not compose to zero."""


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^rank + sum of Z/t for t in torsion."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        tors = tuple(int(t) for t in self.torsion)
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if any(t < 2 for t in tors):
            raise ValueError(f"torsion coefficients must be >= 2, got {tors}")
        for a, b in zip(tors, tors[1:]):
            if b % a:
                raise ValueError(f"torsion {tors} is not an invariant-factor chain")
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def from_invariants(cls, rank, factors):
        """Build from arbitrary diagonal entries, dropping units and re-normalising."""
        return cls(rank, tuple(_invariant_chain([abs(f) for f in factors if abs(f) > 1])))

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def to_dict(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        for t in sorted(set(self.torsion)):
            k = self.torsion.count(t)
            parts.append(f"Z_{t}" if k == 1 else f"Z_{t}^{k}")
        return " + ".join(parts)


def _invariant_chain(values):
    """Turn a multiset of positive integers into the invariant-factor chain
    of the same finite group (prime-power regrouping)."""
    if not values:
        return []
    values = list(values)
    # repeatedly enforce divisibility via gcd/lcm swaps; terminates since the
    # sorted sequence increases lexicographically in a finite set
    changed = True
    while changed:
        changed = False
        values.sort()
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                a, b = values[i], values[j]
                if b % a:
                    g = gcd(a, b)
                    values[i], values[j] = g, a * b // g
                    changed = True
    return [v for v in sorted(values) if v > 1]


def to_fraction(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass int, Fraction or 'p/q' strings")
    return Fraction(value)


def rref(m: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (matrix, pivot columns)."""
    a = [[to_fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q."""
    if not m or not len(m[0]):
        return 0
    return len(rref(m)[1])


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def nullspace(m: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : m x = 0} in Q^ncols."""
    if not m:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class AffineSubspace:
    """``{point + span(basis)}`` with exact rational data."""

    point: tuple
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    @property
    def ambient_dim(self):
        return len(self.point)

    def contains_point(self, x) -> bool:
        diff = [a - b for a, b in zip(x, self.point)]
        if not any(diff):
            return True
        if not self.basis:
            return False
        return rank(list(self.basis) + [diff]) == len(self.basis)

    def contains(self, other: "AffineSubspace") -> bool:
        if not self.contains_point(other.point):
            return False
        if not other.basis:
            return True
        return rank(list(self.basis) + list(other.basis)) == len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        return self.dim == other.dim and self.contains(other)

    def __hash__(self):
        return hash((self.ambient_dim, self.dim))

    def meet_hyperplane(self, normal, offset) -> Optional["AffineSubspace"]:
        """Intersection with ``normal . x = offset``; None if empty.

        Returns self unchanged when the subspace already lies in the hyperplane.
        """
        coeffs = [sum((a * v for a, v in zip(normal, b)), Fraction(0)) for b in self.basis]
        rhs = offset - sum((a * x for a, x in zip(normal, self.point)), Fraction(0))
        piv = next((j for j, c in enumerate(coeffs) if c != 0), None)
        if piv is None:
            return self if rhs == 0 else None
        # move along basis[piv] to hit the hyperplane, then project the other directions
        bp = self.basis[piv]
        step = rhs / coeffs[piv]
        point = tuple(x + step * v for x, v in zip(self.point, bp))
        basis = []
        for j, b in enumerate(self.basis):
            if j == piv:
                continue
            f = coeffs[j] / coeffs[piv]
            basis.append(tuple(x - f * v for x, v in zip(b, bp)))
        return AffineSubspace(point, tuple(basis))


def solve_intersection(hyperplane_rows, offsets, n=None) -> Optional[AffineSubspace]:
    """Solve ``rows . x = offsets``; None when infeasible.

    ``n`` is needed only when there are no rows.
    """
    rows = [[to_fraction(x) for x in r] for r in hyperplane_rows]
    offs = [to_fraction(c) for c in offsets]
    if len(rows) != len(offs):
        raise ValueError("one offset per hyperplane row is required")
    if n is None:
        if not rows:
            raise ValueError("ambient dimension needed for an empty system")
        n = len(rows[0])
    if not rows:
        return AffineSubspace(tuple([Fraction(0)] * n), tuple(tuple(v) for v in nullspace([], n)))
    aug = [r + [c] for r, c in zip(rows, offs)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    point = [Fraction(0)] * n
    for row, pc in zip(red, pivots):
        point[pc] = row[n]
    basis = nullspace(rows, n)
    return AffineSubspace(tuple(point), tuple(tuple(v) for v in basis))


def _smith_diagonal(a: list[list[int]]) -> list[int]:
    """Diagonalise in place by unimodular moves (smallest-pivot strategy).

    The result is diagonal but not yet a divisibility chain.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        best = None
        for i in range(t, rows):
            row = a[i]
            for j in range(t, cols):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                v = a[i][t]
                if v:
                    q = v // p
                    if q:
                        ri, rt = a[i], a[t]
                        for j in range(t, cols):
                            if rt[j]:
                                ri[j] -= q * rt[j]
                    if a[i][t]:
                        dirty = True
            rt = a[t]
            for j in range(t + 1, cols):
                v = rt[j]
                if v:
                    q = v // p
                    if q:
                        for i in range(t, rows):
                            if a[i][t]:
                                a[i][j] -= q * a[i][t]
                    if rt[j]:
                        dirty = True
            if not dirty:
                break
            # a remainder smaller than the pivot survived; move it to the pivot
            best = None
            for i in range(t + 1, rows):
                v = a[i][t]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, "r")
            for j in range(t + 1, cols):
                v = a[t][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), j, "c")
            _, k, kind = best
            if kind == "r":
                a[t], a[k] = a[k], a[t]
            else:
                for row in a:
                    row[t], row[k] = row[k], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_normal_form(a: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    work = [[int(x) for x in row] for row in a]
    diag = _smith_diagonal(work)
    chain = _invariant_chain(diag)
    ones = len(diag) - len(chain)
    return [1] * ones + chain


def matmul(a, b):
    """Dense product; skips zero entries of ``a``, which are the common case here."""
    width = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * width
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def is_zero(m) -> bool:
    return all(not x for row in m for x in row)


def cohomology_of_pair(d_in, d_out, dim: Optional[int] = None) -> AbelianGroup:
    """``ker(d_out) / im(d_in)`` for maps ``Z^a --d_in--> Z^dim --d_out--> Z^b``.

    Matrices act on column vectors: ``d_in`` is dim x a, ``d_out`` is b x dim.
    Either map may be an empty list (zero map from/to Z^0); ``dim`` is then
    taken from the other one or must be passed.
    """
    if dim is None:
        if d_in:
            dim = len(d_in)
        elif d_out:
            dim = len(d_out[0])
        else:
            raise ValueError("cannot infer the middle dimension")
    if d_in and len(d_in) != dim:
        raise ValueError("d_in has the wrong number of rows")
    if d_out and len(d_out[0]) != dim:
        raise ValueError("d_out has the wrong number of columns")
    if d_in and d_out and d_in[0] and not is_zero(matmul(d_out, d_in)):
        raise ComplexError("d_out . d_in != 0")
    out_rank = len(smith_normal_form(d_out)) if d_out else 0
    inv = smith_normal_form(d_in) if d_in and d_in[0] else []
    free = dim - out_rank - len(inv)
    return AbelianGroup.from_invariants(free, inv)


def rank_mod_p(m, p: int = 2) -> int:
    """Rank of an integer matrix over GF(p)."""
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r
