"""Intersection lattices of central arrangements of rank at most 3.

Hyperplanes are given by their normal vectors in Q^n (n = 2 or 3). A flat
is identified with the set of hyperplanes containing it, so the lattice is
built from exact rank computations only and never needs the coordinates of
an intersection point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .arrgeo import normalize_point
from .exactla import QMatrix, kernel_basis, rank
from .invariants import QuadraticPoly
from .qpoly import TriPoly


@dataclass(frozen=True)
class LineArrangement:
    """Central arrangement given by normal vectors (lines in P^2 when n = 3)."""

    lines: tuple

    def __post_init__(self):
        vecs = tuple(tuple(Fraction(c) for c in v) for v in self.lines)
        if vecs and len({len(v) for v in vecs}) != 1:
            raise ValueError("normal vectors of different lengths")
        for v in vecs:
            if not any(v):
                raise ValueError("zero normal vector")
        for u, v in combinations(vecs, 2):
            if _rank([u, v]) < 2:
                raise ValueError(f"proportional hyperplanes {u} and {v}")
        object.__setattr__(self, "lines", vecs)

    @classmethod
    def from_polys(cls, polys) -> "LineArrangement":
        vecs = []
        for p in polys:
            if not isinstance(p, TriPoly) or p.degree() != 1 or not p.is_homogeneous():
                raise ValueError(f"not a line: {p}")
            vecs.append(tuple(p.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
        return cls(tuple(vecs))

    @property
    def dim(self) -> int:
        return len(self.lines[0]) if self.lines else 0

    def __len__(self):
        return len(self.lines)


@dataclass(frozen=True)
class Flat:
    rank: int
    members: frozenset
    mobius: int
    point: tuple | None = None


def _rank(vectors) -> int:
    if not vectors:
        return 0
    return rank(QMatrix.from_rows([list(v) for v in vectors]))


def _closure(lines, members) -> frozenset:
    base = [lines[i] for i in members]
    r = _rank(base)
    return frozenset(
        k for k in range(len(lines)) if k in members or _rank(base + [lines[k]]) == r
    )


def build_lattice(arr: LineArrangement) -> list:
    """All flats with Möbius values, ordered by rank.

    Möbius values come from the recursion mu(X) = -sum of mu(Y) over flats
    Y strictly below X (a flat Y lies below X iff its member set is
    contained in that of X).
    """
    if not len(arr):
        raise ValueError("empty arrangement")
    lines = arr.lines
    n = len(lines)
    by_rank = {0: {frozenset()}}
    by_rank[1] = {frozenset([i]) for i in range(n)}
    top = _rank(list(lines))
    for k in range(2, top + 1):
        found = set()
        for lower in by_rank[k - 1]:
            for i in range(n):
                if i not in lower:
                    cl = _closure(lines, lower | {i})
                    if _rank([lines[j] for j in cl]) == k:
                        found.add(cl)
        by_rank[k] = found
    flats: list = []
    mobius: dict = {}
    for k in sorted(by_rank):
        for members in sorted(by_rank[k], key=sorted):
            below = sum(mu for m, mu in mobius.items() if m < members)
            mu = 1 if k == 0 else -below
            mobius[members] = mu
            point = None
            if k == 2 and arr.dim == 3:
                point = _intersection_point(lines, members)
            flats.append(Flat(k, members, mu, point))
    return flats


def _intersection_point(lines, members):
    (v,) = kernel_basis(QMatrix.from_rows([list(lines[i]) for i in sorted(members)]))
    return normalize_point(v)


def pi_poly(arr: LineArrangement) -> QuadraticPoly:
    """Sum of mu(X) (-t)^rank(X) over all flats."""
    coeffs = [0] * 4
    for flat in build_lattice(arr):
        coeffs[flat.rank] += flat.mobius * (-1) ** flat.rank
    p = QuadraticPoly(tuple(coeffs))
    if any(c < 0 for c in p.coefficients):
        raise AssertionError(f"negative coefficient in Poincaré polynomial {p}")
    return p


def deletion(arr: LineArrangement, h0: int) -> LineArrangement:
    return LineArrangement(tuple(v for i, v in enumerate(arr.lines) if i != h0))


def restriction(arr: LineArrangement, h0: int) -> LineArrangement:
    """Arrangement cut out on H0 by the other hyperplanes, duplicates merged.

    H0 is identified with Q^(n-1) through a basis of its points; each other
    hyperplane restricts to the linear form v -> <normal, basis vector>.
    """
    basis = kernel_basis(QMatrix.from_rows([list(arr.lines[h0])]))
    restricted = []
    for i, v in enumerate(arr.lines):
        if i == h0:
            continue
        w = tuple(sum(a * b for a, b in zip(v, p)) for p in basis)
        if not any(w):
            continue  # cannot happen for non-proportional normals
        if all(_rank([w, u]) == 2 for u in restricted):
            restricted.append(w)
    return LineArrangement(tuple(restricted))


def _pi_or_one(arr: LineArrangement) -> QuadraticPoly:
    return pi_poly(arr) if len(arr) else QuadraticPoly.of(1)


def deletion_restriction_sides(arr: LineArrangement, h0: int) -> tuple:
    """(pi(A), pi(A') + t pi(A''))."""
    if len(arr) < 2:
        raise ValueError("deletion-restriction needs at least two hyperplanes")
    lhs = pi_poly(arr)
    rhs = _pi_or_one(deletion(arr, h0)) + QuadraticPoly.of(0, 1) * _pi_or_one(restriction(arr, h0))
    return lhs, rhs


def deletion_restriction_check(arr: LineArrangement, h0: int) -> bool:
    lhs, rhs = deletion_restriction_sides(arr, h0)
    return lhs == rhs
