"""Curves given by components, intersection counting and singularities of line/conic arrangements.

Two independent routes are provided:

* the resultant route works for any pair of reduced curves and only counts
  points (after random linear changes of coordinates);
* the combinatorial route needs every component to be a line or a smooth
  conic with all pairwise intersections rational, and in exchange knows
  each singular point, its branches and its local Milnor/Tjurina number.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations

import flint

from .exactla import QMatrix, kernel_basis
from .milnor import check_reduced
from .qpoly import (
    TriPoly,
    apply_linear_change,
    det3,
    gradient,
    integer_content_normalize,
    poly_gcd,
    product,
    resultant_wrt,
    root_multiplicities,
)


class CurveError(ValueError):
    pass


class CommonComponentError(CurveError):
    pass


class UnsupportedCurveError(CurveError):
    """A component is not a line or a smooth conic."""


class IrrationalPointError(CurveError):
    """An intersection point has irrational coordinates."""


class UnsupportedSingularityError(CurveError):
    def __init__(self, point, message="unsupported singularity"):
        self.point = point
        super().__init__(f"{message} at {format_point(point)}")


class GenericityError(RuntimeError):
    pass


@dataclass(frozen=True)
class Curve:
    """A reduced plane curve given as a list of components.

    Each component is asserted (not checked) to be irreducible over C. With
    ``raw=True`` the single component is an arbitrary reduced polynomial and
    the number of irreducible components is ``e`` (possibly unknown).
    """

    components: tuple
    name: str = ""
    raw: bool = False
    e: int | None = None
    quasi_homogeneous: bool = False

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise CurveError("a curve needs at least one component")
        if self.raw and len(comps) != 1:
            raise CurveError("a raw curve is given by a single polynomial")
        seen = set()
        for c in comps:
            if not isinstance(c, TriPoly) or c.is_zero() or not c.is_homogeneous() or c.degree() < 1:
                raise CurveError(f"component is not a nonconstant homogeneous polynomial: {c}")
            key = integer_content_normalize(c)
            if key in seen:
                raise CurveError(f"repeated component: {c}")
            seen.add(key)
        if self.e is not None and not 1 <= self.e <= self.degree:
            raise CurveError(f"component count e={self.e} incompatible with degree {self.degree}")
        check_reduced(self.defining_poly)

    @cached_property
    def defining_poly(self) -> TriPoly:
        return product(self.components)

    @property
    def degree(self) -> int:
        return sum(c.degree() for c in self.components)

    @property
    def num_components(self) -> int | None:
        if self.raw:
            return self.e
        return len(self.components)

    def union(self, other: "Curve", name: str = "") -> "Curve":
        if self.raw or other.raw:
            e = None
            if self.num_components is not None and other.num_components is not None:
                e = self.num_components + other.num_components
            return Curve((self.defining_poly * other.defining_poly,), name=name, raw=True, e=e,
                         quasi_homogeneous=self.quasi_homogeneous and other.quasi_homogeneous)
        return Curve(self.components + other.components, name=name,
                     quasi_homogeneous=self.quasi_homogeneous and other.quasi_homogeneous)

    def is_line_arrangement(self) -> bool:
        return not self.raw and all(c.degree() == 1 for c in self.components)


@dataclass(frozen=True)
class SingularPoint:
    coords: tuple
    branches: tuple  # component indices through the point
    mult_m: int
    pairwise_intersection_indices: dict  # (i, j) -> i_p
    local_milnor: int | None
    local_tjurina: int | None
    kind: str  # "ordinary", "tacnode_A3" or "unsupported"


@dataclass(frozen=True)
class IntersectionReport:
    r_distinct_points: int
    per_point_multiplicities: tuple
    method: str
    points: tuple | None = None  # combinatorial route only
    point_indices: tuple | None = None  # i_p, aligned with points


# -- points ---------------------------------------------------------------

def normalize_point(v) -> tuple:
    """Projective point scaled so its first nonzero coordinate is 1."""
    v = [Fraction(c) for c in v]
    for c in v:
        if c:
            out = [x / c for x in v]
            return tuple(x.numerator if x.denominator == 1 else x for x in out)
    raise ValueError("the zero vector is not a projective point")


def format_point(p) -> str:
    return "(" + " : ".join(str(c) for c in p) + ")"


def _mat_vec(m, v):
    return [sum(Fraction(m[i][j]) * v[j] for j in range(3)) for i in range(3)]


def line_coefficients(line: TriPoly) -> tuple:
    return tuple(line.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def _is_smooth_conic(q: TriPoly) -> bool:
    a = q.coeff((2, 0, 0))
    b = q.coeff((0, 2, 0))
    c = q.coeff((0, 0, 2))
    h = Fraction(q.coeff((1, 1, 0)), 2)
    g = Fraction(q.coeff((1, 0, 1)), 2)
    f = Fraction(q.coeff((0, 1, 1)), 2)
    return det3([[a, h, g], [h, b, f], [g, f, c]]) != 0


def _check_supported(c: TriPoly) -> None:
    d = c.degree()
    if d == 1:
        return
    if d == 2 and _is_smooth_conic(c):
        return
    if d == 2:
        raise UnsupportedCurveError(f"singular conic {c} given as a component")
    raise UnsupportedCurveError(f"component of degree {d} is outside the line/conic vocabulary: {c}")


# -- rational roots of binary forms ---------------------------------------

def binary_rational_roots(form: TriPoly) -> list:
    """Roots (s : t) with multiplicities of a binary form in x, y (z absent).

    Raises IrrationalPointError unless the form splits into rational
    linear factors.
    """
    if form.is_zero():
        raise CommonComponentError("restriction vanishes identically")
    if 2 in form.variables() or not form.is_homogeneous():
        raise ValueError("expected a binary form in x and y")
    n = form.degree()
    # u = x / y; coefficient of u^k is that of x^k y^(n-k)
    f = integer_content_normalize(form)
    coeffs = [int(f.coeff((k, n - k, 0))) for k in range(n + 1)]
    top = max(k for k in range(n + 1) if coeffs[k])
    roots = []
    if top < n:
        roots.append(((1, 0), n - top))  # root y = 0, i.e. the point (1 : 0)
    if top > 0:
        _, factors = flint.fmpz_poly(coeffs[: top + 1]).factor()
        for fac, mult in factors:
            if fac.degree() != 1:
                raise IrrationalPointError("intersection point with irrational coordinates")
            b, a = (int(c) for c in fac.coeffs())
            roots.append(((-b, a), int(mult)))  # a u + b = 0
    return roots


def _complete_basis(line: TriPoly):
    a = line_coefficients(line)
    p, q = kernel_basis(QMatrix.from_rows([list(a)]))
    return p, q, [Fraction(v) for v in a]


def _line_intersections(line: TriPoly, other: TriPoly) -> list:
    """Points of line ∩ other with intersection multiplicities."""
    p, q, r = _complete_basis(line)
    m = [[p[i], q[i], r[i]] for i in range(3)]
    restricted = apply_linear_change(other, m)
    form = TriPoly({e: c for e, c in restricted.items() if e[2] == 0})
    if form.is_zero():
        raise CommonComponentError(f"{line} is a component of {other}")
    out = []
    for (s, t), mult in binary_rational_roots(form):
        out.append((normalize_point([s * p[i] + t * q[i] for i in range(3)]), mult))
    return out


def _conic_intersections(f: TriPoly, g: TriPoly, seed: int = 0, tries: int = 40) -> list:
    """Points of two conics with multiplicities, by projecting from a generic centre."""
    rng = random.Random(seed)
    candidates = [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]
    while len(candidates) < tries:
        m = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
        if det3(m):
            candidates.append(m)
    for m in candidates:
        centre = [m[0][2], m[1][2], m[2][2]]
        if f.evaluate(centre) == 0 or g.evaluate(centre) == 0:
            continue
        fm = apply_linear_change(f, m)
        gm = apply_linear_change(g, m)
        res = resultant_wrt(fm, gm, "z")
        if res.is_zero():
            raise CommonComponentError("conics share a component")
        found = []
        generic = True
        for (x0, y0), mult in binary_rational_roots(res):
            ray = TriPoly.linear(y0, -x0, 0)
            try:
                on_ray = [pt for pt, _ in _line_intersections(ray, fm)]
            except IrrationalPointError:
                generic = False
                break
            common = [pt for pt in set(on_ray) if gm.evaluate(pt) == 0]
            if len(common) != 1:
                generic = False
                break
            found.append((normalize_point(_mat_vec(m, common[0])), mult))
        if generic:
            return found
    raise GenericityError("no generic projection centre found for conic intersection")


def pair_intersections(f: TriPoly, g: TriPoly) -> list:
    """Intersection points (rational) of two lines/smooth conics with indices."""
    if f.degree() == 1:
        return _line_intersections(f, g)
    if g.degree() == 1:
        return _line_intersections(g, f)
    return _conic_intersections(f, g)


def tangent_line(component: TriPoly, point) -> tuple:
    grad = [p.evaluate(point) for p in gradient(component)]
    return normalize_point(grad)


# -- combinatorial route --------------------------------------------------

def _incidences(components, pairs) -> dict:
    points: dict = {}
    for i, j in pairs:
        for pt, idx in pair_intersections(components[i], components[j]):
            rec = points.setdefault(pt, {"branches": set(), "pairs": {}})
            rec["branches"].update((i, j))
            rec["pairs"][(i, j)] = idx
    return points


def classify_singularities(curve: Curve, strict: bool = True) -> list:
    """Singular points of a line/conic arrangement, sorted by coordinates.

    Ordinary m-fold points get mu = tau = (m-1)^2 when they are known to be
    quasi-homogeneous (m <= 4, or all branches lines) and simple tangencies
    of two branches (A3) get mu = tau = 3. Anything else raises
    UnsupportedSingularityError, or is returned with kind "unsupported"
    when strict is false (keeping mu = (m-1)^2 for ordinary points, where
    it is still exact).
    """
    if curve.raw:
        raise UnsupportedCurveError("raw polynomial input has no component structure")
    comps = curve.components
    for c in comps:
        _check_supported(c)
    points = _incidences(comps, combinations(range(len(comps)), 2))
    out = []
    for pt in sorted(points, key=lambda p: tuple(map(Fraction, p))):
        rec = points[pt]
        branches = tuple(sorted(rec["branches"]))
        m = len(branches)
        indices = dict(sorted(rec["pairs"].items()))
        tangents = [tangent_line(comps[i], pt) for i in branches]
        distinct = len(set(tangents)) == m
        all_lines = all(comps[i].degree() == 1 for i in branches)
        if all(v == 1 for v in indices.values()) and distinct:
            mu = (m - 1) ** 2
            # a pencil of lines is homogeneous; m <= 4 smooth transversal branches
            # are always quasi-homogeneous (A1, D4, X9), beyond that tau may drop
            if m <= 4 or all_lines:
                kind, tau = "ordinary", mu
            else:
                if strict:
                    raise UnsupportedSingularityError(
                        pt, f"ordinary {m}-fold point with a conic branch (tau not determined)"
                    )
                kind, tau = "unsupported", None
        elif m == 2 and list(indices.values()) == [2]:
            kind, mu, tau = "tacnode_A3", 3, 3
        else:
            if strict:
                raise UnsupportedSingularityError(pt)
            kind, mu, tau = "unsupported", None, None
        out.append(SingularPoint(pt, branches, m, indices, mu, tau, kind))
    return out


def multiplicity_counts(points) -> dict:
    """n_m: number of ordinary m-fold points."""
    counts = Counter(p.mult_m for p in points if p.kind == "ordinary")
    return dict(sorted(counts.items()))


def total_milnor_combinatorial(curve: Curve) -> int:
    """Sum of local Milnor numbers; ordinary points of any multiplicity are allowed."""
    points = classify_singularities(curve, strict=False)
    for p in points:
        if p.local_milnor is None:
            raise UnsupportedSingularityError(p.coords)
    return sum(p.local_milnor for p in points)


def total_tjurina_combinatorial(curve: Curve) -> int:
    """Sum of local Tjurina numbers over supported (quasi-homogeneous) points."""
    return sum(p.local_tjurina for p in classify_singularities(curve))


def intersection_count_combinatorial(c1: Curve, c2: Curve) -> IntersectionReport:
    if c1.raw or c2.raw:
        raise UnsupportedCurveError("raw polynomial input has no component structure")
    comps = c1.components + c2.components
    for c in comps:
        _check_supported(c)
    n1 = len(c1.components)
    pairs = [(i, j) for i in range(n1) for j in range(n1, len(comps))]
    points = _incidences(comps, pairs)
    order = sorted(points, key=lambda p: tuple(map(Fraction, p)))
    mults = tuple(sum(points[p]["pairs"].values()) for p in order)
    return IntersectionReport(len(order), tuple(sorted(mults)), "combinatorial", tuple(order), mults)


# -- resultant route ------------------------------------------------------

def _poly_of(c) -> TriPoly:
    return c.defining_poly if isinstance(c, Curve) else c


def check_no_common_component(c1, c2) -> bool:
    return poly_gcd(_poly_of(c1), _poly_of(c2)).is_constant()


def intersection_count_resultant(c1, c2, seed: int = 0, trials: int = 5) -> IntersectionReport:
    """Distinct intersection points via resultants after random linear changes.

    Each trial draws an invertible integer matrix with entries in [-9, 9]
    such that the new centre (0 : 0 : 1) lies on neither curve, eliminates
    z and counts distinct roots of the resulting binary form. A degenerate
    change can only merge points, so the maximum count is taken and must
    be seen in at least two trials.
    """
    f, g = _poly_of(c1), _poly_of(c2)
    if not check_no_common_component(f, g):
        raise CommonComponentError("curves share a component")
    rng = random.Random(seed)
    outcomes = []
    for _ in range(trials):
        for _attempt in range(1000):
            m = [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)]
            centre = (m[0][2], m[1][2], m[2][2])
            if det3(m) and f.evaluate(centre) and g.evaluate(centre):
                break
        else:
            raise GenericityError("could not draw an admissible linear change")
        res = resultant_wrt(apply_linear_change(f, m), apply_linear_change(g, m), "z")
        if res.is_zero():
            raise CommonComponentError("resultant vanishes identically")
        mults = root_multiplicities(res)
        outcomes.append((sum(mults.values()), mults))
    best = max(r for r, _ in outcomes)
    if sum(1 for r, _ in outcomes if r == best) < 2:
        raise GenericityError(
            f"maximal point count {best} seen only once in {trials} trials; increase trials"
        )
    mults = next(m for r, m in outcomes if r == best)
    per_point = tuple(sorted(k for k, n in mults.items() for _ in range(n)))
    return IntersectionReport(best, per_point, "resultant")


# -- Milnor number of a union, point by point --------------------------

def local_milnor_map(curve: Curve) -> dict:
    return {p.coords: p.local_milnor for p in classify_singularities(curve, strict=False)}


def pointwise_union_milnor(c1: Curve, c2: Curve) -> list:
    """Records (point, mu_union, mu1 + mu2 + 2 i_p - 1) at every point of c1 ∩ c2."""
    mu1 = local_milnor_map(c1)
    mu2 = local_milnor_map(c2)
    mu_u = local_milnor_map(c1.union(c2))
    report = intersection_count_combinatorial(c1, c2)
    out = []
    for pt, ip in zip(report.points, report.point_indices):
        rhs = mu1.get(pt, 0) + mu2.get(pt, 0) + 2 * ip - 1
        out.append((pt, mu_u.get(pt, 0), rhs))
    return out
