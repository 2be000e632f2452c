"""Deterministic pseudo-random line and line/conic arrangements for sweeps and tests.

Every arrangement returned here has only rational, supported singular
points (ordinary m-fold points and A3 tacnodes), so both the Hilbert
function route and the combinatorial route apply to it.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .arrgeo import Curve, CurveError, GenericityError, classify_singularities
from .qpoly import (
    TriPoly,
    apply_linear_change,
    det3,
    gradient,
    integer_content_normalize,
    parse_poly,
)

KINDS = ("generic-lines", "concurrent-rich-lines", "lines-plus-conic")

BASE_CONIC = parse_poly("y^2 - x*z")


class GenerationError(RuntimeError):
    pass


def _line(v) -> TriPoly:
    return integer_content_normalize(TriPoly.linear(*v))


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _supported(curve: Curve) -> bool:
    try:
        classify_singularities(curve)
    except (CurveError, GenericityError):
        return False
    return True


def _distinct_lines(vectors) -> list:
    out, seen = [], set()
    for v in vectors:
        if not any(v):
            continue
        line = _line(v)
        if line not in seen:
            seen.add(line)
            out.append(line)
    return out


def generic_lines(rng: random.Random, n: int, budget: int = 1000) -> Curve:
    """n lines, no three concurrent: only nodes."""
    for _ in range(budget):
        vecs = [tuple(rng.randint(-5, 5) for _ in range(3)) for _ in range(n)]
        if any(not any(v) for v in vecs):
            continue
        if any(_cross(u, v) == (0, 0, 0) for u, v in combinations(vecs, 2)):
            continue
        if any(det3([u, v, w]) == 0 for u, v, w in combinations(vecs, 3)):
            continue
        return Curve(tuple(_line(v) for v in vecs))
    raise GenerationError("generic-lines: generation budget exhausted")


def concurrent_rich_lines(rng: random.Random, n: int, budget: int = 1000) -> Curve:
    """n lines joining pairs of a few random points, so triple points are common."""
    for _ in range(budget):
        k = rng.randint(4, 5)
        pts = [tuple(rng.randint(-3, 3) for _ in range(3)) for _ in range(k)]
        if any(not any(p) for p in pts):
            continue
        cands = _distinct_lines(_cross(p, q) for p, q in combinations(pts, 2))
        if len(cands) < n:
            continue
        return Curve(tuple(rng.sample(cands, n)))
    raise GenerationError("concurrent-rich-lines: generation budget exhausted")


def random_conic(rng: random.Random):
    """A smooth conic B(y^2 - xz) with a rational parametrisation (s, t) -> B (s^2, st, t^2)."""
    while True:
        b = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        if det3(b):
            break
    binv = _inverse3(b)
    conic = integer_content_normalize(apply_linear_change(BASE_CONIC, binv))

    def point(s, t):
        v = (s * s, s * t, t * t)
        return tuple(sum(b[i][j] * v[j] for j in range(3)) for i in range(3))

    return conic, point


def _inverse3(m):
    d = Fraction(det3(m))
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            minor = [[m[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            cof[i][j] = (-1) ** (i + j) * (minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0])
    return [[cof[j][i] / d for j in range(3)] for i in range(3)]


def _tangent(conic: TriPoly, p):
    return tuple(g.evaluate(p) for g in gradient(conic))


def lines_plus_conic(rng: random.Random, n: int, budget: int = 400) -> tuple:
    """(lines, conic): n chords and tangents of a random rational conic."""
    for _ in range(budget):
        conic, point = random_conic(rng)
        params = {}
        while len(params) < 5:
            s, t = rng.randint(-3, 3), rng.randint(-3, 3)
            if (s, t) != (0, 0):
                params.setdefault(Fraction(s, t) if t else None, (s, t))
        pts = [point(s, t) for s, t in params.values()]
        vecs = [_cross(p, q) for p, q in combinations(pts, 2)]
        vecs += [_tangent(conic, p) for p in pts if rng.random() < 0.4]
        cands = _distinct_lines(vecs)
        if len(cands) < n:
            continue
        lines = rng.sample(cands, n)
        try:
            curve_lines = Curve(tuple(lines))
            curve_conic = Curve((conic,))
            union = curve_lines.union(curve_conic)
        except CurveError:
            continue
        if _supported(union):
            return curve_lines, curve_conic
    raise GenerationError("lines-plus-conic: generation budget exhausted")


def generate(kind: str, count: int, seed: int = 0, size: int | None = None) -> list:
    """A list of named curves. lines-plus-conic yields two curves per sample (lines, conic)."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = size if size is not None else rng.randint(3, 7)
        if kind == "generic-lines":
            c = generic_lines(rng, n)
            out.append(_named(c, f"G{i}"))
        elif kind == "concurrent-rich-lines":
            c = concurrent_rich_lines(rng, n)
            out.append(_named(c, f"R{i}"))
        else:
            lines, conic = lines_plus_conic(rng, n)
            out.append(_named(lines, f"P{i}a"))
            out.append(_named(conic, f"P{i}b"))
    return out


def _named(curve: Curve, name: str) -> Curve:
    return Curve(curve.components, name=name, raw=curve.raw, e=curve.e,
                 quasi_homogeneous=curve.quasi_homogeneous)


def arrangement_corpus(count: int, seed: int = 0) -> list:
    """Mixed supported arrangements of 3-7 lines, about half with one extra conic."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(3, 7)
        which = i % 3
        if which == 0:
            c = concurrent_rich_lines(rng, n)
        elif which == 1:
            c = generic_lines(rng, n) if rng.random() < 0.5 else concurrent_rich_lines(rng, n)
        else:
            lines, conic = lines_plus_conic(rng, n)
            c = lines.union(conic)
        out.append(_named(c, f"A{i}"))
    return out


def pair_corpus(count: int, seed: int = 0) -> list:
    """Pairs (C1, C2) without common component whose union has only supported points.

    Pairs alternate between (lines, conic) splits and random bipartitions of
    a supported arrangement.
    """
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(3, 6)
        if i % 2 == 0:
            lines, conic = lines_plus_conic(rng, n)
            out.append((_named(lines, f"U{i}a"), _named(conic, f"U{i}b")))
            continue
        if rng.random() < 0.5:
            lines, conic = lines_plus_conic(rng, n)
            comps = list(lines.components) + [conic.components[0]]
        else:
            comps = list(concurrent_rich_lines(rng, n + 1).components)
        rng.shuffle(comps)
        k = rng.randint(1, len(comps) - 1)
        out.append((Curve(tuple(comps[:k]), name=f"U{i}a"), Curve(tuple(comps[k:]), name=f"U{i}b")))
    return out
