"""Graded pieces of the Jacobian ideal: syzygy dimensions, mdr and total Tjurina number."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exactla import QMatrix, kernel_dim, rank
from .qpoly import TriPoly, gradient, poly_gcd


class NotReducedError(ValueError):
    """The defining polynomial has a repeated factor."""


class NoPlateauError(RuntimeError):
    pass


@dataclass(frozen=True)
class SyzygyProfile:
    degree_d: int
    mdr: int
    ar_dims: tuple  # ((r, dim AR(f)_r), ...)
    exponents: tuple | None = None


@dataclass(frozen=True)
class MilnorAlgebraProfile:
    hilbert: tuple  # ((k, dim (S/J_f)_k), ...)
    tau: int
    stabilization_degree: int


@lru_cache(maxsize=None)
def monomials(k: int) -> tuple:
    """Exponent triples of degree k in graded-lex descending order (x > y > z)."""
    if k < 0:
        return ()
    return tuple((a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1))


def _homogeneous_degree(f: TriPoly) -> int:
    if f.is_zero() or not f.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous polynomial")
    d = f.degree()
    if d < 1:
        raise ValueError("expected a polynomial of positive degree")
    return d


def check_reduced(f: TriPoly) -> None:
    """Raise NotReducedError unless f is squarefree."""
    if not poly_gcd(f, *gradient(f)).is_constant():
        raise NotReducedError(f"polynomial is not reduced: {f}")


def jacobian_map_matrix(f: TriPoly, k: int) -> QMatrix:
    """Matrix of (a, b, c) -> a f_x + b f_y + c f_z from (S_{k-d+1})^3 to S_k.

    Rows follow the degree-k monomials, columns the three blocks of
    degree k-d+1 monomials, all in graded-lex order.
    """
    d = _homogeneous_degree(f)
    if k < d - 1:
        raise ValueError(f"degree {k} is below d-1 = {d - 1}: empty domain")
    row_index = {m: i for i, m in enumerate(monomials(k))}
    dom = monomials(k - d + 1)
    nrows = len(row_index)
    ncols = 3 * len(dom)
    entries = [0] * (nrows * ncols)
    col = 0
    for part in gradient(f):
        terms = list(part.items())
        for (p, q, r) in dom:
            for (a, b, c), v in terms:
                entries[row_index[(a + p, b + q, c + r)] * ncols + col] = v
            col += 1
    return QMatrix(nrows, ncols, tuple(entries))


def ar_dimension(f: TriPoly, r: int) -> int:
    if r < 0:
        raise ValueError("syzygy degree must be non-negative")
    d = _homogeneous_degree(f)
    return kernel_dim(jacobian_map_matrix(f, r + d - 1))


def mdr(f: TriPoly) -> int:
    """Least degree of a nonzero Jacobian syzygy."""
    d = _homogeneous_degree(f)
    for r in range(d):
        if ar_dimension(f, r) > 0:
            return r
    # Koszul syzygies live in degree d-1 whenever f has two nonzero partials
    raise AssertionError("no syzygy found up to degree d-1")


def syzygy_profile(f: TriPoly, tau: int | None = None) -> SyzygyProfile:
    """AR(f)_r dimensions for 0 <= r <= d-1; exponents filled in for free curves when tau is known."""
    from .invariants import dpw_freeness

    d = _homogeneous_degree(f)
    dims = tuple((r, ar_dimension(f, r)) for r in range(d))
    m = next(r for r, n in dims if n > 0)
    exponents = None
    if tau is not None:
        report = dpw_freeness(d, tau, m)
        if report.is_free:
            exponents = report.exponents
    return SyzygyProfile(d, m, dims, exponents)


def milnor_algebra_hilbert(f: TriPoly, k: int) -> int:
    """dim (S/J_f)_k for k >= d-1."""
    m = jacobian_map_matrix(f, k)
    return comb(k + 2, 2) - rank(m)


def total_tjurina(f: TriPoly, check: bool = True) -> MilnorAlgebraProfile:
    """Total Tjurina number as the stable value of the Milnor algebra's Hilbert function.

    Scans upward from max(d-1, 3d-6) until three consecutive degrees give the
    same dimension; gives up after 3d degrees.
    """
    d = _homogeneous_degree(f)
    if check:
        check_reduced(f)
    start = max(d - 1, 3 * d - 6)
    values = []
    for k in range(start, start + 3 * d + 1):
        values.append((k, milnor_algebra_hilbert(f, k)))
        if len(values) >= 3 and values[-1][1] == values[-2][1] == values[-3][1]:
            return MilnorAlgebraProfile(tuple(values), values[-1][1], values[-3][0])
    raise NoPlateauError(
        f"Hilbert function of the Milnor algebra did not stabilize in degrees {start}..{start + 3 * d}"
    )
