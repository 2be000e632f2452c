"""Poincare and Betti polynomials of plane curves, freeness, and the addition identities."""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


@dataclass(frozen=True)
class QuadraticPoly:
    """Integer polynomial c0 + c1 t + c2 t^2 (+ c3 t^3), trailing zeros trimmed."""

    coefficients: tuple

    def __post_init__(self):
        cs = [int(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def of(cls, *coefficients) -> "QuadraticPoly":
        return cls(tuple(coefficients))

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def padded(self, n: int = 3) -> list:
        return [self[k] for k in range(max(n, len(self.coefficients)))]

    def __add__(self, other: "QuadraticPoly") -> "QuadraticPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return QuadraticPoly(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "QuadraticPoly") -> "QuadraticPoly":
        n = max(len(self.coefficients), len(other.coefficients))
        return QuadraticPoly(tuple(self[k] - other[k] for k in range(n)))

    def __mul__(self, other: "QuadraticPoly") -> "QuadraticPoly":
        out = [0] * (len(self.coefficients) + len(other.coefficients))
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return QuadraticPoly(tuple(out))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for k, c in enumerate(self.coefficients):
            if c == 0 and k:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            body = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            body += mono
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(parts)


@dataclass(frozen=True)
class FreenessReport:
    is_free: bool
    mdr_value: int
    exponents: tuple | None
    splits_over_Q: bool
    split_factors: tuple | None


def poincare_poly(d: int, tau: int) -> QuadraticPoly:
    """1 + (d-1) t + ((d-1)^2 - tau) t^2."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    if tau < 0 or tau > (d - 1) ** 2:
        raise ValueError(f"inconsistent data: tau={tau} outside [0, (d-1)^2] for d={d}")
    return QuadraticPoly.of(1, d - 1, (d - 1) ** 2 - tau)


def betti_poly(d: int, e: int, mu: int) -> QuadraticPoly:
    """Betti polynomial 1 + (e-1) t + ((d-1)^2 - mu - d + e) t^2 of the complement.

    Accepted for every d >= 1: for a line, a smooth conic or a pair of
    lines the formula returns the known Betti numbers of the complement.
    """
    if d < 1:
        raise ValueError("degree must be at least 1")
    if not 1 <= e <= d:
        raise ValueError(f"component count e={e} must satisfy 1 <= e <= d={d}")
    if mu < 0:
        raise ValueError("Milnor number must be non-negative")
    b2 = (d - 1) ** 2 - mu - d + e
    if b2 < 0:
        raise ValueError(f"inconsistent data: b2 = {b2} < 0")
    return QuadraticPoly.of(1, e - 1, b2)


def split_poincare(p: QuadraticPoly) -> tuple | None:
    """Integers d1 <= d2 with (1 + d1 t)(1 + d2 t) = p, or None."""
    if p.degree > 2 or p[0] != 1:
        return None
    a, b = p[1], p[2]
    disc = a * a - 4 * b
    if disc < 0:
        return None
    s = isqrt(disc)
    if s * s != disc or (a - s) % 2:
        return None
    return ((a - s) // 2, (a + s) // 2)


def dpw_freeness(d: int, tau: int, mdr_value: int) -> FreenessReport:
    """Freeness by the du Plessis-Wall equality (d-1)^2 - r(d-1-r) = tau, r = mdr <= (d-1)/2."""
    r = mdr_value
    free = 2 * r <= d - 1 and (d - 1) ** 2 - r * (d - 1 - r) == tau
    try:
        factors = split_poincare(poincare_poly(d, tau))
    except ValueError:
        factors = None
    return FreenessReport(
        is_free=free,
        mdr_value=r,
        exponents=(r, d - 1 - r) if free else None,
        splits_over_Q=factors is not None,
        split_factors=factors,
    )


def addition_rhs(p1: QuadraticPoly, p2: QuadraticPoly, r: int) -> QuadraticPoly:
    """p1 + p2 + (t - 1) + (r - 1) t^2."""
    return p1 + p2 + QuadraticPoly.of(-1, 1, r - 1)


def check_addition_poincare(p1: QuadraticPoly, p2: QuadraticPoly, p_union: QuadraticPoly, r: int) -> bool:
    return p_union == addition_rhs(p1, p2, r)


def check_addition_betti(b1: QuadraticPoly, b2: QuadraticPoly, b_union: QuadraticPoly, r: int) -> bool:
    return b_union == addition_rhs(b1, b2, r)


def euler_number(b: QuadraticPoly) -> int:
    return b(-1)


def check_euler_addition(e1: int, e2: int, e_union: int, r: int) -> bool:
    return e_union == e1 + e2 + r - 3


def union_milnor(mu1: int, mu2: int, c1: int, c2: int, r: int) -> int:
    return mu1 + mu2 + 2 * c1 * c2 - r


def check_union_milnor(mu1: int, mu2: int, c1: int, c2: int, r: int, mu_union: int) -> bool:
    return mu_union == union_milnor(mu1, mu2, c1, c2, r)
