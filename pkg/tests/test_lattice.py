import pytest

from curvepoly.generate import generate
from curvepoly.invariants import QuadraticPoly, poincare_poly
from curvepoly.lattice import (
    LineArrangement,
    build_lattice,
    deletion_restriction_check,
    pi_poly,
    restriction,
)
from curvepoly.milnor import total_tjurina

from conftest import C1_LINES, lines

Q = QuadraticPoly.of
GENERIC3 = LineArrangement(((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def pencil(n):
    return LineArrangement(tuple((1, k, 0) for k in range(n)))


def c1_arr():
    return LineArrangement.from_polys(lines(*C1_LINES).components)


def test_generic_three_lines():
    flats = build_lattice(GENERIC3)
    by_rank = {}
    for f in flats:
        by_rank.setdefault(f.rank, []).append(f.mobius)
    assert by_rank == {0: [1], 1: [-1] * 3, 2: [1] * 3, 3: [-1]}
    assert pi_poly(GENERIC3) == Q(1, 3, 3, 1)


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_pencil(n):
    flats = build_lattice(pencil(n))
    rank2 = [f for f in flats if f.rank == 2]
    assert len(rank2) == 1 and rank2[0].mobius == n - 1
    assert max(f.rank for f in flats) == 2
    assert pi_poly(pencil(n)) == Q(1, n, n - 1)


def test_c1_lattice():
    flats = build_lattice(c1_arr())
    rank2 = [f for f in flats if f.rank == 2]
    assert sorted(f.mobius for f in rank2) == [1, 1, 1, 2, 2, 2, 2]
    assert pi_poly(c1_arr()) == Q(1, 6, 11, 6) == Q(1, 1) * Q(1, 2) * Q(1, 3)
    assert all(deletion_restriction_check(c1_arr(), h) for h in range(6))


def test_small_deletion_restriction():
    assert all(deletion_restriction_check(GENERIC3, h) for h in range(3))
    two = LineArrangement(((1, 0, 0), (0, 1, 0)))
    assert all(deletion_restriction_check(two, h) for h in range(2))
    assert pi_poly(LineArrangement(((1, 2, 3),))) == Q(1, 1)


def test_restriction_merges_points():
    # on the line x = 0 the lines y = 0 and y = z and the pencil line x + y meet in 2 distinct points
    arr = LineArrangement(((1, 0, 0), (0, 1, 0), (0, 1, -1), (1, 1, 0)))
    assert len(restriction(arr, 0)) == 2


def test_rejects_proportional():
    with pytest.raises(ValueError):
        LineArrangement(((1, 2, 3), (2, 4, 6)))


def _mobius_brute(flats):
    # sum of mu over the interval [0, X] vanishes for X != 0
    for top in flats:
        if top.rank == 0:
            continue
        assert sum(f.mobius for f in flats if f.members <= top.members) == 0


def test_mobius_property_and_cone_identity():
    for c in generate("concurrent-rich-lines", 8, seed=4) + generate("generic-lines", 4, seed=5):
        arr = LineArrangement.from_polys(c.components)
        flats = build_lattice(arr)
        _mobius_brute(flats)
        # pi = (1 + t) * Poincare polynomial of the projective arrangement
        tau = total_tjurina(c.defining_poly).tau
        assert pi_poly(arr) == Q(1, 1) * poincare_poly(c.degree, tau)
        # rank-2 flats are the multiple points; mu = m - 1
        for f in flats:
            if f.rank == 2:
                assert f.mobius == len(f.members) - 1
