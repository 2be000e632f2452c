from fractions import Fraction

import pytest

from curvepoly.arrgeo import (
    CommonComponentError,
    Curve,
    CurveError,
    UnsupportedCurveError,
    binary_rational_roots,
    check_no_common_component,
    classify_singularities,
    intersection_count_combinatorial,
    intersection_count_resultant,
    multiplicity_counts,
    normalize_point,
    pointwise_union_milnor,
    total_milnor_combinatorial,
    total_tjurina_combinatorial,
)
from curvepoly.generate import pair_corpus
from curvepoly.milnor import NotReducedError, total_tjurina
from curvepoly.qpoly import parse_poly

from conftest import lines


def curve(*texts, **kw):
    return Curve(tuple(parse_poly(t) for t in texts), **kw)


def test_curve_validation():
    with pytest.raises(CurveError):
        curve("x - z", "2*x - 2*z")
    with pytest.raises(ValueError):
        curve("x^2 + y")  # not homogeneous
    with pytest.raises(NotReducedError):
        Curve((parse_poly("x^2*y"),), raw=True)


def test_normalize_point():
    assert normalize_point((0, 2, -4)) == (0, 1, -2)
    assert normalize_point((3, 1, 0)) == (1, Fraction(1, 3), 0)


def test_binary_rational_roots():
    roots = binary_rational_roots(parse_poly("(x - 2*y)^2*(3*x + y)*y"))
    assert set(roots) == {((2, 1), 2), ((-1, 3), 1), ((1, 0), 1)}


def test_no_common_component():
    assert check_no_common_component(lines("x - z"), curve("x^2 + y^2 - 2*z^2"))
    assert not check_no_common_component(lines("x - z"), lines("x - z", "y - z"))
    c = curve("x^2 + y^2 - 2*z^2")
    assert not check_no_common_component(c, c)


def test_intersection_example(c1, c2):
    res = intersection_count_resultant(c1, c2)
    comb = intersection_count_combinatorial(c1, c2)
    assert res.r_distinct_points == comb.r_distinct_points == 4
    assert res.per_point_multiplicities == comb.per_point_multiplicities == (3, 3, 3, 3)
    assert sum(comb.per_point_multiplicities) == c1.degree * c2.degree


def test_intersection_two_lines():
    rep = intersection_count_resultant(lines("x - z"), lines("y - z"))
    assert (rep.r_distinct_points, rep.per_point_multiplicities) == (1, (1,))


def test_intersection_secant_and_tangent():
    conic = curve("y^2 - x*z")
    # on y = z the conic restricts to y^2 - x*y: two simple points
    rep = intersection_count_resultant(lines("y - z"), conic)
    assert (rep.r_distinct_points, rep.per_point_multiplicities) == (2, (1, 1))
    # the tangent at (1:1:1) is x - 2y + z
    rep = intersection_count_resultant(lines("x - 2*y + z"), conic)
    assert (rep.r_distinct_points, rep.per_point_multiplicities) == (1, (2,))
    comb = intersection_count_combinatorial(lines("x - 2*y + z"), conic)
    assert comb.points == ((1, 1, 1),)


def test_intersection_common_component_raises():
    with pytest.raises(CommonComponentError):
        intersection_count_resultant(lines("x - z", "y"), lines("x - z"))


def test_classify_example(c1, c2):
    pts = classify_singularities(c1)
    assert multiplicity_counts(pts) == {2: 3, 3: 4}
    assert total_milnor_combinatorial(c1) == total_tjurina_combinatorial(c1) == 19
    union = c1.union(c2)
    assert multiplicity_counts(classify_singularities(union)) == {2: 3, 4: 4}
    assert total_milnor_combinatorial(union) == total_tjurina_combinatorial(union) == 39
    assert total_tjurina(union.defining_poly).tau == 39
    assert total_milnor_combinatorial(c2) == 0


def test_classify_node():
    (p,) = classify_singularities(lines("x - z", "y - z"))
    assert (p.coords, p.mult_m, p.local_milnor, p.local_tjurina) == ((1, 1, 1), 2, 1, 1)


def test_tacnode():
    c = curve("y^2 - x*z", "x - 2*y + z")
    (p,) = classify_singularities(c)
    assert p.kind == "tacnode_A3" and p.local_milnor == p.local_tjurina == 3
    assert total_tjurina(c.defining_poly).tau == 3


def test_unsupported_component():
    with pytest.raises(UnsupportedCurveError):
        classify_singularities(curve("y^2*z - x^3 - x^2*z"))


def test_pointwise_union_milnor(c1, c2):
    recs = pointwise_union_milnor(c1, c2)
    assert len(recs) == 4 and all(lhs == rhs == 9 for _, lhs, rhs in recs)


def test_resultant_and_combinatorial_counts_agree_on_corpus():
    for a, b in pair_corpus(12, seed=7):
        res = intersection_count_resultant(a, b)
        comb = intersection_count_combinatorial(a, b)
        assert res.r_distinct_points == comb.r_distinct_points
        assert res.per_point_multiplicities == comb.per_point_multiplicities
        assert sum(res.per_point_multiplicities) == a.degree * b.degree  # Bezout


def test_resultant_count_independent_of_seed(c1, c2):
    counts = {intersection_count_resultant(c1, c2, seed=s).r_distinct_points for s in range(5)}
    assert counts == {4}
