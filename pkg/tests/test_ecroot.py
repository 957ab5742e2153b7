import pytest

from ffroots import oracle
from ffroots.ecroot import (
    Curve,
    ec_nth_root,
    multiplication_maps,
    point_add,
    point_neg,
    scalar_mul,
)
from ffroots.polyring import Poly

E13 = Curve(13, 1, 0)


def test_curve_validation():
    with pytest.raises(ValueError):
        Curve(13, 0, 0)
    with pytest.raises(ValueError):
        Curve(3, 1, 1)
    with pytest.raises(ValueError):
        Curve(15, 1, 1)


def test_group_law_examples():
    P = (2, 6) if E13.contains((2, 6)) else oracle.curve_points(E13)[3]
    assert point_add(E13, P, None) == P
    assert point_add(E13, P, point_neg(E13, P)) is None
    assert scalar_mul(E13, 2, (0, 0)) is None
    assert scalar_mul(E13, 0, P) is None
    assert scalar_mul(E13, -1, P) == point_neg(E13, P)


def test_group_law_matches_oracle():
    pts = oracle.curve_points(E13)
    for P in pts:
        for k in range(12):
            assert scalar_mul(E13, k, P) == oracle.multiple(E13, k, P)


def test_maps_examples():
    m = multiplication_maps(E13, 1)
    assert (m.u1, m.v1, m.u2, m.v2) == (Poly.x(13), Poly.one(13), Poly.one(13), Poly.one(13))
    m = multiplication_maps(E13, 2)
    assert m.v1 == Poly([0, 4, 0, 4], 13)
    assert m.u1 == Poly([1, 0, -2, 0, 1], 13)
    assert m.u1.degree == 4
    with pytest.raises(ValueError):
        multiplication_maps(E13, 13)


@pytest.mark.parametrize("n", range(1, 13))
def test_maps_agree_with_group_law(n):
    m = multiplication_maps(E13, n)
    assert m.u1.degree == n * n
    for P in oracle.curve_points(E13):
        nP = scalar_mul(E13, n, P)
        if nP is not None:
            assert m.apply(P) == nP
        else:
            assert m.x_map(P[0]) is None


def test_ec_root_examples():
    assert ec_nth_root(E13, None, 2) == {(0, 0), (5, 0), (8, 0)}
    for Q in oracle.curve_points(E13):
        assert ec_nth_root(E13, Q, 1) == {Q}
    assert ec_nth_root(E13, None, 1) == set()
    for P0 in oracle.curve_points(E13):
        Q = scalar_mul(E13, 2, P0)
        got = ec_nth_root(E13, Q, 2)
        assert P0 in got
        assert got == oracle.ec_preimages(E13, Q, 2)


def test_rejects_point_off_curve():
    with pytest.raises(ValueError):
        ec_nth_root(E13, (1, 1), 2)


def test_larger_field():
    C = Curve(1009, 3, 7)
    pts = oracle.curve_points(C)
    for P in pts[:: max(1, len(pts) // 15)]:
        for n in (2, 3, 5):
            Q = scalar_mul(C, n, P)
            got = ec_nth_root(C, Q, n)
            assert P in got
            assert all(scalar_mul(C, n, R) == Q for R in got)
