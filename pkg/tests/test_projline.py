"""Projective line: points, cross-ratio, harmonic division, homographies."""

from fractions import Fraction
from random import Random

import pytest

from arguesian.errors import DegenerateQuadruple, DegenerateTriple, InfinitePoint, InvalidPoint
from arguesian.fields import Q, make_rational
from arguesian.projline import (
    Homography,
    PointPair,
    ProjPoint,
    cross_ratio,
    homography_from_three_points,
    is_harmonic,
)

from helpers import pair, pt, sc


def oracle_cross_ratio(x, y, u, v):
    """Direct rational evaluation of ((x-u)(y-v))/((x-v)(y-u))."""
    return Fraction((x - u) * (y - v), (x - v) * (y - u))


def test_point_normalisation():
    assert ProjPoint.from_homogeneous(sc(6), sc(2)) == pt(3)
    assert ProjPoint.from_homogeneous(sc(5), sc(0)) == pt("inf")
    with pytest.raises(InvalidPoint):
        ProjPoint.from_homogeneous(sc(0), sc(0))


def test_affine_of_infinity():
    with pytest.raises(InfinitePoint):
        pt("inf").affine()


def test_pair_is_unordered():
    assert pair(1, 6) == pair(6, 1)
    assert hash(pair(1, 6)) == hash(pair(6, 1))
    assert pair(2, 2).is_doubled


def test_cross_ratio_with_infinity():
    assert cross_ratio(pt(0), pt("inf"), pt(1), pt(-1)) == pt(-1)


def test_cross_ratio_direct_values():
    assert cross_ratio(pt(1), pt(6), pt(-1), pt(2)) == pt(oracle_cross_ratio(1, 6, -1, 2))
    assert oracle_cross_ratio(1, 6, -1, 2) == Fraction(-8, 7)
    assert cross_ratio(pt(2), pt(-2), pt(1), pt(4)) == pt(-1)


def test_cross_ratio_infinite_value():
    # x = v makes the denominator vanish: the value is the point at infinity
    assert cross_ratio(pt(1), pt(2), pt(3), pt(1)) == pt("inf")


def test_cross_ratio_degenerate():
    with pytest.raises(DegenerateQuadruple):
        cross_ratio(pt(1), pt(1), pt(1), pt(2))
    # two coincident points from different slots are fine
    assert cross_ratio(pt(1), pt(1), pt(3), pt(4)) == pt(1)


def test_cross_ratio_random_matches_oracle():
    rnd = Random(3)
    for _ in range(300):
        vals = []
        while len(vals) < 4:
            v = Fraction(rnd.randint(-20, 20), rnd.randint(1, 8))
            if v not in vals:
                vals.append(v)
        x, y, u, v = vals
        assert cross_ratio(pt(x), pt(y), pt(u), pt(v)) == pt(oracle_cross_ratio(x, y, u, v))


def test_is_harmonic_examples():
    assert is_harmonic(pair(2, -2), pair(1, 4))
    assert is_harmonic(pair(0, "inf"), pair(1, -1))
    assert not is_harmonic(pair(0, "inf"), pair(1, 2))


def test_is_harmonic_requires_distinct_points():
    with pytest.raises(DegenerateQuadruple):
        is_harmonic(pair(1, 2), pair(1, 3))


def test_is_harmonic_symmetries():
    rnd = Random(5)
    for _ in range(100):
        k = Fraction(rnd.randint(-9, 9), rnd.randint(1, 4))
        l = k + Fraction(rnd.randint(1, 9))
        b = Fraction(rnd.randint(-30, 30), rnd.randint(1, 5))
        if b in (k, l) or b == (k + l) / 2:
            continue
        # harmonic conjugate of b with respect to {k, l}
        h = (k * l - b * (k + l) / 2) / ((k + l) / 2 - b)
        p1 = (k, l)
        p2 = (b, h)
        for q1 in (p1, p1[::-1]):
            for q2 in (p2, p2[::-1]):
                assert is_harmonic(pair(*q1), pair(*q2))
                assert is_harmonic(pair(*q2), pair(*q1))


def test_apply_identity():
    h = Homography.identity(Q)
    assert h.apply(pt(5)) == pt(5)


def test_apply_reciprocal_map():
    h = Homography(sc(0), sc(6), sc(1), sc(0))  # z -> 6/z
    assert h.apply(pt(2)) == pt(3)
    assert h.apply(pt(0)) == pt("inf")
    assert h.apply(pt("inf")) == pt(0)


def test_homography_canonical_form():
    a = Homography(sc(2), sc(4), sc(6), sc(2))
    b = Homography(sc(1), sc(2), sc(3), sc(1))
    assert a == b
    with pytest.raises(ValueError):
        Homography(sc(1), sc(2), sc(2), sc(4))  # singular


def test_from_three_points_identity():
    basis = (pt(0), pt(1), pt("inf"))
    assert homography_from_three_points(basis, basis) == Homography.identity(Q)


def test_from_three_points_inversion():
    h = homography_from_three_points((pt(0), pt(1), pt("inf")), (pt("inf"), pt(1), pt(0)))
    assert h == Homography(sc(0), sc(1), sc(1), sc(0))  # z -> 1/z


def test_from_three_points_shift():
    h = homography_from_three_points((pt(1), pt(2), pt(3)), (pt(2), pt(3), pt(4)))
    assert h.apply(pt(1)) == pt(2)
    assert h.apply(pt(2)) == pt(3)
    assert h.apply(pt(3)) == pt(4)


def test_from_three_points_degenerate():
    with pytest.raises(DegenerateTriple):
        homography_from_three_points((pt(1), pt(1), pt(3)), (pt(0), pt(1), pt(2)))


def test_from_three_points_round_trip():
    rnd = Random(11)
    for _ in range(60):
        src = []
        while len(src) < 3:
            p = pt(Fraction(rnd.randint(-15, 15), rnd.randint(1, 5)))
            if p not in src:
                src.append(p)
        dst = []
        while len(dst) < 3:
            p = pt(Fraction(rnd.randint(-15, 15), rnd.randint(1, 5)))
            if p not in dst:
                dst.append(p)
        forward = homography_from_three_points(tuple(src), tuple(dst))
        backward = homography_from_three_points(tuple(dst), tuple(src))
        assert backward.compose(forward) == Homography.identity(Q)


def test_cross_ratio_invariance_under_homographies():
    rnd = Random(17)
    for _ in range(150):
        coeffs = [make_rational(rnd.randint(-9, 9), rnd.randint(1, 4)) for _ in range(4)]
        if not coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]:
            continue
        h = Homography(*coeffs)
        quad = []
        while len(quad) < 4:
            p = pt(Fraction(rnd.randint(-20, 20), rnd.randint(1, 6)))
            if p not in quad:
                quad.append(p)
        moved = [h.apply(p) for p in quad]
        assert cross_ratio(*moved) == cross_ratio(*quad)
