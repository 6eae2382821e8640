"""Shared constructors for the test suite."""

from fractions import Fraction

from arguesian.fields import Field, Q
from arguesian.involution import InvolutionConfig
from arguesian.projline import PointPair, ProjPoint

INF = "inf"


def sc(x, field: Field = Q):
    if field is Q:
        return Q.scalar(Fraction(x))
    return field.scalar(int(x))


def pt(x, field: Field = Q) -> ProjPoint:
    if x == INF:
        return ProjPoint.infinity(field)
    return ProjPoint.finite(sc(x, field))


def pair(a, b, field: Field = Q) -> PointPair:
    return PointPair(pt(a, field), pt(b, field))


def config(*pairs) -> InvolutionConfig:
    return InvolutionConfig(tuple(pair(a, b) for a, b in pairs))


def config_in(field: Field, *pairs) -> InvolutionConfig:
    return InvolutionConfig(tuple(pair(a, b, field) for a, b in pairs))
