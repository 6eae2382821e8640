"""The projective line over an exact field.

Points are homogeneous pairs [z : t] kept in canonical form: finite points as
[value : 1], the single point at infinity as [1 : 0].  Cross-ratio returns a
point of the line itself so that an infinite value needs no side channel.
"""

from __future__ import annotations

from .errors import DegenerateQuadruple, DegenerateTriple, InfinitePoint, InvalidPoint
from .fields import Field, Scalar


class ProjPoint:
    """A point of the projective line: a finite scalar or the point at infinity."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: Scalar | None):
        self.field = field
        self.value = value  # None encodes [1 : 0]

    @classmethod
    def finite(cls, value: Scalar) -> "ProjPoint":
        return cls(value.field, value)

    @classmethod
    def infinity(cls, field: Field) -> "ProjPoint":
        return cls(field, None)

    @classmethod
    def from_homogeneous(cls, z: Scalar, t: Scalar) -> "ProjPoint":
        if not z and not t:
            raise InvalidPoint("[0 : 0]")
        if t:
            return cls(z.field, z / t)
        return cls(z.field, None)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    @property
    def z(self) -> Scalar:
        return self.field.one() if self.value is None else self.value

    @property
    def t(self) -> Scalar:
        return self.field.zero() if self.value is None else self.field.one()

    def affine(self) -> Scalar:
        if self.value is None:
            raise InfinitePoint("affine coordinate of the point at infinity")
        return self.value

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, None if self.value is None else self.value.value))

    def sort_key(self):
        """Canonical order used only to normalise unordered pairs (infinity last)."""
        if self.value is None:
            return (1, 0)
        return (0, self.value.value)

    def __str__(self):
        return "inf" if self.value is None else str(self.value)

    def __repr__(self):
        return f"ProjPoint({self})"


def hdiff(p: ProjPoint, q: ProjPoint) -> Scalar:
    """Homogeneous difference p - q: zero exactly when the points coincide."""
    return p.z * q.t - q.z * p.t


class PointPair:
    """An unordered couple of points; the two members may coincide."""

    __slots__ = ("first", "second")

    def __init__(self, a: ProjPoint, b: ProjPoint):
        if a.field != b.field:
            raise ValueError("pair members from different fields")
        if b.sort_key() < a.sort_key():
            a, b = b, a
        self.first = a
        self.second = b

    @property
    def members(self) -> tuple[ProjPoint, ProjPoint]:
        return (self.first, self.second)

    @property
    def is_doubled(self) -> bool:
        return self.first == self.second

    def __eq__(self, other):
        if not isinstance(other, PointPair):
            return NotImplemented
        return self.first == other.first and self.second == other.second

    def __hash__(self):
        return hash((self.first, self.second))

    def __str__(self):
        return f"({self.first}, {self.second})"

    def __repr__(self):
        return f"PointPair{self}"


class Homography:
    """An invertible projective map of the line, as a canonical 2x2 array.

    Coefficient arrays that differ by a nonzero scalar denote the same map;
    the stored form has its first nonzero coefficient (row-major) equal to 1,
    so map equality is representation equality.
    """

    __slots__ = ("field", "m00", "m01", "m10", "m11")

    def __init__(self, m00: Scalar, m01: Scalar, m10: Scalar, m11: Scalar):
        field = m00.field
        det = m00 * m11 - m01 * m10
        if not det:
            raise ValueError("singular coefficient array")
        for lead in (m00, m01, m10, m11):
            if lead:
                m00, m01, m10, m11 = (m00 / lead, m01 / lead, m10 / lead, m11 / lead)
                break
        self.field = field
        self.m00, self.m01, self.m10, self.m11 = m00, m01, m10, m11

    @classmethod
    def identity(cls, field: Field) -> "Homography":
        one, zero = field.one(), field.zero()
        return cls(one, zero, zero, one)

    def apply(self, p: ProjPoint) -> ProjPoint:
        z, t = p.z, p.t
        return ProjPoint.from_homogeneous(
            self.m00 * z + self.m01 * t, self.m10 * z + self.m11 * t
        )

    def compose(self, other: "Homography") -> "Homography":
        """self after other."""
        return Homography(
            self.m00 * other.m00 + self.m01 * other.m10,
            self.m00 * other.m01 + self.m01 * other.m11,
            self.m10 * other.m00 + self.m11 * other.m10,
            self.m10 * other.m01 + self.m11 * other.m11,
        )

    def inverse(self) -> "Homography":
        return Homography(self.m11, -self.m01, -self.m10, self.m00)

    def coefficients(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.m00, self.m01, self.m10, self.m11)

    def __eq__(self, other):
        if not isinstance(other, Homography):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(tuple(c.value for c in self.coefficients()))

    def __repr__(self):
        return f"Homography[{self.m00}, {self.m01}; {self.m10}, {self.m11}]"


def apply(h: Homography, p: ProjPoint) -> ProjPoint:
    return h.apply(p)


def _to_zero_one_inf(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> Homography:
    """The map sending (p1, p2, p3) to (0, 1, infinity)."""
    # Row (t1, -z1) kills p1, row (t3, -z3) kills p3; rescale so p2 goes to 1.
    u = hdiff(p2, p1)
    v = hdiff(p2, p3)
    return Homography(v * p1.t, -(v * p1.z), u * p3.t, -(u * p3.z))


def homography_from_three_points(
    src: tuple[ProjPoint, ProjPoint, ProjPoint],
    dst: tuple[ProjPoint, ProjPoint, ProjPoint],
) -> Homography:
    """The unique homography with src[i] |-> dst[i]; inputs must be triples of
    pairwise-distinct points."""
    for triple in (src, dst):
        a, b, c = triple
        if a == b or a == c or b == c:
            raise DegenerateTriple(f"{a}, {b}, {c}")
    return _to_zero_one_inf(*dst).inverse().compose(_to_zero_one_inf(*src))


def cross_ratio(x: ProjPoint, y: ProjPoint, u: ProjPoint, v: ProjPoint) -> ProjPoint:
    """[x, y; u, v] = ((x-u)(y-v)) / ((x-v)(y-u)), computed homogeneously.

    The value is itself a point of the line (so infinity is a legal result);
    it is undefined exactly when three of the arguments coincide.
    """
    num = hdiff(x, u) * hdiff(y, v)
    den = hdiff(x, v) * hdiff(y, u)
    if not num and not den:
        raise DegenerateQuadruple(f"{x}, {y}, {u}, {v}")
    return ProjPoint.from_homogeneous(num, den)


def is_harmonic(p1: PointPair, p2: PointPair) -> bool:
    """True iff the two couples divide each other harmonically (cross-ratio -1).

    Symmetric in the two pairs and in swapping members of either pair; the
    four points must be pairwise distinct.
    """
    pts = [p1.first, p1.second, p2.first, p2.second]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegenerateQuadruple(f"{pts[i]} repeated")
    field = p1.first.field
    minus_one = ProjPoint.finite(-field.one())
    return cross_ratio(p1.first, p1.second, p2.first, p2.second) == minus_one
