"""Projective-plane support: conics, polars, and line-to-line projections.

Only what the line theory needs: pole/polar for the harmonic construction,
exact line-conic intersection (a first-class error when the coordinates
would be irrational), the inscribed-quadrilateral section, the classical
five-point rectangle lemma, and central projection between charted lines.
"""

from __future__ import annotations

from .errors import (
    CenterOnLine,
    CoincidentPoints,
    DegenerateConfiguration,
    DegenerateConic,
    DegenerateParameter,
    InvalidPoint,
    NonRationalIntersection,
    PreconditionViolated,
    UnorderedField,
)
from .fields import Field, Scalar
from .involution import InvolutionConfig, is_involution_det
from .projline import (
    Homography,
    PointPair,
    ProjPoint,
    homography_from_three_points,
    is_harmonic,
)


def _canonical_triple(x: Scalar, y: Scalar, z: Scalar):
    for lead in (z, y, x):
        if lead:
            return (x / lead, y / lead, z / lead)
    raise InvalidPoint("(0, 0, 0)")


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


class _HomogeneousTriple:
    __slots__ = ("field", "coords")

    def __init__(self, x: Scalar, y: Scalar, z: Scalar):
        self.field = x.field
        self.coords = _canonical_triple(x, y, z)

    def __eq__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(tuple(c.value for c in self.coords))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"{type(self).__name__}{self}"


class PlanePoint(_HomogeneousTriple):
    """A point of the projective plane, canonical homogeneous triple."""

    @classmethod
    def affine(cls, x: Scalar, y: Scalar) -> "PlanePoint":
        return cls(x, y, x.field.one())


class PlaneLine(_HomogeneousTriple):
    """A line of the projective plane, as a canonical coefficient triple."""


def incident(p: PlanePoint, l: PlaneLine) -> bool:
    return not _dot(p.coords, l.coords)


def join(p: PlanePoint, q: PlanePoint) -> PlaneLine:
    if p == q:
        raise CoincidentPoints(f"join of {p} with itself")
    return PlaneLine(*_cross(p.coords, q.coords))


def meet(l: PlaneLine, m: PlaneLine) -> PlanePoint:
    if l == m:
        raise CoincidentPoints(f"meet of {l} with itself")
    return PlanePoint(*_cross(l.coords, m.coords))


class Conic:
    """A nondegenerate conic given by a symmetric 3x3 coefficient matrix."""

    __slots__ = ("field", "matrix")

    def __init__(self, matrix):
        rows = tuple(tuple(row) for row in matrix)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("conic matrix must be 3x3")
        for i in range(3):
            for j in range(i + 1, 3):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("conic matrix must be symmetric")
        self.field = rows[0][0].field
        self.matrix = rows

    @classmethod
    def unit_circle(cls, field: Field) -> "Conic":
        one, zero = field.one(), field.zero()
        return cls(((one, zero, zero), (zero, one, zero), (zero, zero, -one)))

    @classmethod
    def from_coefficients(cls, coeffs) -> "Conic":
        """Build from the six upper-triangle entries (m00 m01 m02 m11 m12 m22)."""
        m00, m01, m02, m11, m12, m22 = coeffs
        return cls(((m00, m01, m02), (m01, m11, m12), (m02, m12, m22)))

    def determinant(self) -> Scalar:
        m = self.matrix
        return _dot(m[0], _cross(m[1], m[2]))

    @property
    def is_degenerate(self) -> bool:
        return not self.determinant()

    def apply(self, p: PlanePoint):
        return tuple(_dot(row, p.coords) for row in self.matrix)

    def evaluate(self, p: PlanePoint) -> Scalar:
        return _dot(p.coords, self.apply(p))

    def contains(self, p: PlanePoint) -> bool:
        return not self.evaluate(p)


def polar(c: Conic, p: PlanePoint) -> PlaneLine:
    """The polar line of p: coefficient triple M.p (the tangent when p is on
    the conic)."""
    if c.is_degenerate:
        raise DegenerateConic("polar needs an invertible conic matrix")
    return PlaneLine(*c.apply(p))


def _line_basis(l: PlaneLine) -> tuple[PlanePoint, PlanePoint]:
    """An affine-natural basis of a line: a finite base point and the line's
    point at infinity, so the induced chart is an affine coordinate.  The
    line at infinity itself gets the two axis directions."""
    l0, l1, l2 = l.coords
    field = l.field
    one, zero = field.one(), field.zero()
    if l0 or l1:
        direction = PlanePoint(l1, -l0, zero)
        if l0:
            base = PlanePoint(-l2 / l0, zero, one)
        else:
            base = PlanePoint(zero, -l2 / l1, one)
        return base, direction
    return PlanePoint(one, zero, zero), PlanePoint(zero, one, zero)


def line_conic_points(c: Conic, l: PlaneLine) -> list[PlanePoint]:
    """The rational intersection points of a line with the conic: two points,
    or one (tangency), never silently approximated.  When the restricted
    quadratic has a non-square discriminant the intersection exists only in
    an extension field and NonRationalIntersection is raised."""
    if c.is_degenerate:
        raise DegenerateConic("intersection needs an invertible conic matrix")
    p0, p1 = _line_basis(l)
    qa = _dot(p1.coords, c.apply(p1))
    qb = (_dot(p0.coords, c.apply(p1))) * 2
    qc = _dot(p0.coords, c.apply(p0))

    def combine(w: Scalar, z: Scalar) -> PlanePoint:
        return PlanePoint(*(w * u + z * v for u, v in zip(p0.coords, p1.coords)))

    one = l.field.one()
    if qa:
        disc = qb * qb - 4 * qa * qc
        if not disc.is_square():
            raise NonRationalIntersection(f"discriminant {disc} is not a square")
        s = disc.sqrt()
        if not disc:
            return [combine(one, -qb / (2 * qa))]
        return [combine(one, (-qb + s) / (2 * qa)), combine(one, (-qb - s) / (2 * qa))]
    if qb:
        return [p1, combine(one, -qc / qb)]
    if qc:
        return [p1]
    raise DegenerateConic("line lies on the conic")


def circle_param(t: ProjPoint) -> PlanePoint:
    """Rational point (1 - t^2, 2t, 1 + t^2) of the unit circle; t = infinity
    gives (-1, 0, 1)."""
    field = t.field
    one = field.one()
    if t.is_infinite:
        return PlanePoint(-one, field.zero(), one)
    v = t.affine()
    z = one + v * v
    if not z:
        raise DegenerateParameter(f"1 + t^2 = 0 for t = {v}")
    return PlanePoint(one - v * v, v + v, z)


class LineChart:
    """A projective coordinate on a plane line: t -> p0 + t*p1, t = infinity
    landing on p1."""

    __slots__ = ("line", "p0", "p1")

    def __init__(self, line: PlaneLine, p0: PlanePoint, p1: PlanePoint):
        if p0 == p1:
            raise CoincidentPoints("chart base points coincide")
        if not incident(p0, line) or not incident(p1, line):
            raise ValueError("chart base points must lie on the line")
        self.line = line
        self.p0 = p0
        self.p1 = p1

    @classmethod
    def canonical(cls, line: PlaneLine) -> "LineChart":
        p0, p1 = _line_basis(line)
        return cls(line, p0, p1)

    def point_at(self, t: ProjPoint) -> PlanePoint:
        w, z = t.t, t.z
        return PlanePoint(*(w * u + z * v for u, v in zip(self.p0.coords, self.p1.coords)))

    def coordinate_of(self, p: PlanePoint) -> ProjPoint:
        if not incident(p, self.line):
            raise ValueError(f"{p} is not on the charted line")
        for i in range(3):
            for j in range(i + 1, 3):
                det = self.p0.coords[i] * self.p1.coords[j] - self.p1.coords[i] * self.p0.coords[j]
                if det:
                    w = p.coords[i] * self.p1.coords[j] - self.p1.coords[i] * p.coords[j]
                    z = self.p0.coords[i] * p.coords[j] - p.coords[i] * self.p0.coords[j]
                    return ProjPoint.from_homogeneous(z / det, w / det)
        raise CoincidentPoints("chart base points coincide")


def _chart_avoiding(line: PlaneLine, pts) -> LineChart:
    """A chart of the line whose point at infinity avoids the given points."""
    q0, q1 = _line_basis(line)
    candidates = [q1, q0]
    for m in range(1, 10):
        scale = line.field.scalar(m)
        candidates.append(
            PlanePoint(*(u + scale * v for u, v in zip(q0.coords, q1.coords)))
        )
    for p_inf in candidates:
        if all(p_inf != p for p in pts):
            base = q0 if p_inf != q0 else q1
            return LineChart(line, base, p_inf)
    raise DegenerateConfiguration("no chart avoids the section points")


def figure1_check(c: Conic, l: PlaneLine, cpt: PlanePoint) -> tuple[PlanePoint, bool]:
    """Cut the conic by the line in b, h; intersect the polar of a point of
    the line with the line itself, getting g; report whether (b, h) and
    (cpt, g) divide the line harmonically (they must)."""
    if not incident(cpt, l):
        raise ValueError("the point must lie on the line")
    if c.contains(cpt):
        raise DegenerateConfiguration("point on the conic")
    section = line_conic_points(c, l)
    if len(section) != 2:
        raise DegenerateConfiguration("line tangent to the conic")
    pol = polar(c, cpt)
    if pol == l:
        raise DegenerateConfiguration("point is the pole of the line")
    g = meet(pol, l)
    chart = LineChart.canonical(l)
    b, h = (chart.coordinate_of(p) for p in section)
    verdict = is_harmonic(
        PointPair(b, h), PointPair(chart.coordinate_of(cpt), chart.coordinate_of(g))
    )
    return g, verdict


def inscribed_quadrilateral_pairs(
    c: Conic,
    k: PlanePoint,
    n: PlanePoint,
    v: PlanePoint,
    o: PlanePoint,
    l: PlaneLine,
) -> InvolutionConfig:
    """Cut the two couples of opposite sides of the inscribed quadrilateral
    and the conic itself by a line: the three couples of section points are
    an involution, and both classical rectangle-ratio identities hold (the
    unsigned ones are additionally checked over an ordered field)."""
    vertices = [k, n, v, o]
    for i in range(4):
        for j in range(i + 1, 4):
            if vertices[i] == vertices[j]:
                raise DegenerateConfiguration("coincident vertices")
    for p in vertices:
        if not c.contains(p):
            raise DegenerateConfiguration(f"vertex {p} not on the conic")
        if incident(p, l):
            raise DegenerateConfiguration(f"line through vertex {p}")
    section = line_conic_points(c, l)
    if len(section) != 2:
        raise DegenerateConfiguration("line tangent to the conic")
    f_pt, g_pt = section
    a_pt = meet(join(k, n), l)
    c_pt = meet(join(v, o), l)
    b_pt = meet(join(k, o), l)
    e_pt = meet(join(v, n), l)
    if a_pt == c_pt or b_pt == e_pt:
        raise DegenerateConfiguration("concurrent opposite sides on the line")

    six = [a_pt, c_pt, b_pt, e_pt, f_pt, g_pt]
    chart = _chart_avoiding(l, six)
    a, cc, b, e, f, g = (chart.coordinate_of(p).affine() for p in six)

    config = InvolutionConfig(
        (
            PointPair(ProjPoint.finite(a), ProjPoint.finite(cc)),
            PointPair(ProjPoint.finite(b), ProjPoint.finite(e)),
            PointPair(ProjPoint.finite(f), ProjPoint.finite(g)),
        )
    )
    if not is_involution_det(config):
        raise DegenerateConfiguration("section points fail the involution relation")

    checks = [
        ((a - f) * (a - g) * ((cc - b) * (cc - e)), (cc - f) * (cc - g) * ((a - b) * (a - e))),
        ((f - a) * (f - cc) * ((g - b) * (g - e)), (g - a) * (g - cc) * ((f - b) * (f - e))),
    ]
    for lhs, rhs in checks:
        if lhs != rhs:
            raise DegenerateConfiguration("rectangle-ratio identity failed")
    if l.field.ordered:
        lhs = (abs(a - f) * abs(a - g)) * (abs(cc - b) * abs(cc - e))
        rhs = (abs(cc - f) * abs(cc - g)) * (abs(a - b) * abs(a - e))
        if lhs != rhs:
            raise DegenerateConfiguration("unsigned rectangle identity failed")
    return config


def pappus_lemma_check(d: Scalar, a: Scalar, c: Scalar, b: Scalar, e: Scalar) -> bool:
    """Five collinear points with equal rectangles around d: checks that
    BD/DE = (AB.BC)/(AE.EC) and AD/DC = (BA.AE)/(BC.CE), unsigned lengths."""
    if not d.field.ordered:
        raise UnorderedField("unsigned rectangle lemma needs an ordered field")
    pts = [d, a, c, b, e]
    for i in range(5):
        for j in range(i + 1, 5):
            if pts[i] == pts[j]:
                raise CoincidentPoints("five distinct points required")
    ad, dc = abs(a - d), abs(d - c)
    bd, de = abs(b - d), abs(d - e)
    if ad * dc != bd * de:
        raise PreconditionViolated(f"{ad}*{dc} != {bd}*{de}")
    ab, bc = abs(a - b), abs(b - c)
    ae, ec = abs(a - e), abs(e - c)
    ce = ec
    first = bd * (ae * ec) == de * (ab * bc)
    second = ad * (bc * ce) == dc * (ab * ae)
    return first and second


def central_projection(center: PlanePoint, src: LineChart, dst: LineChart) -> Homography:
    """The chart-coordinate homography of projecting src onto dst from a
    center off both lines."""
    if incident(center, src.line) or incident(center, dst.line):
        raise CenterOnLine(str(center))
    if src.line == dst.line:
        raise ValueError("source and target lines must differ")
    field = center.field
    anchors = (
        ProjPoint.finite(field.zero()),
        ProjPoint.finite(field.one()),
        ProjPoint.infinity(field),
    )
    images = []
    for t in anchors:
        ray = join(center, src.point_at(t))
        images.append(dst.coordinate_of(meet(ray, dst.line)))
    return homography_from_three_points(anchors, tuple(images))
