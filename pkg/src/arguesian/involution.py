"""Involutions of the projective line, in all their guises.

Three couples of collinear points form an involution when the classical
rectangle-ratio identities hold; equivalently when three cross-ratio
identities hold; equivalently when the couples are orbit pairs of a single
self-inverse homography.  The canonical internal form of such a map is the
linear pairing relation

    alpha*x*y + beta*(x + y) + gamma = 0,

extended homogeneously to the point at infinity.  A couple (x, y) belongs to
the involution exactly when its row (x*y, x + y, 1) annihilates the
coefficient vector, which turns the three-couple membership test into a 3x3
determinant, handles doubled couples (fixed points) uniformly, and makes the
singular case explicit: delta = beta^2 - alpha*gamma = 0 is the degenerate
"mitoyenne" pairing that sticks every point to one base point, and is
rejected rather than silently produced.

An "arbre" is the souche-based presentation: a base point whose signed
products of distances to the three couples agree.  The souche is exactly the
partner of infinity under the induced map, and may itself be the point at
infinity (a distinguished success, not an error: the couples then have equal
sums and the map is a point reflection x -> s - x).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    CoincidentPoints,
    DegenerateInvolution,
    InfinitePoint,
    NoFixedPoints,
    NotAnInvolution,
    NotHarmonic,
)
from .fields import Field, Scalar
from .projline import Homography, PointPair, ProjPoint, cross_ratio, is_harmonic


@dataclass(frozen=True)
class InvolutionConfig:
    """Three couples of points, candidates for a single involution."""

    pairs: tuple[PointPair, PointPair, PointPair]

    def __init__(self, pairs):
        pairs = tuple(pairs)
        if len(pairs) != 3:
            raise ValueError("an involution configuration has exactly three couples")
        object.__setattr__(self, "pairs", pairs)

    def points(self) -> list[ProjPoint]:
        return [p for pair in self.pairs for p in pair.members]

    @property
    def field(self) -> Field:
        return self.pairs[0].first.field

    def __str__(self):
        return ", ".join(str(p) for p in self.pairs)


@dataclass(frozen=True)
class Arbre:
    """A souche together with three couples of nodes on the same line."""

    souche: ProjPoint
    config: InvolutionConfig

    def __str__(self):
        return f"{self.souche}; {self.config}"


class InvolutionKind(Enum):
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class InvolutionClass:
    """Classification verdict: elliptic (no fixed points) or hyperbolic (two)."""

    kind: InvolutionKind
    fixed: PointPair | None = None


def pair_row(pair: PointPair) -> tuple[Scalar, Scalar, Scalar]:
    """Homogeneous membership row of a couple: (x*y, x + y, 1) for finite
    members, (x, 1, 0) when one member is infinite, (1, 0, 0) for a doubled
    infinity."""
    x, y = pair.members
    return (
        x.z * y.z,
        x.z * y.t + y.z * x.t,
        x.t * y.t,
    )


def _cross3(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _det3(r1, r2, r3):
    c = _cross3(r2, r3)
    return r1[0] * c[0] + r1[1] * c[1] + r1[2] * c[2]


class InvolutiveMap:
    """A self-inverse homography in pairing-relation form (alpha, beta, gamma).

    The induced map is x -> -(beta*x + gamma) / (alpha*x + beta); applying it
    twice is the identity.  Coefficients are canonical up to a common scalar
    (first nonzero coefficient equal to 1) and the nondegeneracy
    delta = beta^2 - alpha*gamma != 0 is enforced at construction.
    """

    __slots__ = ("field", "alpha", "beta", "gamma")

    def __init__(self, alpha: Scalar, beta: Scalar, gamma: Scalar):
        field = alpha.field
        for lead in (alpha, beta, gamma):
            if lead:
                alpha, beta, gamma = alpha / lead, beta / lead, gamma / lead
                break
        else:
            raise DegenerateInvolution("zero coefficient vector")
        if not beta * beta - alpha * gamma:
            raise DegenerateInvolution("discriminant beta^2 - alpha*gamma = 0")
        self.field = field
        self.alpha, self.beta, self.gamma = alpha, beta, gamma

    @property
    def delta(self) -> Scalar:
        return self.beta * self.beta - self.alpha * self.gamma

    def coefficients(self) -> tuple[Scalar, Scalar, Scalar]:
        return (self.alpha, self.beta, self.gamma)

    def apply(self, p: ProjPoint) -> ProjPoint:
        z, t = p.z, p.t
        return ProjPoint.from_homogeneous(
            -(self.beta * z + self.gamma * t), self.alpha * z + self.beta * t
        )

    def to_homography(self) -> Homography:
        return Homography(-self.beta, -self.gamma, self.alpha, self.beta)

    def contains_pair(self, pair: PointPair) -> bool:
        r = pair_row(pair)
        return not (self.alpha * r[0] + self.beta * r[1] + self.gamma * r[2])

    def __eq__(self, other):
        if not isinstance(other, InvolutiveMap):
            return NotImplemented
        return self.coefficients() == other.coefficients()

    def __hash__(self):
        return hash(tuple(c.value for c in self.coefficients()))

    def __repr__(self):
        return f"InvolutiveMap({self.alpha}, {self.beta}, {self.gamma})"


def _require_finite(points, what="configuration"):
    for p in points:
        if p.is_infinite:
            raise InfinitePoint(f"{what} requires finite points")


def _require_distinct(points):
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            if points[i] == points[j]:
                raise CoincidentPoints(f"{points[i]} repeated")


def is_arbre(a: Arbre) -> bool:
    """True iff the three signed rectangle products at the souche agree:
    (b-s)(h-s) = (c-s)(g-s) = (d-s)(f-s) in the affine chart."""
    pts = [a.souche] + a.config.points()
    _require_finite(pts, "arbre")
    _require_distinct(pts)
    s = a.souche.affine()
    products = [
        (x.affine() - s) * (y.affine() - s) for x, y in (p.members for p in a.config.pairs)
    ]
    return products[0] == products[1] == products[2]


def is_involution_rect(c: InvolutionConfig) -> bool:
    """Rectangle-ratio form of the involution test, with signed differences.

    All six points must be finite and pairwise distinct.  The three identities
    compare each ratio of "relative" rectangles with its twin:

        (d-g)(f-g)/((d-c)(f-c)) = (b-g)(h-g)/((b-c)(h-c))
        (c-f)(g-f)/((c-d)(g-d)) = (b-f)(h-f)/((b-d)(h-d))
        (c-h)(g-h)/((c-b)(g-b)) = (d-h)(f-h)/((d-b)(f-b))
    """
    pts = c.points()
    _require_finite(pts, "rectangle form")
    _require_distinct(pts)
    (b, h), (cc, g), (d, f) = (
        tuple(x.affine() for x in pair.members) for pair in c.pairs
    )

    def ratio_eq(n1, d1, n2, d2):
        return n1 * d2 == n2 * d1

    return (
        ratio_eq((d - g) * (f - g), (d - cc) * (f - cc), (b - g) * (h - g), (b - cc) * (h - cc))
        and ratio_eq((cc - f) * (g - f), (cc - d) * (g - d), (b - f) * (h - f), (b - d) * (h - d))
        and ratio_eq((cc - h) * (g - h), (cc - b) * (g - b), (d - h) * (f - h), (d - b) * (f - b))
    )


def is_involution_cr(c: InvolutionConfig) -> bool:
    """Cross-ratio form of the involution test; the point at infinity is fine.

    Checks [b,h;d,c] = [b,h;g,f], [c,g;d,b] = [c,g;h,f], [d,f;c,b] = [d,f;h,g].
    """
    pts = c.points()
    _require_distinct(pts)
    (b, h), (cc, g), (d, f) = (pair.members for pair in c.pairs)
    return (
        cross_ratio(b, h, d, cc) == cross_ratio(b, h, g, f)
        and cross_ratio(cc, g, d, b) == cross_ratio(cc, g, h, f)
        and cross_ratio(d, f, cc, b) == cross_ratio(d, f, h, g)
    )


def is_involution_det(c: InvolutionConfig) -> bool:
    """Determinant oracle: the three membership rows are linearly dependent
    and the solved relation is nonsingular.  Doubled couples and couples
    containing the point at infinity are handled by the homogeneous rows."""
    rows = [pair_row(p) for p in c.pairs]
    if _det3(*rows):
        return False
    for i, j in ((0, 1), (0, 2), (1, 2)):
        v = _cross3(rows[i], rows[j])
        if any(v):
            return bool(v[1] * v[1] - v[0] * v[2])
    # All rows proportional: a two-dimensional space of relations always
    # contains a nonsingular one (the singular cone carries no line).
    return True


def map_from_config(c: InvolutionConfig) -> InvolutiveMap:
    """The unique involutive map whose orbit pairs include the three couples;
    raises NotAnInvolution when none exists or it is not determined."""
    rows = [pair_row(p) for p in c.pairs]
    v = None
    for i, j in ((0, 1), (0, 2), (1, 2)):
        w = _cross3(rows[i], rows[j])
        if any(w):
            v = w
            break
    if v is None:
        raise NotAnInvolution("couples do not determine a map")
    for r in rows:
        if r[0] * v[0] + r[1] * v[1] + r[2] * v[2]:
            raise NotAnInvolution(str(c))
    try:
        return InvolutiveMap(*v)
    except DegenerateInvolution as exc:
        raise NotAnInvolution(f"singular relation for {c}") from exc


def central_point(m: InvolutiveMap) -> ProjPoint:
    """The partner of the point at infinity: -beta/alpha, or infinity itself
    when alpha = 0 (the map is then the point reflection x -> -x - gamma/beta)."""
    if m.alpha:
        return ProjPoint.finite(-m.beta / m.alpha)
    return ProjPoint.infinity(m.field)


def find_souche(c: InvolutionConfig) -> ProjPoint:
    """The unique souche of the configuration: the point the induced map pairs
    with infinity.  A finite result satisfies the arbre identity; the point at
    infinity is returned as a distinguished success when the couples have
    equal sums."""
    return central_point(map_from_config(c))


def involution_from_pairs(p1: PointPair, p2: PointPair) -> InvolutiveMap:
    """The unique involutive map pairing p1.first with p1.second and p2.first
    with p2.second.  Doubled couples prescribe fixed points."""
    r1, r2 = pair_row(p1), pair_row(p2)
    v = _cross3(r1, r2)
    if not any(v):
        raise DegenerateInvolution(f"{p1} and {p2} do not determine a map")
    return InvolutiveMap(*v)


def classify(m: InvolutiveMap) -> InvolutionClass:
    """Hyperbolic (two fixed points) iff delta is a square in the base field,
    elliptic otherwise; never exactly one fixed point."""
    d = m.delta
    if not d.is_square():
        return InvolutionClass(InvolutionKind.ELLIPTIC)
    s = d.sqrt()
    if m.alpha:
        k1 = (-m.beta + s) / m.alpha
        k2 = (-m.beta - s) / m.alpha
        fixed = PointPair(ProjPoint.finite(k1), ProjPoint.finite(k2))
    else:
        fixed = PointPair(
            ProjPoint.infinity(m.field),
            ProjPoint.finite(-m.gamma / (m.beta + m.beta)),
        )
    return InvolutionClass(InvolutionKind.HYPERBOLIC, fixed)


def fixed_points(m: InvolutiveMap) -> PointPair:
    """The two fixed points of a hyperbolic map; any non-fixed point and its
    image are in harmonic division with them."""
    verdict = classify(m)
    if verdict.kind is InvolutionKind.ELLIPTIC:
        raise NoFixedPoints("elliptic involution has no fixed points in this field")
    return verdict.fixed


def reciprocal_souches(pair1: PointPair, pair2: PointPair) -> tuple[ProjPoint, ProjPoint]:
    """The two central points of the two involutions a harmonic quadruple
    determines: the map fixing pair1 swaps pair2 and vice versa.  Over an
    ordered field each central point is the midpoint of its fixed pair."""
    if not is_harmonic(pair1, pair2):
        raise NotHarmonic(f"{pair1} / {pair2}")
    _require_finite(list(pair1.members) + list(pair2.members), "reciprocal souches")

    def fixing(pair):
        a, b = pair.members
        return involution_from_pairs(PointPair(a, a), PointPair(b, b))

    return central_point(fixing(pair1)), central_point(fixing(pair2))


def sixth_point(p1: PointPair, p2: PointPair, x: ProjPoint) -> ProjPoint:
    """The partner of x in the involution the two couples determine."""
    return involution_from_pairs(p1, p2).apply(x)


def is_involution_four(p1: PointPair, p2: PointPair) -> bool:
    """The four-point involution: one couple of extremes and one doubled-up
    couple of middles, which is exactly harmonic division."""
    return is_harmonic(p1, p2)


def completes_involution(c1: InvolutionConfig, c2: InvolutionConfig) -> bool:
    """Given two involutions sharing exactly two couples, verify that the two
    non-shared couples together with either shared one are again an involution."""
    if not is_involution_det(c1) or not is_involution_det(c2):
        raise NotAnInvolution("input configuration is not an involution")
    remaining = list(c2.pairs)
    shared, only1 = [], []
    for p in c1.pairs:
        if p in remaining:
            shared.append(p)
            remaining.remove(p)
        else:
            only1.append(p)
    if len(shared) != 2 or len(only1) != 1 or len(remaining) != 1:
        raise ValueError("configurations must share exactly two couples")
    return all(
        is_involution_det(InvolutionConfig((only1[0], remaining[0], s))) for s in shared
    )
