"""Ordered-line combinatorics of couples: engagement, mingling, node kinds.

Everything here depends on the order of the rationals and is rejected over a
prime field.  Lengths are unsigned; the signed algebra lives in the
involution module.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CoincidentPoints, InfinitePoint, NotAnArbre, UnorderedField
from .involution import Arbre, InvolutionConfig
from .projline import PointPair, ProjPoint


class Mingling(Enum):
    MELES = "meles"
    DEMELES = "demeles"


class NodeKind(Enum):
    MOYEN_SIMPLE = "moyen simple"
    MOYEN_DOUBLE = "moyen double"
    EXTREME = "extreme"


@dataclass(frozen=True)
class NodeLabel:
    """Kind of one couple of nodes; for extremes inside a configuration that
    has middle nodes, the member between them (interieur) and the one outside
    (exterieur) are identified."""

    kind: NodeKind
    interieur: ProjPoint | None = None
    exterieur: ProjPoint | None = None


def _affine(points, what):
    out = []
    for p in points:
        if p.field.ordered is False:
            raise UnorderedField(f"{what} needs the ordered base field")
        if p.is_infinite:
            raise InfinitePoint(f"{what} needs finite points")
        out.append(p.affine())
    return out


def is_engaged(souche: ProjPoint, pair: PointPair) -> bool:
    """True iff the souche lies strictly between the two members."""
    s, x, y = _affine([souche, pair.first, pair.second], "engagement")
    if s == x or s == y or x == y:
        raise CoincidentPoints("engagement needs three distinct points")
    return min(x, y) < s < max(x, y)


def mingled(p1: PointPair, p2: PointPair) -> Mingling:
    """MELES when the two segments properly interleave, DEMELES when they are
    disjoint or nested."""
    a1, b1, a2, b2 = _affine(list(p1.members) + list(p2.members), "mingling")
    pts = [a1, b1, a2, b2]
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise CoincidentPoints("mingling needs four distinct points")
    lo1, hi1 = min(a1, b1), max(a1, b1)
    lo2, hi2 = min(a2, b2), max(a2, b2)
    if lo1 < lo2 < hi1 < hi2 or lo2 < lo1 < hi2 < hi1:
        return Mingling.MELES
    return Mingling.DEMELES


def is_arbre_combinatoire(a: Arbre) -> bool:
    """True iff the souche is engaged in all three couples or in none."""
    verdicts = [is_engaged(a.souche, pair) for pair in a.config.pairs]
    return verdicts[0] == verdicts[1] == verdicts[2]


def is_involution_combinatoire(c: InvolutionConfig) -> bool:
    """True iff any two of the three couples are always mingled, or never."""
    p1, p2, p3 = c.pairs
    verdicts = [mingled(p1, p2), mingled(p1, p3), mingled(p2, p3)]
    return verdicts[0] == verdicts[1] == verdicts[2]


def classify_nodes(a: Arbre) -> tuple[NodeLabel, NodeLabel, NodeLabel]:
    """Label each couple of an arbre.

    A couple equidistant from the souche is a middle couple: simple when its
    members are the two symmetric points (souche engaged), double when they
    coincide (a fixed point).  Unequal distances make an extreme couple; when
    the arbre has middle nodes, exactly one extreme member falls strictly
    between them and is the interieur one.

    The metric condition is checked with unsigned lengths and the engagement
    must be uniform; a configuration with equal unsigned rectangles but mixed
    engagement is rejected as mixed, not silently relabelled.
    """
    s = _affine([a.souche], "node classification")[0]
    coords = []
    for pair in a.config.pairs:
        x, y = _affine(pair.members, "node classification")
        if x == s or y == s:
            raise CoincidentPoints("souche coincides with a node")
        coords.append((x, y))

    products = [abs((x - s) * (y - s)) for x, y in coords]
    if not products[0] == products[1] == products[2]:
        raise NotAnArbre("unsigned rectangles differ")
    effective = [min(x, y) < s < max(x, y) for x, y in coords if x != y]
    if any(effective) and not all(effective):
        raise NotAnArbre("mixed engagement")

    span = None
    for x, y in coords:
        if abs(x - s) == abs(y - s):
            span = abs(x - s)
            break

    labels = []
    for x, y in coords:
        if x == y:
            labels.append(NodeLabel(NodeKind.MOYEN_DOUBLE))
        elif abs(x - s) == abs(y - s):
            labels.append(NodeLabel(NodeKind.MOYEN_SIMPLE))
        elif span is None:
            labels.append(NodeLabel(NodeKind.EXTREME))
        else:
            first, second = (x, y) if abs(x - s) < abs(y - s) else (y, x)
            labels.append(
                NodeLabel(
                    NodeKind.EXTREME,
                    interieur=ProjPoint.finite(first),
                    exterieur=ProjPoint.finite(second),
                )
            )
    return tuple(labels)
