"""Seeded random generators for the property suites.

Every generator takes an explicit random.Random so whole suites are
reproducible from (seed, case index); nothing here touches global state.
"""

from __future__ import annotations

from random import Random

from .fields import Field, Scalar
from .involution import InvolutionConfig, InvolutiveMap, central_point
from .projline import Homography, PointPair, ProjPoint


def derive_rng(seed: int, label: str, index: int) -> Random:
    """Deterministic per-case generator (string seeding is version-stable)."""
    return Random(f"{seed}:{label}:{index}")


def random_scalar(rnd: Random, field: Field, span: int = 12) -> Scalar:
    if field.ordered:
        num = rnd.randint(-span, span)
        den = rnd.randint(1, 6)
        return field.scalar(num) / field.scalar(den)
    return field.scalar(rnd.randrange(field.p))


def random_nonzero_scalar(rnd: Random, field: Field, span: int = 12) -> Scalar:
    while True:
        x = random_scalar(rnd, field, span)
        if x:
            return x


def random_point(rnd: Random, field: Field, allow_infinite: bool = False) -> ProjPoint:
    if allow_infinite and rnd.random() < 0.1:
        return ProjPoint.infinity(field)
    return ProjPoint.finite(random_scalar(rnd, field))


def random_homography(rnd: Random, field: Field) -> Homography:
    while True:
        coeffs = [random_scalar(rnd, field, 8) for _ in range(4)]
        if coeffs[0] * coeffs[3] - coeffs[1] * coeffs[2]:
            return Homography(*coeffs)


def random_involutive_map(rnd: Random, field: Field, force_alpha: bool = False) -> InvolutiveMap:
    """A random nonsingular pairing relation; force_alpha keeps the central
    point finite."""
    while True:
        alpha = random_scalar(rnd, field, 8)
        if force_alpha and not alpha:
            continue
        beta = random_scalar(rnd, field, 8)
        gamma = random_scalar(rnd, field, 8)
        if (alpha or beta or gamma) and beta * beta - alpha * gamma:
            return InvolutiveMap(alpha, beta, gamma)


def random_hyperbolic_map(rnd: Random, field: Field) -> InvolutiveMap:
    """Built from two prescribed finite fixed points, so always hyperbolic."""
    from .involution import involution_from_pairs

    while True:
        k = random_scalar(rnd, field)
        l = random_scalar(rnd, field)
        if k != l:
            pk = ProjPoint.finite(k)
            pl = ProjPoint.finite(l)
            return involution_from_pairs(PointPair(pk, pk), PointPair(pl, pl))


def random_config_from_map(
    rnd: Random,
    m: InvolutiveMap,
    finite_only: bool = True,
    distinct: bool = True,
) -> InvolutionConfig:
    """Three orbit couples of the map, generically six distinct points."""
    pairs: list[PointPair] = []
    used: list[ProjPoint] = []
    guard = 0
    while len(pairs) < 3:
        guard += 1
        if guard > 2000:
            raise RuntimeError("could not sample a configuration (field too small?)")
        x = ProjPoint.finite(random_scalar(rnd, m.field))
        y = m.apply(x)
        if finite_only and y.is_infinite:
            continue
        if distinct and (x == y or x in used or y in used):
            continue
        pairs.append(PointPair(x, y))
        used.extend([x, y])
    return InvolutionConfig(tuple(pairs))


def random_involution_config(rnd: Random, field: Field, **kw) -> InvolutionConfig:
    return random_config_from_map(rnd, random_involutive_map(rnd, field), **kw)


def random_arbre_config(rnd: Random, field: Field) -> tuple[ProjPoint, InvolutionConfig]:
    """A finite souche with three couples satisfying the equal-rectangles
    condition (the couples are orbit pairs of a map with that central point)."""
    from .involution import is_involution_det

    while True:
        a = random_scalar(rnd, field, 10)
        alpha = random_nonzero_scalar(rnd, field, 10)
        # relation (x - a)(y - a) = alpha, i.e. xy - a(x+y) + a^2 - alpha = 0
        m = InvolutiveMap(field.one(), -a, a * a - alpha)
        config = random_config_from_map(rnd, m)
        if all(not p == ProjPoint.finite(a) for p in config.points()):
            assert is_involution_det(config)
            return ProjPoint.finite(a), config


def random_non_involution(rnd: Random, field: Field) -> InvolutionConfig:
    """A perturbed configuration guaranteed to fail the involution relation."""
    from .involution import is_involution_det

    while True:
        config = random_involution_config(rnd, field)
        pairs = list(config.pairs)
        which = rnd.randrange(3)
        x, y = pairs[which].members
        delta = random_nonzero_scalar(rnd, field, 5)
        moved = ProjPoint.finite(y.affine() + delta)
        if moved == x or any(moved == p for p in config.points()):
            continue
        pairs[which] = PointPair(x, moved)
        candidate = InvolutionConfig(tuple(pairs))
        if not is_involution_det(candidate):
            return candidate


def random_harmonic_pairs(rnd: Random, field: Field) -> tuple[PointPair, PointPair]:
    """A harmonic quadruple of four finite points: a fixed couple and one
    orbit couple of the involution fixing it."""
    while True:
        m = random_hyperbolic_map(rnd, field)
        fixed_k = (-m.beta + m.delta.sqrt()) / m.alpha
        fixed_l = (-m.beta - m.delta.sqrt()) / m.alpha
        x = ProjPoint.finite(random_scalar(rnd, field))
        y = m.apply(x)
        if y.is_infinite or x == y:
            continue
        if x.affine() in (fixed_k, fixed_l):
            continue
        return (
            PointPair(ProjPoint.finite(fixed_k), ProjPoint.finite(fixed_l)),
            PointPair(x, y),
        )


def random_sum_involution(rnd: Random, field: Field) -> InvolutiveMap:
    """A map pairing the souche with infinity at infinity itself: x -> s - x."""
    s = random_scalar(rnd, field, 10)
    return InvolutiveMap(field.zero(), field.one(), -s)


def shared_pair_instance(
    rnd: Random, field: Field
) -> tuple[InvolutionConfig, InvolutionConfig]:
    """Two involutions sharing exactly two couples (possibly different maps)."""
    m1 = random_involutive_map(rnd, field)
    base = random_config_from_map(rnd, m1)
    shared = base.pairs[:2]
    while True:
        x = ProjPoint.finite(random_scalar(rnd, field))
        y = m1.apply(x)
        if y.is_infinite or x == y:
            continue
        extra = PointPair(x, y)
        if extra in base.pairs:
            continue
        second = InvolutionConfig((shared[0], shared[1], extra))
        if base.pairs[2] != extra:
            return base, second


def random_central_point_map(rnd: Random, field: Field) -> tuple[ProjPoint, InvolutiveMap]:
    m = random_involutive_map(rnd, field, force_alpha=True)
    return central_point(m), m
