"""Classical proportion calculus as executable rewrite rules.

A Proportion is a checked value: a/b = c/d holds exactly at construction, so
the rules below only ever see true proportions and their outputs satisfy the
same invariant (closure).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidProportion, RuleInapplicable
from .fields import Scalar


@dataclass(frozen=True)
class Proportion:
    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        if not self.b or not self.d:
            raise InvalidProportion("zero denominator")
        if self.a * self.d != self.b * self.c:
            raise InvalidProportion(f"{self.a}/{self.b} != {self.c}/{self.d}")

    def __str__(self):
        return f"{self.a}/{self.b} = {self.c}/{self.d}"


class Rule(Enum):
    ALTERNANDO = "alternando"    # a/c = b/d
    COMPONENDO = "componendo"    # (a+b)/b = (c+d)/d
    DIVIDENDO = "dividendo"      # (a-b)/b = (c-d)/d
    INVERTENDO = "invertendo"    # b/a = d/c
    CONVERTENDO = "convertendo"  # a/(a-b) = c/(c-d)
    V12_SUM = "v12sum"           # a/b = (a+c)/(b+d)


def transform(p: Proportion, rule: Rule) -> Proportion:
    """Apply one rewrite rule; raises RuleInapplicable when a denominator of
    the result would vanish."""
    a, b, c, d = p.a, p.b, p.c, p.d
    if rule is Rule.ALTERNANDO:
        if not c:
            raise RuleInapplicable("alternando needs c != 0")
        return Proportion(a, c, b, d)
    if rule is Rule.COMPONENDO:
        return Proportion(a + b, b, c + d, d)
    if rule is Rule.DIVIDENDO:
        return Proportion(a - b, b, c - d, d)
    if rule is Rule.INVERTENDO:
        if not a:
            raise RuleInapplicable("invertendo needs a != 0")
        return Proportion(b, a, d, c)
    if rule is Rule.CONVERTENDO:
        if a == b:
            raise RuleInapplicable("convertendo needs a != b")
        return Proportion(a, a - b, c, c - d)
    if rule is Rule.V12_SUM:
        if not b + d:
            raise RuleInapplicable("sum rule needs b + d != 0")
        return Proportion(a, b, a + c, b + d)
    raise ValueError(f"unknown rule {rule!r}")
