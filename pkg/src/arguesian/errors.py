"""Exception hierarchy for the whole library.

Every domain error derives from ArguesianError so callers (and the claim
runner, which converts them into report entries) can catch one base type.
"""

from __future__ import annotations


class ArguesianError(Exception):
    """Base class for all library errors."""

    @property
    def kind(self) -> str:
        return type(self).__name__


# -- fields ------------------------------------------------------------------

class InvalidField(ArguesianError):
    """Field specification rejected (characteristic 2, composite modulus)."""


class ZeroDenominator(ArguesianError):
    """Rational constructed with denominator 0."""


class NotASquare(ArguesianError):
    """Square root requested of a non-square element."""


class UnorderedField(ArguesianError):
    """Order-dependent operation invoked over a prime field."""


# -- projective line ---------------------------------------------------------

class InvalidPoint(ArguesianError):
    """Homogeneous coordinates (0, 0) or (0, 0, 0)."""


class DegenerateQuadruple(ArguesianError):
    """Cross-ratio or harmonic test on a degenerate quadruple."""


class DegenerateTriple(ArguesianError):
    """Homography interpolation with coincident source or target points."""


# -- involutions -------------------------------------------------------------

class InfinitePoint(ArguesianError):
    """A finite-chart operation received the point at infinity."""


class CoincidentPoints(ArguesianError):
    """Points required to be distinct coincide."""


class NotAnInvolution(ArguesianError):
    """Configuration does not satisfy the involution relation."""


class DegenerateInvolution(ArguesianError):
    """The fitted pairing relation is singular (discriminant zero)."""


class NoFixedPoints(ArguesianError):
    """Fixed points requested of an elliptic involution."""


class NotHarmonic(ArguesianError):
    """Pairs are not in harmonic division."""


class NotAnArbre(ArguesianError):
    """Configuration fails the equal-rectangles condition at the souche."""


# -- plane / conics ----------------------------------------------------------

class DegenerateConic(ArguesianError):
    """Conic matrix is singular."""


class NonRationalIntersection(ArguesianError):
    """Line meets the conic only at points with irrational coordinates."""


class DegenerateParameter(ArguesianError):
    """Circle parameter t with 1 + t^2 = 0 (possible over some prime fields)."""


class DegenerateConfiguration(ArguesianError):
    """Plane construction collapsed (point on conic, concurrent chords, ...)."""


class CenterOnLine(ArguesianError):
    """Projection center lies on the source or target line."""


class PreconditionViolated(ArguesianError):
    """Stated hypothesis of a checked lemma does not hold for the input."""


# -- proportions -------------------------------------------------------------

class InvalidProportion(ArguesianError):
    """Quadruple does not satisfy a/b = c/d or has a zero denominator."""


class RuleInapplicable(ArguesianError):
    """Proportion rewrite would produce a zero denominator."""


# -- claim scripts -----------------------------------------------------------

class ScriptError(ArguesianError):
    """Base for parse-time script errors; carries source position."""

    def __init__(self, message: str, line: int, column: int = 0):
        super().__init__(f"line {line}:{column}: {message}")
        self.line = line
        self.column = column


class ScriptSyntaxError(ScriptError):
    pass


class UnboundName(ScriptError):
    pass


class DuplicateName(ScriptError):
    pass


class FieldRedeclared(ScriptError):
    pass


# -- rendering ---------------------------------------------------------------

class NothingToRender(ArguesianError):
    """Script binds no point pairs, so there is no diagram to draw."""
