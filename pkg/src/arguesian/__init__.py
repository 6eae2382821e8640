"""Exact involution geometry on the projective line.

Couples of collinear points, the equal-rectangles condition at a souche,
involutions in rectangle-ratio, cross-ratio and pairing-relation form,
harmonic division, ordered-line combinatorics of nodes, the conic
constructions that generate involutions, and a small claim-script language
for checking all of it exactly over the rationals or an odd prime field.
"""

from .errors import ArguesianError
from .fields import Field, PrimeField, Q, RationalField, Scalar, is_square, make_rational, sqrt
from .involution import (
    Arbre,
    InvolutionClass,
    InvolutionConfig,
    InvolutionKind,
    InvolutiveMap,
    central_point,
    classify,
    completes_involution,
    find_souche,
    fixed_points,
    involution_from_pairs,
    is_arbre,
    is_involution_cr,
    is_involution_det,
    is_involution_four,
    is_involution_rect,
    map_from_config,
    reciprocal_souches,
    sixth_point,
)
from .ordering import (
    Mingling,
    NodeKind,
    NodeLabel,
    classify_nodes,
    is_arbre_combinatoire,
    is_engaged,
    is_involution_combinatoire,
    mingled,
)
from .plane import (
    Conic,
    LineChart,
    PlaneLine,
    PlanePoint,
    central_projection,
    circle_param,
    figure1_check,
    inscribed_quadrilateral_pairs,
    join,
    line_conic_points,
    meet,
    pappus_lemma_check,
    polar,
)
from .projline import (
    Homography,
    PointPair,
    ProjPoint,
    apply,
    cross_ratio,
    homography_from_three_points,
    is_harmonic,
)
from .proportions import Proportion, Rule, transform
from .runner import Report, SuiteReport, random_suite, run_script
from .script import ClaimScript, parse_script, print_script
from .diagram import RenderStyle, render

__version__ = "0.1.0"
