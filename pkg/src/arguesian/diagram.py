"""Deterministic SVG diagrams of claim scripts.

One horizontal axis, a labelled tick per point, a semicircular arc per
couple, and a marked souche when a souche query resolves.  Output is plain
text built with fixed number formatting, so identical scripts give
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ArguesianError, NothingToRender, UnorderedField
from .involution import InvolutionConfig, find_souche
from .runner import evaluate_bindings
from .script import ClaimScript, PairDecl, QueryClaim


@dataclass(frozen=True)
class RenderStyle:
    width: int = 840
    height: int = 300
    margin_ratio: float = 0.10
    axis_color: str = "#333333"
    arc_color: str = "#1f6fb2"
    point_color: str = "#222222"
    souche_color: str = "#b22222"


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def render(script: ClaimScript, style: RenderStyle | None = None) -> bytes:
    """Draw the script's couples on a number line; requires the ordered field
    and at least one bound pair."""
    style = style or RenderStyle()
    if not script.field.ordered:
        raise UnorderedField("diagrams are drawn on the ordered line only")
    env = evaluate_bindings(script)
    pair_decls = [it for it in script.items if isinstance(it, PairDecl)]
    if not pair_decls:
        raise NothingToRender("script binds no pairs")

    pairs = [(d.name, env[d.name]) for d in pair_decls]
    souches = []
    for item in script.items:
        if isinstance(item, QueryClaim) and item.kind == "souche":
            try:
                s = find_souche(InvolutionConfig(tuple(env[n] for n in item.pairs)))
            except ArguesianError:
                continue
            if not s.is_infinite and s.value.value not in souches:
                souches.append(s.value.value)

    values: list[Fraction] = []
    has_infinite = False
    for _, pair in pairs:
        for p in pair.members:
            if p.is_infinite:
                has_infinite = True
            elif p.value.value not in values:
                values.append(p.value.value)
    for s in souches:
        if s not in values:
            values.append(s)
    if not values:
        raise NothingToRender("no finite points to draw")
    values.sort()

    lo, hi = float(values[0]), float(values[-1])
    span = hi - lo if hi > lo else 1.0
    pad = span * style.margin_ratio
    lo, hi = lo - pad, hi + pad
    usable = style.width - 40.0

    def xpix(v: float) -> float:
        return 20.0 + (v - lo) / (hi - lo) * usable

    baseline = style.height - 60.0
    max_span = max(
        (
            abs(float(p.second.value.value) - float(p.first.value.value))
            for _, p in pairs
            if not p.first.is_infinite and not p.second.is_infinite
        ),
        default=1.0,
    )
    max_arc = baseline - 30.0

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" '
        f'height="{style.height}" viewBox="0 0 {style.width} {style.height}">'
    )
    out.append(f'<rect width="{style.width}" height="{style.height}" fill="#ffffff"/>')
    out.append(
        f'<line x1="{_fmt(10)}" y1="{_fmt(baseline)}" x2="{_fmt(style.width - 10)}" '
        f'y2="{_fmt(baseline)}" stroke="{style.axis_color}" stroke-width="1"/>'
    )

    for name, pair in pairs:
        a, b = pair.members
        if a.is_infinite or b.is_infinite:
            finite = b if a.is_infinite else a
            x1 = xpix(float(finite.value.value))
            x2 = style.width - 12.0
            r = (x2 - x1) / 2.0
            out.append(
                f'<path d="M {_fmt(x1)} {_fmt(baseline)} A {_fmt(r)} {_fmt(min(r, max_arc))} '
                f'0 0 1 {_fmt(x2)} {_fmt(baseline)}" fill="none" '
                f'stroke="{style.arc_color}" stroke-width="1.2" stroke-dasharray="5,3"/>'
            )
            continue
        va, vb = float(a.value.value), float(b.value.value)
        if va == vb:
            x = xpix(va)
            out.append(
                f'<circle cx="{_fmt(x)}" cy="{_fmt(baseline)}" r="4" fill="none" '
                f'stroke="{style.arc_color}" stroke-width="1.2"/>'
            )
            continue
        x1, x2 = sorted((xpix(va), xpix(vb)))
        r = (x2 - x1) / 2.0
        ry = max_arc * (abs(vb - va) / max_span) if max_span else r
        out.append(
            f'<path d="M {_fmt(x1)} {_fmt(baseline)} A {_fmt(r)} {_fmt(ry)} '
            f'0 0 1 {_fmt(x2)} {_fmt(baseline)}" fill="none" '
            f'stroke="{style.arc_color}" stroke-width="1.2"/>'
        )

    for v in values:
        x = xpix(float(v))
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(baseline - 5)}" x2="{_fmt(x)}" '
            f'y2="{_fmt(baseline + 5)}" stroke="{style.point_color}" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(baseline + 22)}" font-size="13" '
            f'font-family="monospace" text-anchor="middle" '
            f'fill="{style.point_color}">{v}</text>'
        )
    if has_infinite:
        x = style.width - 12.0
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(baseline + 22)}" font-size="13" '
            f'font-family="monospace" text-anchor="middle" '
            f'fill="{style.point_color}">inf</text>'
        )

    for s in souches:
        x = xpix(float(s))
        out.append(
            f'<line x1="{_fmt(x)}" y1="{_fmt(baseline - 12)}" x2="{_fmt(x)}" '
            f'y2="{_fmt(baseline + 12)}" stroke="{style.souche_color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{_fmt(x)}" y="{_fmt(baseline + 40)}" font-size="13" '
            f'font-family="monospace" text-anchor="middle" '
            f'fill="{style.souche_color}">souche {s}</text>'
        )

    out.append("</svg>")
    return ("\n".join(out) + "\n").encode("utf-8")
