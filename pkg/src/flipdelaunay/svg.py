"""Deterministic SVG drawings of triangulations."""

from __future__ import annotations

from decimal import Context, Decimal
from fractions import Fraction
from pathlib import Path

from .engine import illegal_edges
from .geometry import circumcenter
from .hypermap import OrbitKind

SIZE = 1000
MARGIN = 50
_CTX = Context(prec=9)


def _text(value: Decimal) -> str:
    text = format(value, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _dec(q: Fraction) -> str:
    """``q`` rounded to 9 significant digits."""
    return _text(_CTX.divide(Decimal(q.numerator), Decimal(q.denominator)))


def _sqrt(q: Fraction) -> str:
    return _text(_CTX.sqrt(_CTX.divide(Decimal(q.numerator), Decimal(q.denominator))))


def render_svg(t, path=None, highlight_illegal: bool = True) -> str:
    """One line per edge, one filled circle per vertex, circumcircles of illegal edges.

    Coordinates are fitted into a fixed viewBox; the text depends only on the
    map, so rendering twice yields identical bytes.  Writes to ``path`` when
    given and returns the SVG text either way.
    """
    m = getattr(t, "map", t)
    loc = m.locations()
    points = list(loc.values())
    xmin, xmax = min(p.x for p in points), max(p.x for p in points)
    ymin, ymax = min(p.y for p in points), max(p.y for p in points)
    span = max(xmax - xmin, ymax - ymin) or Fraction(1)
    scale = Fraction(SIZE - 2 * MARGIN) / span

    def sx(x):
        return _dec(MARGIN + (x - xmin) * scale)

    def sy(y):
        return _dec(SIZE - MARGIN - (y - ymin) * scale)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" '
        f'width="{SIZE}" height="{SIZE}">',
        '<g stroke="black" stroke-width="1.5">',
    ]
    for edge in sorted(m.orbits(OrbitKind.DIM0), key=min):
        a, b = loc[edge[0]], loc[edge[-1]]
        out.append(f'<line class="edge" x1="{sx(a.x)}" y1="{sy(a.y)}" '
                   f'x2="{sx(b.x)}" y2="{sy(b.y)}"/>')
    out.append("</g>")
    if highlight_illegal:
        out.append('<g fill="none" stroke="red" stroke-width="1">')
        for d in illegal_edges(m):
            p, q, r = (loc[e] for e in m.orbit(OrbitKind.FACE, d))
            c = circumcenter(p, q, r)
            r2 = ((p.x - c.x) ** 2 + (p.y - c.y) ** 2) * scale * scale
            out.append(f'<circle class="circumcircle" cx="{sx(c.x)}" cy="{sy(c.y)}" '
                       f'r="{_sqrt(r2)}"/>')
        out.append("</g>")
    out.append('<g fill="black">')
    vertices = sorted(loc[v[0]] for v in m.orbits(OrbitKind.DIM1))
    for p in vertices:
        out.append(f'<circle class="vertex" cx="{sx(p.x)}" cy="{sy(p.y)}" r="4"/>')
    out.append("</g>")
    out.append("</svg>")
    text = "\n".join(out) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
