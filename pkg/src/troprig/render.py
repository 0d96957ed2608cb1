"""Deterministic SVG drawings of plane curves, subdivisions and frameworks.

The view box is the bounding box of the bounded features padded by 20% on
each side; rays and lines are clipped to it.  Coordinates are printed with a
fixed number of decimals so identical inputs give identical bytes.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, floor
from typing import Optional

from .complex import Complex
from .rigidity import Framework
from .tropcurve import Curve, DualSubdivision

SIZE = 400
PAD = Fraction(1, 5)


class RenderError(ValueError):
    pass


class _Canvas:
    def __init__(self, points):
        pts = list(points) or [(Fraction(0), Fraction(0))]
        xs = [Fraction(p[0]) for p in pts]
        ys = [Fraction(p[1]) for p in pts]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0) or Fraction(2)
        cx, cy = (x0 + x1) / 2, (y0 + y1) / 2
        w = max(x1 - x0, span / 4) * (1 + 2 * PAD)
        h = max(y1 - y0, span / 4) * (1 + 2 * PAD)
        self.x0, self.x1 = cx - w / 2, cx + w / 2
        self.y0, self.y1 = cy - h / 2, cy + h / 2
        self.scale = Fraction(SIZE) / max(w, h)
        self.body: list[str] = []

    def xy(self, p) -> tuple[str, str]:
        x = (Fraction(p[0]) - self.x0) * self.scale
        y = (self.y1 - Fraction(p[1])) * self.scale
        return f"{float(x):.3f}", f"{float(y):.3f}"

    def clip_ray(self, start, direction, both_ways: bool = False) -> Optional[tuple]:
        """Segment of ``start + t*direction`` (t >= 0, or all t) inside the box."""
        lo, hi = (None, None) if both_ways else (Fraction(0), None)
        for s, d, a, b in ((start[0], direction[0], self.x0, self.x1), (start[1], direction[1], self.y0, self.y1)):
            s, d = Fraction(s), Fraction(d)
            if d == 0:
                if not a <= s <= b:
                    return None
                continue
            t1, t2 = sorted(((a - s) / d, (b - s) / d))
            lo = t1 if lo is None else max(lo, t1)
            hi = t2 if hi is None else min(hi, t2)
        if lo is None or hi is None or lo > hi:
            return None
        p = tuple(Fraction(s) + lo * Fraction(d) for s, d in zip(start, direction))
        q = tuple(Fraction(s) + hi * Fraction(d) for s, d in zip(start, direction))
        return p, q

    def line(self, p, q, cls: str, stroke: str = "#000", width: str = "2", dash: bool = False):
        (x1, y1), (x2, y2) = self.xy(p), self.xy(q)
        extra = ' stroke-dasharray="4 3"' if dash else ""
        self.body.append(
            f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="{width}"{extra}/>'
        )

    def dot(self, p, r: str = "4", fill: str = "#000"):
        x, y = self.xy(p)
        self.body.append(f'<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}"/>')

    def label(self, p, text: str):
        x, y = self.xy(p)
        self.body.append(
            f'<text x="{x}" y="{y}" font-size="14" font-family="sans-serif" fill="#c00" dx="4" dy="-4">{text}</text>'
        )

    def grid(self):
        for gx in range(ceil(self.x0), floor(self.x1) + 1):
            self.line((gx, self.y0), (gx, self.y1), "lattice", "#bbb", "1")
        for gy in range(ceil(self.y0), floor(self.y1) + 1):
            self.line((self.x0, gy), (self.x1, gy), "lattice", "#bbb", "1")

    def svg(self) -> str:
        w = float((self.x1 - self.x0) * self.scale)
        h = float((self.y1 - self.y0) * self.scale)
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.3f}" height="{h:.3f}" '
            f'viewBox="0 0 {w:.3f} {h:.3f}">'
        )
        return "\n".join([head, '<rect width="100%" height="100%" fill="#fff"/>', *self.body, "</svg>"]) + "\n"


def _mid(p, q):
    return tuple((Fraction(a) + Fraction(b)) / 2 for a, b in zip(p, q))


def render_curve(c: Curve) -> str:
    bounded = list(c.vertices.values()) or [e.anchor for e in c.edges]
    cv = _Canvas(bounded)
    for e in c.edges:
        if e.kind == "segment":
            p, q = c.vertices[e.start], c.vertices[e.end]
        else:
            start = c.vertices[e.start] if e.kind == "ray" else e.anchor
            seg = cv.clip_ray(start, e.direction, both_ways=e.kind == "line")
            if seg is None:
                continue
            p, q = seg
        cv.line(p, q, e.kind)
        if e.weight > 1:
            cv.label(_mid(p, q), str(e.weight))
    for p in c.vertices.values():
        cv.dot(p)
    return cv.svg()


def render_subdivision(sd: DualSubdivision) -> str:
    cv = _Canvas(sd.newton_polytope)
    cv.grid()
    for e in sd.edges:
        cv.line(e.a, e.b, "sd-edge")
    for p in sd.points:
        cv.dot(p)
    return cv.svg()


def render_framework(fw: Framework, lattice: bool = True) -> str:
    if fw.dim != 2:
        raise RenderError(f"cannot draw a framework in dimension {fw.dim}")
    cv = _Canvas(fw.vertices.values())
    if lattice:
        cv.grid()
    for u, v in fw.edges:
        cv.line(fw.vertices[u], fw.vertices[v], "bar")
    for p in fw.vertices.values():
        cv.dot(p, "5", "#036")
    return cv.svg()


def render_complex(c: Complex, weights: Optional[dict] = None) -> str:
    """A 1-dimensional complex in the plane: two-ridge faces as segments, one-ridge faces as rays."""
    if c.ambient_dim != 2 or c.dim != 1:
        raise RenderError(f"cannot draw a {c.dim}-dimensional complex in R^{c.ambient_dim}")
    pts = [r.point for r in c.ridges] or [f.point for f in c.faces]
    cv = _Canvas(pts)
    for f in c.faces:
        ends = [c.ridge(r).point for r in f.ridges]
        if len(ends) == 2:
            p, q = ends
        else:
            start = ends[0] if ends else f.point
            seg = cv.clip_ray(start, f.basis[0] if not ends else [a - b for a, b in zip(f.point, ends[0])], not ends)
            if seg is None:
                continue
            p, q = seg
        cv.line(p, q, "face")
        w = (weights or {}).get(f.id)
        if w is not None and w != 1:
            cv.label(_mid(p, q), str(w))
    for r in c.ridges:
        cv.dot(r.point)
    return cv.svg()
