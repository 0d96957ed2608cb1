"""Plane tropical curves from max-plus polynomials in two variables.

The dual subdivision is the projection of the lower hull of the lifted
support ``{(k, -a_k)}``.  Each 2-cell gives a curve vertex (the slope of its
lifted plane); each subdivision edge gives a curve edge perpendicular to it,
bounded when the edge is shared by two cells and a ray otherwise.  Edge
weights are lattice lengths.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional

from .complex import Complex, MaxFace, Ridge
from .exactq import format_fraction, primitive, to_fraction

Point = tuple[int, int]


class PolynomialSyntaxError(ValueError):
    pass


class DegenerateCurve(ValueError):
    """All support points lie on one line: the curve has no vertices."""


@dataclass(frozen=True)
class TropicalPolynomial:
    terms: dict  # (i, j) -> Fraction coefficient

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a tropical polynomial needs at least one term")
        object.__setattr__(self, "terms", {(int(a), int(b)): to_fraction(c) for (a, b), c in self.terms.items()})

    @property
    def support(self) -> list[Point]:
        return sorted(self.terms)

    def __add__(self, other: "TropicalPolynomial") -> "TropicalPolynomial":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = max(terms.get(k, c), c)
        return TropicalPolynomial(terms)

    def __mul__(self, other: "TropicalPolynomial") -> "TropicalPolynomial":
        terms: dict = {}
        for (a, b), c in self.terms.items():
            for (p, q), e in other.terms.items():
                key = (a + p, b + q)
                terms[key] = max(terms.get(key, c + e), c + e)
        return TropicalPolynomial(terms)

    def __str__(self) -> str:
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            coeff = f"({format_fraction(c)})" if c != 0 or not mono else ""
            parts.append(" ".join(p for p in [coeff] + mono if p))
        return " + ".join(parts)


_TOKEN = re.compile(
    r"\s*(?:(?P<paren>\(\s*[-+]?\d+(?:/\d+)?\s*\))|(?P<num>\d+(?:/\d+)?)|(?P<var>[xy])"
    r"(?:\s*\^\s*(?P<exp>\(\s*-?\d+\s*\)|-?\d+))?|(?P<plus>\+))"
)


def parse_polynomial(text: str) -> TropicalPolynomial:
    """Parse e.g. ``"(-1) + x + y + x y + (-1) y^2 + (-1) x^2"``.

    ``+`` is tropical addition (max); juxtaposition is tropical product.
    Repeated monomials are merged by taking the larger coefficient.
    """
    src = text.replace("−", "-").replace("⊕", "+")
    pos = 0
    terms: dict = {}
    current: Optional[list] = None  # [coeff, i, j, seen_coeff, seen_var]
    expect_term = True

    def close():
        nonlocal current
        if current is None:
            raise PolynomialSyntaxError("empty term")
        key = (current[1], current[2])
        coeff = current[0]
        terms[key] = max(terms.get(key, coeff), coeff)
        current = None

    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected input at position {pos}: {src[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("plus"):
            if expect_term:
                raise PolynomialSyntaxError("'+' without a preceding term")
            close()
            expect_term = True
            continue
        if current is None:
            current = [Fraction(0), 0, 0, False, False]
        if m.group("paren") or m.group("num"):
            raw = (m.group("paren") or m.group("num")).strip("() ")
            if current[3] or current[4]:
                raise PolynomialSyntaxError("coefficient must precede the monomial")
            current[0] = Fraction(raw.replace(" ", ""))
            current[3] = True
        else:
            var = m.group("var")
            exp = int((m.group("exp") or "1").strip("() "))
            slot = 1 if var == "x" else 2
            current[slot] += exp
            current[4] = True
        expect_term = False
    if expect_term:
        raise PolynomialSyntaxError("empty polynomial" if not terms else "trailing '+'")
    close()
    return TropicalPolynomial(terms)


def evaluate(f: TropicalPolynomial, z) -> tuple[Fraction, list[Point]]:
    """Max-plus value of ``f`` at ``z`` and the exponents attaining it."""
    zx, zy = (to_fraction(v) for v in z)
    vals = {k: k[0] * zx + k[1] * zy + c for k, c in f.terms.items()}
    best = max(vals.values())
    return best, sorted(k for k, v in vals.items() if v == best)


# --- dual subdivision -----------------------------------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[Point]:
    """Vertices of the 2D convex hull, counter-clockwise, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def lattice_length(a: Point, b: Point) -> int:
    return gcd(abs(b[0] - a[0]), abs(b[1] - a[1]))


@dataclass(frozen=True)
class Cell:
    vertices: tuple[Point, ...]  # counter-clockwise polygon
    points: tuple[Point, ...]  # every support point on the lifted facet
    slope: tuple[Fraction, Fraction]  # the dual curve vertex


@dataclass(frozen=True)
class SDEdge:
    a: Point
    b: Point
    cells: tuple[int, ...]

    @property
    def lattice_length(self) -> int:
        return lattice_length(self.a, self.b)


@dataclass(frozen=True)
class DualSubdivision:
    points: tuple[Point, ...]
    cells: tuple[Cell, ...]
    edges: tuple[SDEdge, ...]
    newton_polytope: tuple[Point, ...]

    @property
    def degenerate(self) -> bool:
        return not self.cells

    @property
    def vertices(self) -> list[Point]:
        """Subdivision vertices (these index the complement regions of the curve)."""
        return sorted({p for e in self.edges for p in (e.a, e.b)})


def _lower_chain(f: TropicalPolynomial):
    """Lower hull of a lifted support lying on one line, as consecutive point pairs."""
    pts = f.support
    base = pts[0]
    direction = primitive([pts[-1][0] - base[0], pts[-1][1] - base[1]]) if len(pts) > 1 else [1, 0]
    param = sorted(((p[0] - base[0]) * direction[0] + (p[1] - base[1]) * direction[1], -f.terms[p], p) for p in pts)
    chain = []
    for t, h, p in param:
        while len(chain) >= 2:
            (t1, h1, _), (t2, h2, _) = chain[-2], chain[-1]
            if (h2 - h1) * (t - t1) >= (h - h1) * (t2 - t1):
                chain.pop()
            else:
                break
        chain.append((t, h, p))
    return [(chain[i][2], chain[i + 1][2]) for i in range(len(chain) - 1)]


def dual_subdivision(f: TropicalPolynomial) -> DualSubdivision:
    pts = f.support
    h = {p: -f.terms[p] for p in pts}
    newton = tuple(convex_hull(pts))
    if len(pts) < 3 or _collinear(pts):
        edges = tuple(SDEdge(a, b, ()) for a, b in _lower_chain(f))
        return DualSubdivision(tuple(sorted({p for e in edges for p in (e.a, e.b)})), (), edges, newton)

    found: list[tuple[frozenset, Cell]] = []
    for p, q, r in combinations(pts, 3):
        det = _cross(p, q, r)
        if det == 0:
            continue
        if any({p, q, r} <= s for s, _ in found):
            continue
        # plane h = ax * x + ay * y + c through the three lifted points
        ax = Fraction((h[q] - h[p]) * (r[1] - p[1]) - (h[r] - h[p]) * (q[1] - p[1]), det)
        ay = Fraction((h[r] - h[p]) * (q[0] - p[0]) - (h[q] - h[p]) * (r[0] - p[0]), det)
        c0 = h[p] - ax * p[0] - ay * p[1]
        on = []
        lower = True
        for s in pts:
            gap = h[s] - (ax * s[0] + ay * s[1] + c0)
            if gap < 0:
                lower = False
                break
            if gap == 0:
                on.append(s)
        if not lower:
            continue
        # every term of the cell ties exactly at z = slope
        cell = Cell(tuple(convex_hull(on)), tuple(sorted(on)), (ax, ay))
        found.append((frozenset(on), cell))

    cells = sorted((cell for _, cell in found), key=lambda c: c.slope)
    edge_cells: dict = {}
    for idx, cell in enumerate(cells):
        vs = cell.vertices
        for i in range(len(vs)):
            a, b = sorted((vs[i], vs[(i + 1) % len(vs)]))
            edge_cells.setdefault((a, b), []).append(idx)
    edges = tuple(SDEdge(a, b, tuple(cs)) for (a, b), cs in sorted(edge_cells.items()))
    points = tuple(sorted({p for c in cells for p in c.points}))
    return DualSubdivision(points, tuple(cells), edges, newton)


def _collinear(pts) -> bool:
    return all(_cross(pts[0], pts[1], p) == 0 for p in pts[2:])


# --- curve -------------------------------------------------------------------------


@dataclass(frozen=True)
class CurveEdge:
    id: str
    kind: str  # "segment" | "ray" | "line"
    start: Optional[str]  # vertex id (None for lines)
    end: Optional[str]  # second vertex id for segments
    direction: tuple[int, int]  # primitive; for segments points from start to end
    weight: int
    dual: tuple[Point, Point]
    anchor: tuple[Fraction, Fraction]  # a point on the edge (start vertex, or a point of a line)


@dataclass(frozen=True)
class Curve:
    polynomial: TropicalPolynomial
    subdivision: DualSubdivision
    vertices: dict  # vertex id -> (x, y)
    edges: tuple[CurveEdge, ...]
    cell_of_vertex: dict = field(default_factory=dict)  # vertex id -> cell index

    @property
    def degenerate(self) -> bool:
        return not self.vertices

    def weighting(self) -> dict:
        return {e.id: Fraction(e.weight) for e in self.edges}

    def degree(self, vid: str) -> int:
        return sum((e.start == vid) + (e.end == vid) for e in self.edges)

    def to_complex(self) -> Complex:
        """The curve as a pure 1-dimensional complex in R^2."""
        ridges = tuple(Ridge(vid, tuple(p), ()) for vid, p in self.vertices.items())
        faces = []
        for e in self.edges:
            d = tuple(Fraction(x) for x in e.direction)
            if e.kind == "segment":
                p, q = self.vertices[e.start], self.vertices[e.end]
                point = tuple((a + b) / 2 for a, b in zip(p, q))
                rids = (e.start, e.end)
            elif e.kind == "ray":
                point = tuple(a + b for a, b in zip(self.vertices[e.start], d))
                rids = (e.start,)
            else:
                point = e.anchor
                rids = ()
            faces.append(MaxFace(e.id, point, (d,), rids))
        return Complex(2, 1, ridges, tuple(faces))

    def to_dict(self) -> dict:
        def vec(v):
            return [format_fraction(x) for x in v]

        return {
            "polynomial": str(self.polynomial),
            "degenerate": self.degenerate,
            "vertices": {vid: vec(p) for vid, p in self.vertices.items()},
            "edges": [
                {
                    "id": e.id,
                    "kind": e.kind,
                    "start": e.start,
                    "end": e.end,
                    "direction": list(e.direction),
                    "weight": e.weight,
                    "dual": [list(e.dual[0]), list(e.dual[1])],
                }
                for e in self.edges
            ],
            "subdivision": {
                "newton_polytope": [list(p) for p in self.subdivision.newton_polytope],
                "cells": [[list(p) for p in c.vertices] for c in self.subdivision.cells],
                "edges": [
                    {"a": list(e.a), "b": list(e.b), "lattice_length": e.lattice_length}
                    for e in self.subdivision.edges
                ],
            },
        }


def _ids(prefix: str, n: int) -> list[str]:
    width = max(2, len(str(max(n - 1, 0))))
    return [f"{prefix}{i:0{width}d}" for i in range(n)]


def curve(f: TropicalPolynomial) -> Curve:
    if len(f.terms) < 2:
        raise DegenerateCurve("a single monomial defines an empty curve")
    sd = dual_subdivision(f)
    vids = _ids("v", len(sd.cells))
    vertices = {vid: cell.slope for vid, cell in zip(vids, sd.cells)}
    eids = _ids("e", len(sd.edges))
    edges = []
    for eid, e in zip(eids, sd.edges):
        ab = (e.b[0] - e.a[0], e.b[1] - e.a[1])
        perp = primitive([-ab[1], ab[0]])
        if not e.cells:
            # lines where the two neighbouring terms of a collinear support tie
            diff = (e.a[0] - e.b[0], e.a[1] - e.b[1])
            lam = (f.terms[e.b] - f.terms[e.a]) / (diff[0] ** 2 + diff[1] ** 2)
            anchor = (lam * diff[0], lam * diff[1])
            edges.append(CurveEdge(eid, "line", None, None, tuple(perp), e.lattice_length, (e.a, e.b), anchor))
        elif len(e.cells) == 2:
            i, j = e.cells
            p, q = sd.cells[i].slope, sd.cells[j].slope
            direction = primitive([q[0] - p[0], q[1] - p[1]])
            edges.append(
                CurveEdge(eid, "segment", vids[i], vids[j], tuple(direction), e.lattice_length, (e.a, e.b), p)
            )
        else:
            i = e.cells[0]
            cell = sd.cells[i]
            other = next(v for v in cell.vertices if v not in (e.a, e.b))
            # outward: the edge endpoints beat the rest of the cell along the ray
            if perp[0] * (other[0] - e.a[0]) + perp[1] * (other[1] - e.a[1]) > 0:
                perp = [-perp[0], -perp[1]]
            edges.append(
                CurveEdge(eid, "ray", vids[i], None, tuple(perp), e.lattice_length, (e.a, e.b), cell.slope)
            )
    return Curve(f, sd, vertices, tuple(edges), {vid: i for i, vid in enumerate(vids)})


# --- structural necessary conditions ---------------------------------------------


def structure_report(c: Curve) -> dict:
    """Combinatorial necessary conditions for extremality of a plane curve."""
    from .rigidity import pebble_game_23

    degrees = {vid: c.degree(vid) for vid in c.vertices}
    trivalent = [vid for vid, k in degrees.items() if k == 3]
    rays = [e for e in c.edges if e.kind == "ray"]
    regions = c.subdivision.vertices
    sides = {p: 0 for p in regions}
    for e in c.subdivision.edges:
        sides[e.a] += 1
        sides[e.b] += 1
    separated_pairs = []
    by_vertex: dict = {}
    for e in rays:
        by_vertex.setdefault(e.start, []).append(e)
    for vid, es in sorted(by_vertex.items()):
        for e1, e2 in combinations(es, 2):
            if not set(e1.dual) & set(e2.dual):
                separated_pairs.append([e1.id, e2.id])
    graph_edges = [(e.a, e.b) for e in c.subdivision.edges]
    rigid, _ = pebble_game_23(regions, graph_edges)

    checks = {}
    if c.vertices:
        checks["has_trivalent_vertex"] = bool(trivalent)
        if len(trivalent) == 1:
            others_ok = all(k == 4 for vid, k in degrees.items() if vid != trivalent[0])
            checks["single_trivalent_shape"] = others_ok and len(rays) == 3
    checks["not_all_faces_triangular"] = not (len(regions) >= 7 and all(s <= 3 for s in sides.values()))
    checks["no_separated_half_edges"] = not separated_pairs
    checks["dual_graph_rigid"] = rigid
    passes = all(checks.values())
    return {
        "degrees": dict(sorted(degrees.items())),
        "trivalent_vertices": trivalent,
        "half_edges": len(rays),
        "faces": len(regions),
        "max_face_sides": max(sides.values()) if sides else 0,
        "separated_half_edge_pairs": separated_pairs,
        "checks": checks,
        "verdict": "necessary conditions pass" if passes else "not extremal",
    }
