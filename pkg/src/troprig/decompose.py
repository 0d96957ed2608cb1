"""Extremal decompositions by walking edges of the weight polytope P(C).

Starting from a simplex vertex ``w`` of P(C), each step fixes ``n - 2`` of the
zero coordinates of ``w`` (``n = dim ker R(C)^T``), which cuts the weight cone
down to a 2-dimensional space through ``w``.  The residual direction is
walked until a coordinate hits zero, landing on a new vertex.  This repeats
until every face is covered by some collected vertex.  A bounded shrinking
pass afterwards looks for a smaller spanning set of vertices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .balance import NotATropicalVariety, Weighting, build_r, is_extremal
from .complex import Complex
from .cone import (
    DEFAULT_LIMIT,
    enumerate_vertices_bruteforce,
    find_vertex,
    is_simplex,
    is_vertex,
    positive_weighting,
    weight_polytope,
    EnumerationLimitExceeded,
)
from .exactq import RatMatrix, format_fraction, kernel_basis, left_kernel_basis, rank

log = logging.getLogger(__name__)

EXPLORE_LIMIT = 64
COVER_BUDGET = 200_000


class EdgeWalkStuck(RuntimeError):
    pass


@dataclass
class Decomposition:
    complex: Complex
    parts: list  # list of (support ids, Weighting), weighting normalized to sum 1
    certificates: list = field(default_factory=list)
    covering: list = field(default_factory=list)
    unique: Optional[bool] = None
    bound_m: int = 0
    method: str = "edge-walk"

    def supports(self) -> list[frozenset]:
        return [frozenset(s) for s, _ in self.parts]

    def to_dict(self) -> dict:
        return {
            "parts": [
                {"support": list(s), "weighting": {fid: format_fraction(v) for fid, v in w.values.items() if v != 0}}
                for s, w in self.parts
            ],
            "unique": self.unique,
            "bound_m": self.bound_m,
        }


def decomposition_upper_bound(c) -> int:
    r = c if isinstance(c, RatMatrix) else build_r(c).r
    return r.rows - rank(r)


def _zero_set(x) -> list[int]:
    return [i for i, v in enumerate(x) if v == 0]


def _restricted_plane(basis, zeros: Sequence[int]) -> list[list[Fraction]]:
    """Kernel vectors (full coordinates) vanishing on ``zeros``."""
    n = len(basis)
    m = len(basis[0])
    if zeros:
        coeffs = kernel_basis([[basis[k][z] for k in range(n)] for z in zeros])
    else:
        coeffs = [[Fraction(int(i == k)) for k in range(n)] for i in range(n)]
    return [[sum((a[k] * basis[k][i] for k in range(n)), Fraction(0)) for i in range(m)] for a in coeffs]


def _parallel(u, v) -> bool:
    return rank([u, v]) < 2


def _edge_step(r, basis, omega, zeros, J, targets) -> Optional[list[Fraction]]:
    """Walk from ``omega`` along the edge cut out by ``x_J = 0``.

    Returns the new vertex, or ``None`` when the sign conditions fail: the
    direction must stay nonnegative on the zero set of ``omega`` and be
    positive on some coordinate in ``targets``.
    """
    plane = _restricted_plane(basis, J)
    if len(plane) != 2:
        return None
    y = next((v for v in plane if not _parallel(v, omega)), None)
    if y is None:
        return None
    s = sum(y)
    x = [a - s * b for a, b in zip(y, omega)]
    for sign in (1, -1):
        xs = [sign * v for v in x]
        if any(xs[i] < 0 for i in zeros):
            continue
        if targets is not None and not any(xs[j] > 0 for j in targets):
            continue
        neg = [(omega[e] / -xs[e]) for e in range(len(xs)) if xs[e] < 0]
        if not neg:
            continue
        t = min(neg)
        new = [a + t * b for a, b in zip(omega, xs)]
        if is_vertex(r, new):
            return new
    return None


def edge_walk(r: RatMatrix, start: Optional[list] = None) -> list[list[Fraction]]:
    """The seven-step spanning-vertex search; raises :class:`EdgeWalkStuck`."""
    basis = left_kernel_basis(r)
    n = len(basis)
    omega = start if start is not None else find_vertex(r)
    if omega is None:
        raise NotATropicalVariety("P(C) is empty")
    found = [list(omega)]
    zeros = _zero_set(omega)
    uncovered = list(zeros)
    if n <= 1:
        return found
    while uncovered:
        first = uncovered[0]
        subsets = list(combinations(zeros, n - 2))
        # prefer J avoiding the smallest uncovered coordinate
        subsets.sort(key=lambda J: (first in J, J))
        step = None
        for J in subsets:
            targets = [j for j in uncovered if j not in J]
            if not targets:
                continue
            step = _edge_step(r, basis, omega, zeros, J, targets)
            if step is not None:
                break
        if step is None:
            raise EdgeWalkStuck(f"no edge reaches coordinates {uncovered}")
        found.append(step)
        uncovered = [i for i in uncovered if step[i] == 0]
    return found


def _neighbors(r, basis, v) -> list[list[Fraction]]:
    n = len(basis)
    zeros = _zero_set(v)
    out = []
    for J in combinations(zeros, max(n - 2, 0)):
        step = _edge_step(r, basis, v, zeros, J, None)
        if step is not None and step not in out:
            out.append(step)
    return out


def _min_cover(vertices, m, upper: int) -> Optional[list[int]]:
    """Smallest index subset (size < upper) whose supports cover ``range(m)``."""
    masks = [sum(1 << i for i, x in enumerate(v) if x != 0) for v in vertices]
    full = (1 << m) - 1
    budget = COVER_BUDGET
    for size in range(1, upper):
        for combo in combinations(range(len(vertices)), size):
            budget -= 1
            if budget < 0:
                return None
            acc = 0
            for i in combo:
                acc |= masks[i]
            if acc == full:
                return list(combo)
    return None


def _shrink(r, spanning, n) -> list[list[Fraction]]:
    """Search nearby vertices for a smaller spanning set.

    Stops at two parts, once the non-simplex bound ``floor((n-1)/2) + 1`` is
    met with more than ``n`` vertices seen, when the vertex graph is exhausted,
    or after ``EXPLORE_LIMIT`` vertices.
    """
    m = r.rows
    basis = left_kernel_basis(r)
    known = [list(v) for v in spanning]
    best = _min_cover(known, m, len(known) + 1) or list(range(len(known)))
    chosen = [known[i] for i in best]
    queue = list(known)
    bound = (n - 1) // 2 + 1
    while queue and len(chosen) > 2 and len(known) < EXPLORE_LIMIT:
        if len(known) > n and len(chosen) <= bound:
            break
        v = queue.pop(0)
        for w in _neighbors(r, basis, v):
            if w not in known:
                known.append(w)
                queue.append(w)
        better = _min_cover(known, m, len(chosen))
        if better is not None:
            chosen = [known[i] for i in better]
    return chosen


def _greedy_cover(vertices, m) -> list:
    uncovered = set(range(m))
    chosen = []
    while uncovered:
        best = max(vertices, key=lambda v: (len([i for i in uncovered if v[i] != 0]), [-x for x in v]))
        gain = {i for i in uncovered if best[i] != 0}
        if not gain:
            raise NotATropicalVariety("vertex supports do not cover every face")
        chosen.append(best)
        uncovered -= gain
    return chosen


def _package(c: Complex, r, vertices, method: str) -> Decomposition:
    parts = []
    certs = []
    for v in sorted(tuple(x) for x in vertices):
        w = Weighting.from_vector(c, v)
        parts.append((w.support, w))
        certs.append(is_extremal(c.subcomplex(w.support)).to_dict())
    k = len(parts)
    covering = [sum((w.vector()[i] for _, w in parts), Fraction(0)) / k for i in range(r.rows)]
    return Decomposition(c, parts, certs, covering, None, r.rows - rank(r), method)


def decompose(c: Complex, oracle: bool = False, limit: int = DEFAULT_LIMIT, shrink: bool = True) -> Decomposition:
    """Extremal decomposition of a tropical variety.

    ``oracle=True`` enumerates all P(C) vertices by brute force and picks a
    minimum cover; otherwise the edge walk runs, falling back to the oracle if
    it gets stuck.
    """
    r = build_r(c).r
    if positive_weighting(r) is None:
        raise NotATropicalVariety("no strictly positive balanced weighting exists")
    n = r.rows - rank(r)
    if n == 1:
        dec = _package(c, r, [find_vertex(r)], "rank")
        dec.unique = True
        return dec
    method = "edge-walk"
    if not oracle:
        try:
            vertices = edge_walk(r)
            if shrink:
                vertices = _shrink(r, vertices, n)
        except EdgeWalkStuck as exc:
            log.warning("edge walk stuck (%s); falling back to vertex enumeration", exc)
            oracle = True
            method = "fallback"
    if oracle:
        allv = enumerate_vertices_bruteforce(r, limit)
        cover = _min_cover(allv, r.rows, len(allv) + 1)
        vertices = [allv[i] for i in cover] if cover is not None else _greedy_cover(allv, r.rows)
        if method == "edge-walk":
            method = "oracle"
    dec = _package(c, r, vertices, method)
    try:
        dec.unique = is_simplex(weight_polytope(r, limit))
    except EnumerationLimitExceeded:
        dec.unique = None
    return dec


def unique_decomposition(c: Complex, limit: int = DEFAULT_LIMIT) -> Optional[Decomposition]:
    """The decomposition into all P(C) vertices when P(C) is a simplex, else ``None``."""
    r = build_r(c).r
    if positive_weighting(r) is None:
        raise NotATropicalVariety("no strictly positive balanced weighting exists")
    p = weight_polytope(r, limit)
    if not is_simplex(p):
        return None
    dec = _package(c, r, p.vertices, "oracle")
    dec.unique = True
    return dec


def _part_vectors(c: Complex, parts) -> list[list[Fraction]]:
    out = []
    for p in parts:
        if isinstance(p, tuple) and len(p) == 2 and isinstance(p[1], Weighting):
            p = p[1]
        if isinstance(p, Weighting):
            out.append(p.vector())
        elif isinstance(p, dict):
            out.append(Weighting(c, p).vector())
        else:
            out.append([Fraction(x) for x in p])
    return out


def verify_decomposition(c: Complex, parts) -> bool:
    """Every part is a P(C) vertex and their uniform average is positive on every face."""
    r = build_r(c).r
    vecs = _part_vectors(c, parts)
    if not vecs:
        return False
    for v in vecs:
        s = sum(v)
        if s == 0 or not is_vertex(r, [x / s for x in v]):
            return False
    avg = [sum(col) / len(vecs) for col in zip(*vecs)]
    return all(x > 0 for x in avg)
