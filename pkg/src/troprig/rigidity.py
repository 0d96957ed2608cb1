"""Bar-and-joint frameworks: infinitesimal rigidity and direction (parallel) rigidity.

Columns of every framework matrix are grouped in blocks of ``d`` per vertex,
vertices in sorted id order; rows follow the sorted edge list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .exactq import RatMatrix, format_fraction, integer_kernel, primitive, kernel_basis, rank, same_span, to_fraction


class FrameworkError(ValueError):
    pass


@dataclass(frozen=True)
class Framework:
    dim: int
    vertices: dict  # id -> tuple of Fractions
    edges: tuple  # sorted tuple of sorted (u, v) pairs

    def __post_init__(self):
        verts = {str(k): tuple(to_fraction(x) for x in v) for k, v in self.vertices.items()}
        for vid, p in verts.items():
            if len(p) != self.dim:
                raise FrameworkError(f"vertex {vid} has {len(p)} coordinates, expected {self.dim}")
        edges = set()
        for u, v in self.edges:
            u, v = str(u), str(v)
            if u == v:
                raise FrameworkError(f"loop at {u}")
            if u not in verts or v not in verts:
                raise FrameworkError(f"edge {u}-{v} uses an unrealised vertex")
            e = tuple(sorted((u, v)))
            if e in edges:
                raise FrameworkError(f"repeated edge {e[0]}-{e[1]}")
            edges.add(e)
        object.__setattr__(self, "vertices", dict(sorted(verts.items())))
        object.__setattr__(self, "edges", tuple(sorted(edges)))

    @property
    def vertex_ids(self) -> list[str]:
        return list(self.vertices)

    def index(self) -> dict:
        return {vid: i for i, vid in enumerate(self.vertices)}

    @classmethod
    def from_dict(cls, data: dict) -> "Framework":
        return cls(int(data["dim"]), dict(data["vertices"]), tuple(tuple(e) for e in data["edges"]))

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "vertices": {vid: [format_fraction(x) for x in p] for vid, p in self.vertices.items()},
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def load(cls, path) -> "Framework":
        return cls.from_dict(json.loads(Path(path).read_text()))


def _edge_rows(fw: Framework, vectors_for_edge) -> RatMatrix:
    d = fw.dim
    idx = fw.index()
    rows = []
    for u, v in fw.edges:
        for x in vectors_for_edge(u, v):
            row = [Fraction(0)] * (d * len(idx))
            row[d * idx[u]: d * idx[u] + d] = x
            row[d * idx[v]: d * idx[v] + d] = [-a for a in x]
            rows.append(row)
    return RatMatrix(rows, cols=d * len(idx))


def rigidity_matrix(fw: Framework) -> RatMatrix:
    """Row ``uv`` holds ``p(u) - p(v)`` in block ``u`` and ``p(v) - p(u)`` in block ``v``."""
    p = fw.vertices
    return _edge_rows(fw, lambda u, v: [[a - b for a, b in zip(p[u], p[v])]])


def affine_dimension(fw: Framework) -> int:
    pts = list(fw.vertices.values())
    if not pts:
        return -1
    return rank([[a - b for a, b in zip(q, pts[0])] for q in pts[1:]]) if len(pts) > 1 else 0


def trivial_flexes(fw: Framework) -> list[list[Fraction]]:
    """Translations along each axis, then the rotations ``e_i e_j^T - e_j e_i^T`` applied to p."""
    d = fw.dim
    pts = list(fw.vertices.values())
    out = []
    for i in range(d):
        out.append([Fraction(int(k == i)) for _ in pts for k in range(d)])
    for i in range(d):
        for j in range(i + 1, d):
            vec = []
            for p in pts:
                block = [Fraction(0)] * d
                block[i] = p[j]
                block[j] = -p[i]
                vec.extend(block)
            out.append(vec)
    return out


@dataclass(frozen=True)
class FlexSpace:
    kernel: list
    trivial: list
    affine_dim: int

    @property
    def dim(self) -> int:
        return len(self.kernel)

    @property
    def trivial_dim(self) -> int:
        return rank(self.trivial) if self.trivial else 0


def flex_space(fw: Framework) -> FlexSpace:
    return FlexSpace(kernel_basis(rigidity_matrix(fw)), trivial_flexes(fw), affine_dimension(fw))


@dataclass(frozen=True)
class RigidityCertificate:
    rigid: bool
    rank: int
    target_rank: int
    reason: str
    flex_dim: int

    def __bool__(self):
        return self.rigid

    def to_dict(self) -> dict:
        return {
            "rigid": self.rigid,
            "rank": self.rank,
            "target_rank": self.target_rank,
            "reason": self.reason,
            "flex_dim": self.flex_dim,
        }


def _is_complete(fw: Framework) -> bool:
    n = len(fw.vertices)
    return len(fw.edges) == n * (n - 1) // 2


def is_infinitesimally_rigid(fw: Framework) -> RigidityCertificate:
    """Rigid iff every infinitesimal flex is trivial.

    Simplices (complete graphs on at most d+1 affinely independent points) are
    decided first; otherwise full-dimensional realisations use the rank
    criterion ``d|V| - binom(d+1, 2)``, and lower-dimensional ones compare the
    kernel against the span of the trivial flexes.
    """
    d = fw.dim
    n = len(fw.vertices)
    r = rigidity_matrix(fw)
    rk = rank(r)
    adim = affine_dimension(fw)
    nullity = d * n - rk
    if n <= d + 1 and _is_complete(fw) and adim == n - 1:
        return RigidityCertificate(True, rk, comb(n, 2), "simplex", nullity)
    if adim == d:
        target = d * n - comb(d + 1, 2)
        return RigidityCertificate(rk == target, rk, target, "rank", nullity)
    triv = trivial_flexes(fw)
    target = d * n - (rank(triv) if triv else 0)
    return RigidityCertificate(rk == target, rk, target, "kernel equals trivial flexes", nullity)


# --- direction rigidity ---------------------------------------------------------------


def _orth_complement(vec: Sequence[Fraction]) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in integer_kernel([primitive(vec)], len(vec))]


def direction_matrix(fw: Framework) -> RatMatrix:
    """``d - 1`` rows per edge: ``x`` in block u and ``-x`` in block v, ``x`` orthogonal to the edge."""
    p = fw.vertices

    def rows(u, v):
        diff = [a - b for a, b in zip(p[u], p[v])]
        if all(x == 0 for x in diff):
            raise FrameworkError(f"edge {u}-{v} has coincident endpoints")
        return _orth_complement(diff)

    return _edge_rows(fw, rows)


def direction_space(fw: Framework) -> list[list[Fraction]]:
    """Basis of the parallel redrawings ``q`` with ``q(u) - q(v)`` parallel to ``p(u) - p(v)``."""
    return kernel_basis(direction_matrix(fw))


def homothety_space(fw: Framework) -> list[list[Fraction]]:
    """Translations and the scaling ``q = p``."""
    d = fw.dim
    out = [[Fraction(int(k == i)) for _ in fw.vertices for k in range(d)] for i in range(d)]
    out.append([x for p in fw.vertices.values() for x in p])
    return out


def is_direction_rigid(fw: Framework) -> bool:
    if len(fw.vertices) == 1:
        return True
    return affine_dimension(fw) > 0 and len(direction_space(fw)) == fw.dim + 1


def perp(fw: Framework) -> Framework:
    """Rotate a planar framework by 90 degrees clockwise: ``(x, y) -> (y, -x)``."""
    if fw.dim != 2:
        raise FrameworkError("perp is defined for planar frameworks only")
    return Framework(2, {vid: (p[1], -p[0]) for vid, p in fw.vertices.items()}, fw.edges)


def direction_space_matches_perp(fw: Framework) -> bool:
    return same_span(direction_space(fw), kernel_basis(rigidity_matrix(perp(fw))))


# --- (2,3) pebble game -------------------------------------------------------------


def pebble_game_23(vertices: Iterable, edges: Iterable) -> tuple[bool, Optional[list]]:
    """Generic rigidity in the plane via the (2,3) pebble game.

    Returns ``(rigid, tight)`` where ``tight`` is a (2,3)-tight spanning edge
    set when one exists, else ``None``.
    """
    verts = sorted(set(vertices) | {x for e in edges for x in e})
    edges = sorted({tuple(sorted(e)) for e in edges})
    pebbles = {v: 2 for v in verts}
    out: dict = {v: [] for v in verts}  # directed independent edges
    accepted = []

    def find(start, blocked) -> bool:
        # DFS along out-edges for a free pebble; reverse the path when found
        seen = set(blocked) | {start}
        stack = [(start, iter(out[start]))]
        parent = {}
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                stack.pop()
                continue
            if nxt in seen:
                continue
            seen.add(nxt)
            parent[nxt] = node
            if pebbles[nxt] > 0:
                pebbles[nxt] -= 1
                w = nxt
                while w != start:
                    a = parent[w]
                    out[a].remove(w)
                    out[w].append(a)
                    w = a
                pebbles[start] += 1
                return True
            stack.append((nxt, iter(out[nxt])))
        return False

    for u, v in edges:
        while pebbles[u] + pebbles[v] < 4:
            if pebbles[u] < 2 and find(u, {v}):
                continue
            if pebbles[v] < 2 and find(v, {u}):
                continue
            break
        if pebbles[u] + pebbles[v] >= 4:
            src = u if pebbles[u] > 0 else v
            dst = v if src == u else u
            pebbles[src] -= 1
            out[src].append(dst)
            accepted.append((u, v))
    n = len(verts)
    need = 2 * n - 3 if n >= 2 else 0
    if len(accepted) == need:
        return True, accepted
    return False, None


def framework_graph(fw: Framework) -> tuple[list, list]:
    return list(fw.vertices), list(fw.edges)
