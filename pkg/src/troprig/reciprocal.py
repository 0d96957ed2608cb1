"""Reciprocal diagrams: realising the dual graph from a balanced weighting and back.

Regions of the complement are joined across each maximal face ``sigma`` by a
dual edge carrying ``x_sigma(v, w)``, the primitive integer vector
perpendicular to ``sigma`` pointing from ``w``'s side into ``v``'s side.  A
diagram places the regions so that ``p(v) - p(w) = omega(sigma) x_sigma(v, w)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .balance import Weighting, is_balanced, is_extremal
from .complex import Complex
from .exactq import format_fraction, primitive, to_fraction
from .rigidity import Framework, is_direction_rigid, is_infinitesimally_rigid
from .tropcurve import Curve


class DualGraphError(ValueError):
    pass


class WeightingNotBalanced(ValueError):
    pass


@dataclass(frozen=True)
class DualEdge:
    u: str
    v: str
    face_id: str
    x_vector: tuple  # x_sigma(u, v)


@dataclass(frozen=True)
class DualGraph:
    regions: tuple
    edges: tuple
    positions: Optional[dict] = None  # lattice points for curve-born graphs

    def __post_init__(self):
        regions = tuple(sorted(str(r) for r in self.regions))
        known = set(regions)
        pairs = set()
        faces = set()
        for e in self.edges:
            if e.u not in known or e.v not in known:
                raise DualGraphError(f"edge across {e.face_id} joins an unknown region")
            pair = frozenset((e.u, e.v))
            if len(pair) != 2 or pair in pairs:
                raise DualGraphError(f"edge across {e.face_id} is a loop or repeats a region pair")
            if e.face_id in faces:
                raise DualGraphError(f"face {e.face_id} labels two dual edges")
            pairs.add(pair)
            faces.add(e.face_id)
        object.__setattr__(self, "regions", regions)
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: (e.u, e.v))))

    @property
    def graph_edges(self) -> list[tuple[str, str]]:
        return [(e.u, e.v) for e in self.edges]

    def adjacency(self) -> dict:
        adj: dict = {r: [] for r in self.regions}
        for e in self.edges:
            adj[e.u].append((e.v, e))
            adj[e.v].append((e.u, e))
        for r in adj:
            adj[r].sort(key=lambda t: t[0])
        return adj

    def is_connected(self) -> bool:
        if not self.regions:
            return True
        seen = {self.regions[0]}
        queue = deque(seen)
        adj = self.adjacency()
        while queue:
            for nb, _ in adj[queue.popleft()]:
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        return len(seen) == len(self.regions)

    @classmethod
    def from_dict(cls, data: dict) -> "DualGraph":
        edges = tuple(
            DualEdge(str(e["u"]), str(e["v"]), str(e["face_id"]), tuple(int(x) for x in e["x_vector"]))
            for e in data["edges"]
        )
        pos = data.get("positions")
        if pos is not None:
            pos = {str(k): tuple(int(x) for x in v) for k, v in pos.items()}
        return cls(tuple(str(r) for r in data["regions"]), edges, pos)

    def to_dict(self) -> dict:
        out = {
            "regions": list(self.regions),
            "edges": [{"u": e.u, "v": e.v, "face_id": e.face_id, "x_vector": list(e.x_vector)} for e in self.edges],
        }
        if self.positions is not None:
            out["positions"] = {k: list(v) for k, v in sorted(self.positions.items())}
        return out


def _region_id(p) -> str:
    return f"{p[0]},{p[1]}"


def dual_graph(target: Union[Curve, Complex]) -> DualGraph:
    """Dual graph of a plane curve (the 1-skeleton of its subdivision), or the one shipped with a complex."""
    if isinstance(target, Complex):
        if target.dual_graph is None:
            raise DualGraphError("complex carries no dual graph; supply one in its input file")
        return DualGraph.from_dict(target.dual_graph)
    if target.degenerate:
        raise DualGraphError("degenerate curve: the subdivision has no 2-cells")
    edges = []
    for e in target.edges:
        a, b = e.dual
        edges.append(DualEdge(_region_id(a), _region_id(b), e.id, tuple(primitive([a[0] - b[0], a[1] - b[1]]))))
    pts = target.subdivision.vertices
    return DualGraph(tuple(_region_id(p) for p in pts), tuple(edges), {_region_id(p): p for p in pts})


@dataclass(frozen=True)
class ReciprocalDiagram:
    framework: Framework
    dual: DualGraph

    def to_dict(self) -> dict:
        return {
            "framework": self.framework.to_dict(),
            "edges": [{"u": e.u, "v": e.v, "face_id": e.face_id, "x_vector": list(e.x_vector)} for e in self.dual.edges],
        }


def _values(dg: DualGraph, w) -> dict:
    if isinstance(w, Weighting):
        w = w.values
    vals = {str(k): to_fraction(v) for k, v in dict(w).items()}
    for e in dg.edges:
        if e.face_id not in vals:
            raise ValueError(f"weighting has no value for face {e.face_id}")
        if vals[e.face_id] <= 0:
            raise ValueError(f"weighting must be positive; face {e.face_id} has {vals[e.face_id]}")
    return vals


def build_reciprocal(dg: DualGraph, w) -> ReciprocalDiagram:
    """Place the first region at the origin and propagate along a BFS tree.

    Every non-tree edge closes a cycle, which must sum to zero exactly;
    otherwise :class:`WeightingNotBalanced` is raised.
    """
    vals = _values(dg, w)
    if not dg.regions:
        raise DualGraphError("dual graph has no regions")
    d = len(dg.edges[0].x_vector) if dg.edges else 2
    root = dg.regions[0]
    pos = {root: tuple(Fraction(0) for _ in range(d))}
    adj = dg.adjacency()
    queue = deque([root])
    while queue:
        r = queue.popleft()
        for nb, e in adj[r]:
            if nb in pos:
                continue
            step = [vals[e.face_id] * x for x in e.x_vector]
            # p(u) - p(v) = w x
            sign = -1 if r == e.u else 1
            pos[nb] = tuple(a + sign * s for a, s in zip(pos[r], step))
            queue.append(nb)
    if len(pos) != len(dg.regions):
        raise DualGraphError("dual graph is not connected")
    for e in dg.edges:
        diff = [a - b for a, b in zip(pos[e.u], pos[e.v])]
        if diff != [vals[e.face_id] * x for x in e.x_vector]:
            raise WeightingNotBalanced(f"weighting not balanced: cycle through face {e.face_id} does not close")
    fw = Framework(d, pos, tuple((e.u, e.v) for e in dg.edges))
    return ReciprocalDiagram(fw, dg)


def parallel_scalar(diff, x) -> Fraction:
    """The rational ``lam`` with ``diff = lam * x``; raises if they are not parallel."""
    i = next((k for k, v in enumerate(x) if v != 0), None)
    if i is None:
        raise ValueError("zero perpendicular vector")
    lam = Fraction(diff[i]) / x[i]
    if any(Fraction(a) != lam * b for a, b in zip(diff, x)):
        raise ValueError("diagram edge is not parallel to its perpendicular vector")
    return lam


def weighting_from_diagram(rd: ReciprocalDiagram) -> dict:
    """Recover ``omega(sigma)`` as the parallel scalar of each diagram edge."""
    p = rd.framework.vertices
    out = {}
    for e in rd.dual.edges:
        diff = [a - b for a, b in zip(p[e.u], p[e.v])]
        lam = parallel_scalar(diff, e.x_vector)
        if lam <= 0:
            raise ValueError(f"edge across {e.face_id} is not a positive scaling")
        out[e.face_id] = lam
    return dict(sorted(out.items()))


def is_integral(weights: Mapping) -> bool:
    return all(Fraction(v).denominator == 1 for v in weights.values())


def check_main_theorem(target: Union[Curve, Complex], weighting=None) -> dict:
    """Compare extremality with direction and infinitesimal rigidity of a reciprocal diagram."""
    if isinstance(target, Curve):
        cx = target.to_complex()
        w = weighting if weighting is not None else target.weighting()
    else:
        cx = target
        w = weighting
    cert = is_extremal(cx)
    if w is None:
        w = dict(zip(cx.face_ids, cert.positive_weighting))
    if not is_balanced(cx, dict(w) if not isinstance(w, Weighting) else w):
        raise WeightingNotBalanced("supplied weighting is not balanced")
    rd = build_reciprocal(dual_graph(target), w)
    direction = is_direction_rigid(rd.framework)
    report = {
        "extremal": cert.extremal,
        "rank": cert.rank,
        "faces": cert.n_faces,
        "direction_rigid": direction,
    }
    verdicts = [cert.extremal, direction]
    if rd.framework.dim == 2:
        inf = is_infinitesimally_rigid(rd.framework)
        report["infinitesimally_rigid"] = inf.rigid
        verdicts.append(inf.rigid)
    report["agree"] = len(set(verdicts)) == 1
    if not report["agree"]:
        report["counterexample"] = {
            "complex": cx.to_dict(),
            "diagram": rd.to_dict(),
            "weighting": {k: format_fraction(Fraction(v)) for k, v in sorted(dict(w).items())}
            if not isinstance(w, Weighting)
            else {k: format_fraction(v) for k, v in sorted(w.values.items())},
        }
    return report
