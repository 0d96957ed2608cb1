"""Bundled worked-example fixtures and a runner that replays them through the pipeline.

Each fixture directory holds ``input.json`` (a complex or a framework) and/or
``input.poly`` (a polynomial), ``expected.json`` with the checks and the source
of every expected value, and ``provenance.md``.  ``MANIFEST`` pins every file
by SHA-256.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Any, Callable, Optional

from .balance import build_r, check_extremal_bound, is_extremal
from .complex import Complex
from .cone import enumerate_vertices_bruteforce
from .decompose import decompose, unique_decomposition
from .exactq import format_fraction, left_kernel_basis, rank, same_span
from .reciprocal import build_reciprocal, check_main_theorem, dual_graph
from .rigidity import (
    Framework,
    direction_space,
    is_direction_rigid,
    is_infinitesimally_rigid,
    pebble_game_23,
    rigidity_matrix,
)
from .tropcurve import Curve, curve, evaluate, parse_polynomial, structure_report

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"
AUXILIARY = {"printed_row_order", "printed_row_signs"}


def names() -> list[str]:
    return sorted(p.name for p in FIXTURE_DIR.iterdir() if p.is_dir())


@dataclass
class Fixture:
    name: str
    path: Path
    expected: dict
    provenance: str
    input_json: Optional[dict] = None
    polynomial_text: Optional[str] = None

    @property
    def checks(self) -> dict:
        return self.expected.get("checks", {})

    @property
    def sources(self) -> dict:
        return self.expected.get("sources", {})

    @cached_property
    def complex(self) -> Optional[Complex]:
        if self.input_json is not None and "faces" in self.input_json:
            return Complex.from_dict(self.input_json)
        if self.curve is not None:
            return self.curve.to_complex()
        return None

    @cached_property
    def framework(self) -> Optional[Framework]:
        if self.input_json is not None and "faces" not in self.input_json:
            return Framework.from_dict(self.input_json)
        if self.curve is not None:
            return build_reciprocal(dual_graph(self.curve), self.curve.weighting()).framework
        return None

    @cached_property
    def polynomial(self):
        return parse_polynomial(self.polynomial_text) if self.polynomial_text is not None else None

    @cached_property
    def curve(self) -> Optional[Curve]:
        return curve(self.polynomial) if self.polynomial is not None else None

    @cached_property
    def decomposition(self):
        return decompose(self.complex)


def load(name: str) -> Fixture:
    path = FIXTURE_DIR / name
    if not path.is_dir():
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(names())}")
    expected = json.loads((path / "expected.json").read_text())
    prov = (path / "provenance.md").read_text()
    inp = json.loads((path / "input.json").read_text()) if (path / "input.json").exists() else None
    poly = (path / "input.poly").read_text().strip() if (path / "input.poly").exists() else None
    return Fixture(name, path, expected, prov, inp, poly)


def verify_manifest() -> list[str]:
    """Files whose SHA-256 differs from the pinned manifest (empty when intact)."""
    bad = []
    for line in (FIXTURE_DIR / "MANIFEST").read_text().splitlines():
        digest, rel = line.split(None, 1)
        p = FIXTURE_DIR / rel
        if not p.exists() or hashlib.sha256(p.read_bytes()).hexdigest() != digest:
            bad.append(rel)
    return bad


# --- checks --------------------------------------------------------------------------


def _ints(m) -> list[list]:
    return [[int(x) if Fraction(x).denominator == 1 else format_fraction(x) for x in row] for row in m.tolist()]


def _reorder(fx: Fixture, mat, block: int) -> list[list]:
    perm = fx.expected.get("id_permutation")
    rows = _ints(mat)
    if not perm:
        return rows
    bm_faces = fx.complex.face_ids
    bm_ridges = fx.complex.ridge_ids
    out = []
    for fid in perm["faces"]:
        row = rows[bm_faces.index(fid)]
        out.append([x for rid in perm["ridges"] for x in row[block * bm_ridges.index(rid): block * bm_ridges.index(rid) + block]])
    return out


def _r_tilde(fx):
    return _reorder(fx, build_r(fx.complex).r_tilde, fx.complex.ambient_dim)


def _r(fx):
    c = fx.complex
    return _reorder(fx, build_r(c).r, c.ambient_dim - c.dim + 1)


def _rigidity(fx):
    fw = fx.framework
    mat = _ints(rigidity_matrix(fw))
    order = fx.checks.get("printed_row_order")
    if not order:
        return mat
    signs = fx.checks.get("printed_row_signs", [1] * len(order))
    edges = list(fw.edges)
    return [[s * x for x in mat[edges.index(tuple(sorted(e)))]] for e, s in zip(order, signs)]


def _kernel_span(fx):
    return left_kernel_basis(build_r(fx.complex).r)


def _rays(fx):
    return sorted([list(e.direction), e.weight] for e in fx.curve.edges if e.kind == "ray")


def _cells(fx):
    return sorted(sorted(list(p) for p in cell.vertices) for cell in fx.curve.subdivision.cells)


def _vertices_at(fx):
    return sorted([format_fraction(x) for x in p] for p in fx.curve.vertices.values())


def _eval(key):
    def run(fx):
        z = fx.checks[key][0]
        val, arg = evaluate(fx.polynomial, z)
        return [z, format_fraction(val), [list(k) for k in arg]]

    return run


def _pebble(fx):
    if fx.input_json is not None and "faces" not in fx.input_json:
        fw = fx.framework
        return pebble_game_23(fw.vertex_ids, fw.edges)[0]
    dg = dual_graph(fx.curve)
    return pebble_game_23(dg.regions, dg.graph_edges)[0]


def _diagram_matches(fx):
    rd = build_reciprocal(dual_graph(fx.curve), fx.curve.weighting()).framework
    fw = fx.framework
    pts = lambda f: {tuple(p) for p in f.vertices.values()}  # noqa: E731
    segs = lambda f: {frozenset((tuple(f.vertices[u]), tuple(f.vertices[v]))) for u, v in f.edges}  # noqa: E731
    return pts(rd) == pts(fw) and segs(rd) == segs(fw)


def _main_theorem(fx):
    target = fx.curve if fx.curve is not None else fx.complex
    return check_main_theorem(target)["agree"]


def _unique_dec(fx):
    u = unique_decomposition(fx.complex)
    return None if u is None else len(u.parts)


CHECKS: dict[str, Callable[[Fixture], Any]] = {
    "r_tilde": _r_tilde,
    "r": _r,
    "rank": lambda fx: rank(build_r(fx.complex).r),
    "left_kernel_span": _kernel_span,
    "extremal": lambda fx: is_extremal(fx.complex).extremal,
    "curve_extremal": lambda fx: is_extremal(fx.curve.to_complex()).extremal,
    "weighting_space_dim": lambda fx: len(_kernel_span(fx)),
    "vertex_count": lambda fx: len(enumerate_vertices_bruteforce(fx.complex)),
    "decomposition_parts": lambda fx: len(fx.decomposition.parts),
    "decomposition_supports": lambda fx: sorted(sorted(s) for s in fx.decomposition.supports()),
    "unique": lambda fx: fx.decomposition.unique,
    "unique_decomposition": _unique_dec,
    "extremal_bound": lambda fx: check_extremal_bound(fx.complex),
    "main_theorem_agree": _main_theorem,
    "rigidity_matrix": _rigidity,
    "rigidity_rank": lambda fx: rank(rigidity_matrix(fx.framework)),
    "infinitesimally_rigid": lambda fx: is_infinitesimally_rigid(fx.framework).rigid,
    "direction_space_dim": lambda fx: len(direction_space(fx.framework)),
    "direction_rigid": lambda fx: is_direction_rigid(fx.framework),
    "pebble_rigid": _pebble,
    "curve_vertices": lambda fx: len(fx.curve.vertices),
    "curve_edges": lambda fx: len(fx.curve.edges),
    "curve_vertices_at": _vertices_at,
    "rays": _rays,
    "sd_cells": _cells,
    "regions": lambda fx: len(dual_graph(fx.curve).regions),
    "dual_edges": lambda fx: len(dual_graph(fx.curve).edges),
    "structure_verdict": lambda fx: structure_report(fx.curve)["verdict"],
    "diagram_matches_framework": _diagram_matches,
    "eval": _eval("eval"),
    "eval_origin": _eval("eval_origin"),
    "vertices": lambda fx: len(fx.framework.vertices),
    "edges": lambda fx: len(fx.framework.edges),
}


def _equal(name: str, expected, got) -> bool:
    if name == "left_kernel_span":
        return same_span(expected, got) and len(expected) == len(got)
    if name == "sd_cells":
        return sorted(sorted(list(p) for p in cell) for cell in expected) == got
    if name == "decomposition_supports":
        return sorted(sorted(s) for s in expected) == got
    return expected == got


@dataclass
class CheckResult:
    fixture: str
    field: str
    ok: bool
    expected: Any = None
    got: Any = None
    error: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"fixture": self.fixture, "field": self.field, "ok": self.ok}
        if not self.ok:
            out["expected"] = self.expected
            out["got"] = _jsonable(self.got)
            if self.error:
                out["error"] = self.error
        return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return x


@dataclass
class Report:
    results: list = field(default_factory=list)
    tampered: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.tampered and all(r.ok for r in self.results)

    @property
    def mismatches(self) -> list:
        return [r for r in self.results if not r.ok]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checked": len(self.results),
            "tampered": self.tampered,
            "mismatches": [r.to_dict() for r in self.mismatches],
        }


def run_fixture(fx: Fixture) -> list[CheckResult]:
    out = []
    for key, want in fx.checks.items():
        if key in AUXILIARY:
            continue
        fn = CHECKS.get(key)
        if fn is None:
            out.append(CheckResult(fx.name, key, False, want, None, "unknown check"))
            continue
        try:
            got = fn(fx)
        except Exception as exc:  # reported, not raised: the runner lists every failure
            out.append(CheckResult(fx.name, key, False, want, None, f"{type(exc).__name__}: {exc}"))
            continue
        out.append(CheckResult(fx.name, key, _equal(key, want, got), want, got))
    return out


def run_all(selected: Optional[list[str]] = None) -> Report:
    report = Report(tampered=verify_manifest())
    for name in selected or names():
        report.results.extend(run_fixture(load(name)))
    return report
