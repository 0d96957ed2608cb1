"""Command-line interface: ``troprig <command> (--poly TEXT | --complex PATH | --framework PATH)``.

Exit status 0 on success (JSON or SVG on stdout or in ``--out``), 1 for
domain errors such as a complex with no positive balanced weighting, and 2
for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import corpus
from .balance import NotATropicalVariety, check_extremal_bound, is_extremal
from .complex import Complex, ComplexError, validate
from .cone import DEFAULT_LIMIT, EnumerationLimitExceeded, enumerate_vertices_bruteforce, weight_cone
from .decompose import decompose, verify_decomposition
from .exactq import format_fraction, rank
from .reciprocal import DualGraphError, WeightingNotBalanced, build_reciprocal, check_main_theorem, dual_graph
from .render import RenderError, render_complex, render_curve, render_framework, render_subdivision
from .rigidity import (
    Framework,
    FrameworkError,
    direction_space,
    is_direction_rigid,
    is_infinitesimally_rigid,
    pebble_game_23,
    rigidity_matrix,
)
from .tropcurve import DegenerateCurve, PolynomialSyntaxError, curve, parse_polynomial, structure_report

COMMANDS = ("curve", "check", "weightings", "decompose", "rigidity", "reciprocal", "render", "fixtures")


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, kind: str, message: str, details: Optional[dict] = None):
        super().__init__(message)
        self.kind = kind
        self.details = details or {}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="troprig", description="Extremality and rigidity of tropical varieties.")
    p.add_argument("command", choices=COMMANDS)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--poly", metavar="TEXT", help="tropical polynomial in x, y")
    src.add_argument("--complex", metavar="PATH", help="complex JSON file")
    src.add_argument("--framework", metavar="PATH", help="framework JSON file")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--format", choices=("json", "svg"), default=None)
    p.add_argument("--oracle", action="store_true", help="force brute-force vertex enumeration")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="enumeration cap")
    p.add_argument("--view", choices=("curve", "subdivision", "diagram"), default="curve", help="render target for --poly")
    p.add_argument("--name", help="single fixture for the fixtures command")
    return p


def _q(x) -> str:
    return format_fraction(Fraction(x))


def _vec(v) -> list[str]:
    return [_q(x) for x in v]


# --- input loading -----------------------------------------------------------------


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from exc


def _load_complex(path: str) -> Complex:
    c = Complex.from_dict(_read_json(path))
    report = validate(c)
    if not report.ok:
        count = len(report.diagnostics)
        raise DomainError("invalid complex", f"{count} validation problem(s)", {"diagnostics": report.diagnostics})
    return c


def _load_framework(path: str) -> Framework:
    data = _read_json(path)
    try:
        return Framework.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"{path}: malformed framework JSON ({exc})") from exc


def _curve(args, allow_degenerate: bool = False):
    c = curve(parse_polynomial(args.poly))
    if c.degenerate and not allow_degenerate:
        raise DegenerateCurve("all terms lie on one line: the curve is a union of parallel lines")
    return c


def _need(args, *kinds):
    given = [k for k in ("poly", "complex", "framework") if getattr(args, k) is not None]
    if not given:
        raise UsageError(f"{args.command} needs one of " + ", ".join("--" + k for k in kinds))
    if given[0] not in kinds:
        raise UsageError(f"{args.command} does not accept --{given[0]}")
    return given[0]


def _target_complex(args):
    """(complex, curve or None) for --poly / --complex commands."""
    kind = _need(args, "poly", "complex")
    if kind == "poly":
        c = _curve(args)
        return c.to_complex(), c
    return _load_complex(args.complex), None


# --- commands ------------------------------------------------------------------------


def cmd_curve(args):
    _need(args, "poly")
    c = _curve(args, allow_degenerate=True)
    return c.to_dict()


def cmd_check(args):
    cx, c = _target_complex(args)
    cert = is_extremal(cx)
    out = cert.to_dict()
    out["extremal_bound"] = check_extremal_bound(cx)
    if c is not None:
        out["structure"] = structure_report(c)
    return out


def cmd_weightings(args):
    cx, _ = _target_complex(args)
    cone = weight_cone(cx)
    out = {"faces": cx.face_ids, "cone_dim": cone.dim, "kernel_basis": [_vec(v) for v in cone.kernel_basis]}
    vertices = enumerate_vertices_bruteforce(cone.r, args.limit)
    out["vertices"] = [
        {"support": [f for f, x in zip(cx.face_ids, v) if x], "weighting": {f: _q(x) for f, x in zip(cx.face_ids, v) if x}}
        for v in vertices
    ]
    return out


def cmd_decompose(args):
    cx, _ = _target_complex(args)
    dec = decompose(cx, oracle=args.oracle, limit=args.limit)
    out = dec.to_dict()
    out["method"] = dec.method
    out["verified"] = verify_decomposition(cx, dec.parts)
    return out


def _rigidity_report(fw: Framework) -> dict:
    r = rigidity_matrix(fw)
    inf = is_infinitesimally_rigid(fw)
    out = {
        "vertices": fw.vertex_ids,
        "edges": [list(e) for e in fw.edges],
        "rigidity_matrix": [_vec(row) for row in r.tolist()],
        "rank": rank(r),
        "infinitesimal": inf.to_dict(),
    }
    if all(any(a != b for a, b in zip(fw.vertices[u], fw.vertices[v])) for u, v in fw.edges):
        out["direction_space_dim"] = len(direction_space(fw))
        out["direction_rigid"] = is_direction_rigid(fw)
    if fw.dim == 2:
        rigid, tight = pebble_game_23(fw.vertex_ids, fw.edges)
        out["pebble_game"] = {"rigid": rigid, "tight_subgraph": [list(e) for e in tight] if tight else None}
    return out


def cmd_rigidity(args):
    kind = _need(args, "framework", "poly")
    if kind == "framework":
        return _rigidity_report(_load_framework(args.framework))
    c = _curve(args)
    return _rigidity_report(build_reciprocal(dual_graph(c), c.weighting()).framework)


def cmd_reciprocal(args):
    cx, c = _target_complex(args)
    target = c if c is not None else cx
    report = check_main_theorem(target)
    w = c.weighting() if c is not None else dict(zip(cx.face_ids, is_extremal(cx).positive_weighting))
    rd = build_reciprocal(dual_graph(target), w)
    report["diagram"] = rd.to_dict()
    return report


def _svg(args) -> str:
    if args.framework is not None:
        return render_framework(_load_framework(args.framework))
    if args.complex is not None:
        return render_complex(_load_complex(args.complex))
    _need(args, "poly", "complex", "framework")
    c = _curve(args, allow_degenerate=args.view == "curve")
    if args.view == "subdivision":
        return render_subdivision(c.subdivision)
    if args.view == "diagram":
        return render_framework(build_reciprocal(dual_graph(c), c.weighting()).framework)
    return render_curve(c)


def cmd_fixtures(args):
    if args.name:
        try:
            corpus.load(args.name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from exc
    report = corpus.run_all([args.name] if args.name else None)
    out = report.to_dict()
    out["fixtures"] = [args.name] if args.name else corpus.names()
    if not report.ok:
        raise DomainError("fixture mismatch", f"{len(report.mismatches)} check(s) failed", out)
    return out


HANDLERS = {
    "curve": cmd_curve,
    "check": cmd_check,
    "weightings": cmd_weightings,
    "decompose": cmd_decompose,
    "rigidity": cmd_rigidity,
    "reciprocal": cmd_reciprocal,
    "fixtures": cmd_fixtures,
}


def _emit(text: str, out: Optional[str]):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        fmt = args.format or ("svg" if args.command == "render" else "json")
        if fmt == "svg":
            if args.command not in ("render", "curve", "rigidity", "reciprocal"):
                raise UsageError(f"--format svg is not available for {args.command}")
            text = _svg(args)
        else:
            if args.command == "render":
                raise UsageError("render produces SVG only")
            text = json.dumps(HANDLERS[args.command](args), indent=2, ensure_ascii=True) + "\n"
        _emit(text, args.out)
        return 0
    except (UsageError, PolynomialSyntaxError, ComplexError, FrameworkError) as exc:
        print(f"troprig: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        payload = {"error": exc.kind, "message": str(exc), **exc.details}
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=True) + "\n")
        return 1
    except (
        NotATropicalVariety,
        DegenerateCurve,
        DualGraphError,
        WeightingNotBalanced,
        RenderError,
        EnumerationLimitExceeded,
    ) as exc:
        kind = {
            NotATropicalVariety: "not a tropical variety",
            DegenerateCurve: "degenerate input",
            DualGraphError: "dual graph",
            WeightingNotBalanced: "weighting not balanced",
            RenderError: "unrenderable",
            EnumerationLimitExceeded: "enumeration limit exceeded",
        }[type(exc)]
        sys.stdout.write(json.dumps({"error": kind, "message": str(exc)}, indent=2, ensure_ascii=True) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
