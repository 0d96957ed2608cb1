"""Regenerate src/troprig/fixtures from transcribed source data.

Values tagged PAPER in each fixture are hand transcriptions.  Derived values are
computed here with sympy (independently of the troprig pipeline, which is
only used to lay out the triple-union complex).  Run from the repository
root:  python3 scripts/derive_fixtures.py
"""

from __future__ import annotations

import hashlib
import json
import sys
from pathlib import Path

import sympy

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from troprig.tropcurve import curve, parse_polynomial  # noqa: E402

OUT = ROOT / "src" / "troprig" / "fixtures"
SCRIPT = "scripts/derive_fixtures.py"


def s(v):
    return [str(x) for x in v]


def srank(rows) -> int:
    return sympy.Matrix(rows).rank()


def rigidity_rows(vertices: dict, edges) -> list:
    ids = sorted(vertices)
    idx = {v: i for i, v in enumerate(ids)}
    d = len(next(iter(vertices.values())))
    out = []
    for u, v in sorted(tuple(sorted(e)) for e in edges):
        row = [0] * (d * len(ids))
        for k in range(d):
            row[d * idx[u] + k] = vertices[u][k] - vertices[v][k]
            row[d * idx[v] + k] = vertices[v][k] - vertices[u][k]
        out.append(row)
    return out


def write(name: str, inputs: dict, expected: dict, provenance: str):
    d = OUT / name
    d.mkdir(parents=True, exist_ok=True)
    for fname, content in inputs.items():
        text = content if isinstance(content, str) else json.dumps(content, indent=1, sort_keys=False) + "\n"
        (d / fname).write_text(text)
    (d / "expected.json").write_text(json.dumps(expected, indent=1) + "\n")
    (d / "provenance.md").write_text(provenance.strip() + "\n")


# --- hyperplane3d ----------------------------------------------------------------


def hyperplane3d():
    faces = {
        "s1_xy": ((-1, -1, 0), [(1, 0, 0), (0, 1, 0)], ["t1_x", "t2_y"]),
        "s2_xz": ((-1, 0, -1), [(1, 0, 0), (0, 0, 1)], ["t1_x", "t3_z"]),
        "s3_x0": ((-1, 1, 1), [(1, 0, 0), (0, 1, 1)], ["t1_x", "t4_0"]),
        "s4_yz": ((0, -1, -1), [(0, 1, 0), (0, 0, 1)], ["t2_y", "t3_z"]),
        "s5_y0": ((1, -1, 1), [(0, 1, 0), (1, 0, 1)], ["t2_y", "t4_0"]),
        "s6_z0": ((1, 1, -1), [(0, 0, 1), (1, 1, 0)], ["t3_z", "t4_0"]),
    }
    ridges = {
        "t1_x": ((-1, 0, 0), [(1, 0, 0)], None),
        "t2_y": ((0, -1, 0), [(0, 1, 0)], None),
        "t3_z": ((0, 0, -1), [(0, 0, 1)], None),
        "t4_0": ((1, 1, 1), [(1, 1, 1)], [[1, -1, 0], [1, 1, -2]]),
    }
    rj = []
    for k, (p, b, n) in ridges.items():
        e = {"id": k, "point": s(p), "basis": [s(v) for v in b]}
        if n:
            e["normals"] = n
        rj.append(e)
    dual = {
        "regions": ["r0", "rx", "ry", "rz"],
        "edges": [
            {"u": "rz", "v": "r0", "face_id": "s1_xy", "x_vector": [0, 0, 1]},
            {"u": "ry", "v": "r0", "face_id": "s2_xz", "x_vector": [0, 1, 0]},
            {"u": "ry", "v": "rz", "face_id": "s3_x0", "x_vector": [0, 1, -1]},
            {"u": "rx", "v": "r0", "face_id": "s4_yz", "x_vector": [1, 0, 0]},
            {"u": "rx", "v": "rz", "face_id": "s5_y0", "x_vector": [1, 0, -1]},
            {"u": "rx", "v": "ry", "face_id": "s6_z0", "x_vector": [1, -1, 0]},
        ],
    }
    cx = {
        "ambient_dim": 3,
        "dim": 2,
        "ridges": rj,
        "faces": [{"id": k, "point": s(p), "basis": [s(v) for v in b], "ridges": r} for k, (p, b, r) in faces.items()],
        "dual_graph": dual,
    }
    r_tilde = [
        [0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0],
        [0, 1, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0],
        [0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0],
        [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, -1],
    ]
    r = [
        [-1, 0, -1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, -1, 0, 0, 0],
        [1, 1, 0, 0, 0, 0, -1, -1],
        [0, 0, 0, -1, 0, -1, 0, 0],
        [0, 0, 1, 1, 0, 0, 1, -1],
        [0, 0, 0, 0, 1, 1, 0, 2],
    ]
    assert srank(r) == 5
    expected = {
        "kind": "complex",
        "checks": {
            "r_tilde": r_tilde,
            "r": r,
            "rank": 5,
            "extremal": True,
            "weighting_space_dim": 1,
            "vertex_count": 1,
            "decomposition_parts": 1,
            "unique": True,
            "extremal_bound": True,
            "main_theorem_agree": True,
        },
        "id_permutation": {"faces": list(faces), "ridges": list(ridges)},
        "sources": {
            "r_tilde": "PAPER section 5.1 example, printed R~ matrix",
            "r": "PAPER section 5.1 example, printed R = R~ L with the printed x_i(tau_0)",
            "rank": "PAPER section 5.1, 'rank 5 matrix'",
            "extremal": "PAPER section 5.1 via rank test",
            "weighting_space_dim": "DERIVED: 6 faces minus rank 5",
            "vertex_count": "DERIVED: one-dimensional cone, single P(C) point",
            "decomposition_parts": "DERIVED: extremal, so one part",
            "unique": "DERIVED: a point is a simplex",
            "extremal_bound": "DERIVED: 6 <= 2*4+1",
            "main_theorem_agree": "DERIVED: reciprocal diagram is the exponent tetrahedron",
        },
    }
    write(
        "hyperplane3d",
        {"input.json": cx},
        expected,
        """
# hyperplane3d

The tropical hyperplane V(0 + x + y + z) in R^3: six 2-dimensional maximal
faces and four ridges, as listed in paper section 5.1 (example preceding the
proof of Theorem 5.1 / `t:detect`).  Each unbounded polyhedron is represented
by an interior point and a basis of its linear span; the ridge `t4_0` stores
the paper's choice x_1 = (1,-1,0), x_2 = (1,1,-2) so that R(C) matches the
printed matrix.  Face and ridge ids sort into the paper's row/column order.

The dual graph joins the four complement regions (where 0, x, y or z is the
maximal term); x-vectors are exponent differences.  Written by
""" + SCRIPT,
    )


# --- triple-union ------------------------------------------------------------------

TRIPLE_POLY = "(-3) x^3 + (-2) x^2 y + (-2) x y^2 + (-3) y^3 + (-1) x^2 + x y + x + (-1) y^2 + y + 0"
TRIPLE_R = [
    [-1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 0, 0, -1, -1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
]
TRIPLE_KERNEL = [
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 1],
]


def triple_union():
    c = curve(parse_polynomial(TRIPLE_POLY))
    cx = c.to_complex().to_dict()
    # relabel so sorted ids reproduce the printed row and column order
    ridge_map = {"v05": "t01", "v02": "t02", "v01": "t03", "v04": "t04", "v03": "t05", "v00": "t06"}
    face_order = ["e09", "e11", "e12", "e07", "e08", "e10", "e02", "e03", "e05", "e14", "e13", "e06", "e04", "e00", "e01"]
    face_map = {old: f"s{i + 1:02d}" for i, old in enumerate(face_order)}
    for r in cx["ridges"]:
        r["id"] = ridge_map[r["id"]]
    for f in cx["faces"]:
        f["id"] = face_map[f["id"]]
        f["ridges"] = [ridge_map[x] for x in f["ridges"]]
    cx["ridges"].sort(key=lambda r: r["id"])
    cx["faces"].sort(key=lambda f: f["id"])
    m = sympy.Matrix(TRIPLE_R)
    assert m.rank() == 12
    for v in TRIPLE_KERNEL:
        assert sympy.Matrix([v]) * m == sympy.zeros(1, 12)
    fids = [f"s{i + 1:02d}" for i in range(15)]
    supports = [[fid for fid, x in zip(fids, v) if x] for v in TRIPLE_KERNEL]
    expected = {
        "kind": "complex",
        "checks": {
            "r": TRIPLE_R,
            "rank": 12,
            "left_kernel_span": TRIPLE_KERNEL,
            "extremal": False,
            "weighting_space_dim": 3,
            "vertex_count": 3,
            "decomposition_parts": 3,
            "decomposition_supports": supports,
            "unique": True,
        },
        "sources": {
            "r": "PAPER Example 5.7 printed R(C)",
            "rank": "PAPER Example 5.7, 'rank R(C) = 12'",
            "left_kernel_span": "PAPER Example 5.7 printed left-kernel basis",
            "extremal": "PAPER Example 5.7",
            "weighting_space_dim": "PAPER Example 5.7, '|E| - 3'",
            "vertex_count": "PAPER Example 5.7, 'minimal generator set of W(C)'",
            "decomposition_parts": "PAPER Example 5.7 / Fig. 9",
            "decomposition_supports": "PAPER Example 5.7 kernel vector supports",
            "unique": "PAPER Example 5.7, 'unique decomposition into 3'",
        },
    }
    write(
        "triple-union",
        {"input.json": cx, "input.poly": TRIPLE_POLY + "\n"},
        expected,
        f"""
# triple-union

Curve of the product of three tropical lines (paper Example 5.7):

    {TRIPLE_POLY}

The complex in `input.json` is the curve of this polynomial, relabelled so
that sorted face ids s01..s15 follow the rows and sorted ridge ids t01..t06
follow the column blocks of the printed R(C).  The relabelling was found by
matching the printed matrix against all 720 ridge orders (exactly one
matches).  Written by {SCRIPT}.
""",
    )


# --- prism -----------------------------------------------------------------------

PRISM_POLY = "0 + x^8 + y^8 + (1) x y + (1) x^5 y + (1) x y^5"
PRISM_VERTS = {"v1": (1, 1), "v2": (5, 1), "v3": (1, 5), "v4": (0, 0), "v5": (8, 0), "v6": (0, 8)}
PRISM_PRINTED_EDGES = [
    ["v1", "v2"], ["v1", "v3"], ["v2", "v3"], ["v4", "v5"], ["v4", "v6"],
    ["v5", "v6"], ["v1", "v4"], ["v2", "v5"], ["v3", "v6"],
]
PRISM_R = [
    [-4, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, -4, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0],
    [0, 0, 4, -4, -4, 4, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, -8, 0, 8, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, -8, 0, 0, 0, 8],
    [0, 0, 0, 0, 0, 0, 0, 0, 8, -8, -8, 8],
    [1, 1, 0, 0, 0, 0, -1, -1, 0, 0, 0, 0],
    [0, 0, -3, 1, 0, 0, 0, 0, 3, -1, 0, 0],
    [0, 0, 0, 0, -1, 3, 0, 0, 0, 0, 1, -3],
]


def prism():
    ours = rigidity_rows(PRISM_VERTS, PRISM_PRINTED_EDGES)
    sorted_edges = sorted(tuple(e) for e in PRISM_PRINTED_EDGES)
    signs = []
    for e, row in zip(PRISM_PRINTED_EDGES, PRISM_R):
        mine = ours[sorted_edges.index(tuple(e))]
        if mine == row:
            signs.append(1)
        else:
            assert [-x for x in mine] == row
            signs.append(-1)
    assert srank(PRISM_R) == 8
    # direction space = kernel of the perpendicular framework's rigidity matrix
    perp = {k: (p[1], -p[0]) for k, p in PRISM_VERTS.items()}
    dir_dim = 12 - srank(rigidity_rows(perp, PRISM_PRINTED_EDGES))
    fw = {"dim": 2, "vertices": {k: s(p) for k, p in PRISM_VERTS.items()}, "edges": PRISM_PRINTED_EDGES}
    expected = {
        "kind": "framework+polynomial",
        "checks": {
            "rigidity_matrix": PRISM_R,
            "printed_row_order": PRISM_PRINTED_EDGES,
            "printed_row_signs": signs,
            "rigidity_rank": 8,
            "infinitesimally_rigid": False,
            "direction_space_dim": dir_dim,
            "direction_rigid": False,
            "pebble_rigid": True,
            "curve_extremal": False,
            "curve_vertices": 4,
            "curve_edges": 9,
            "structure_verdict": "necessary conditions pass",
            "main_theorem_agree": True,
            "diagram_matches_framework": True,
        },
        "sources": {
            "rigidity_matrix": "PAPER section 4 printed R(G,p)",
            "printed_row_order": "PAPER section 4 (row labels read from the printed entries)",
            "printed_row_signs": "DERIVED: row-by-row comparison with the p(u)-p(v) convention",
            "rigidity_rank": "PAPER section 4, 'rank 8 < 2*6-3'",
            "infinitesimally_rigid": "PAPER section 4, 'infinitesimally flexible'",
            "direction_space_dim": "DERIVED: sympy nullity of R(G,p_perp)",
            "direction_rigid": "PAPER Fig. 6 caption, 'not direction rigid'",
            "pebble_rigid": "PAPER section 4, 'G is (2,3)-tight'",
            "curve_extremal": "PAPER section 4, 'C is not extremal'",
            "curve_vertices": "PAPER section 4, '4 vertices and 9 = 2*4+1 edges'",
            "curve_edges": "PAPER section 4, '4 vertices and 9 = 2*4+1 edges'",
            "structure_verdict": "PAPER section 4, converse of Cor 4.1 fails",
            "main_theorem_agree": "PAPER Theorem 1.1 / Cor 1.2",
            "diagram_matches_framework": "PAPER Fig. 6 (1-skeleton of the subdivided Newton polytope)",
        },
    }
    write(
        "prism",
        {"input.poly": PRISM_POLY + "\n", "input.json": fw},
        expected,
        f"""
# prism

Polynomial of paper equation (4.1) (`eq:prismf`) in `input.poly`, and the
1-skeleton of its subdivided Newton polygon (Fig. 6) as a framework in
`input.json`.

The printed rigidity matrix lists edges in the order of `printed_row_order`;
our matrix sorts edges.  Row v3v6 is printed with the opposite sign
convention, recorded in `printed_row_signs`.  Written by {SCRIPT}.
""",
    )


# --- small polynomial fixtures -----------------------------------------------------


def extremal_quadratic():
    poly = "(-1) + x + y + x y + (-1) y^2 + (-1) x^2"
    # SD 1-skeleton at the lattice points; extremality via infinitesimal rigidity
    pts = {"a": (0, 0), "b": (1, 0), "c": (0, 1), "d": (1, 1), "e": (2, 0), "f": (0, 2)}
    edges = [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"), ("c", "f"), ("d", "f"), ("b", "e"), ("d", "e")]
    rk = srank(rigidity_rows(pts, edges))
    assert rk == 9
    expected = {
        "kind": "polynomial",
        "checks": {
            "extremal": True,
            "weighting_space_dim": 1,
            "regions": 6,
            "dual_edges": 9,
            "curve_vertices": 4,
            "direction_rigid": True,
            "infinitesimally_rigid": True,
            "pebble_rigid": True,
            "structure_verdict": "necessary conditions pass",
            "main_theorem_agree": True,
        },
        "sources": {
            "extremal": "PAPER Example 2.6",
            "weighting_space_dim": "PAPER Example 2.6, 'unique weighting up to scaling'",
            "regions": "PAPER Fig. 5(c)",
            "dual_edges": "PAPER Fig. 5(c)",
            "curve_vertices": "DERIVED: four unimodular triangles in the subdivision",
            "direction_rigid": "DERIVED: Cor 1.2 with sympy rank 9 = 2*6-3",
            "infinitesimally_rigid": "DERIVED: sympy rank 9 = 2*6-3",
            "pebble_rigid": "DERIVED: rank certificate above",
            "structure_verdict": "DERIVED: trivalent vertices present, rigid dual graph",
            "main_theorem_agree": "PAPER Theorem 1.1",
        },
    }
    write(
        "extremal-quadratic",
        {"input.poly": poly + "\n"},
        expected,
        f"""
# extremal-quadratic

The extremal tropical quadratic of paper Example 2.6 / Fig. 5(c), encoded as
`{poly}`.  Its subdivision is the unimodular triangulation of the
degree-2 triangle.  Derived ranks by sympy in {SCRIPT}.
""",
    )


def six_ray_fan():
    dirs = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    cx = {
        "ambient_dim": 2,
        "dim": 1,
        "ridges": [{"id": "v", "point": ["0", "0"], "basis": []}],
        "faces": [
            {"id": f"e{i}", "point": s(d), "basis": [s(d)], "ridges": ["v"]} for i, d in enumerate(dirs)
        ],
    }
    r = [list(d) for d in dirs]
    expected = {
        "kind": "complex",
        "checks": {
            "r": r,
            "rank": 2,
            "extremal": False,
            "weighting_space_dim": 4,
            "vertex_count": 5,
            "decomposition_parts": 2,
            "unique": False,
            "unique_decomposition": None,
        },
        "sources": {
            "r": "PAPER Example 5.6 printed R(C)",
            "rank": "PAPER Example 5.6, 'rank R(C) = 2'",
            "extremal": "PAPER Example 5.6",
            "weighting_space_dim": "PAPER Example 5.6, '|E| - 4'",
            "vertex_count": "PAPER Example 5.6, 'exactly five extremal tropical varieties'",
            "decomposition_parts": "PAPER Example 5.6 and Cor 5.10 bound floor(3/2)+1",
            "unique": "PAPER Example 5.6 (two different decompositions, Fig. 4)",
            "unique_decomposition": "PAPER Example 5.6",
        },
    }
    write(
        "six-ray-fan",
        {"input.json": cx},
        expected,
        f"""
# six-ray-fan

The reducible curve of paper Example 2.7 / Fig. 4, analysed in Example 5.6:
six unit rays from the origin in directions (1,0), (-1,0), (0,1), (0,-1),
(1,1), (-1,-1), in the row order of the printed R(C).  The geometry is
read off the printed matrix (each row is the ray direction), so it is exact
rather than measured from the figure.  Written by {SCRIPT}.
""",
    )


def tropical_line():
    expected = {
        "kind": "polynomial",
        "checks": {
            "curve_vertices_at": [["0", "0"]],
            "rays": [[[-1, 0], 1], [[0, -1], 1], [[1, 1], 1]],
            "sd_cells": [[[0, 0], [1, 0], [0, 1]]],
            "extremal": True,
            "weighting_space_dim": 1,
            "regions": 3,
            "dual_edges": 3,
            "main_theorem_agree": True,
        },
        "sources": {
            "curve_vertices_at": "PAPER Example 2.3 (standard tropical line)",
            "rays": "DERIVED: outward normals of the unit triangle",
            "sd_cells": "PAPER Fig. 5(a)",
            "extremal": "DERIVED: three rays, rank 2",
            "weighting_space_dim": "DERIVED",
            "regions": "PAPER Fig. 5(a)",
            "dual_edges": "PAPER Fig. 5(a)",
            "main_theorem_agree": "DERIVED: triangle is a simplex",
        },
    }
    write("tropical-line", {"input.poly": "x + y + 0\n"}, expected, f"""
# tropical-line

The standard tropical line V(x + y + 0); its subdivision is Fig. 5(a).
Written by {SCRIPT}.
""")


def example_2_3():
    # balancing check done here by hand: 1*(2,1) + 2*(-1,0) + 1*(0,-1) = 0
    assert (2 - 2 + 0, 1 + 0 - 1) == (0, 0)
    expected = {
        "kind": "polynomial",
        "checks": {
            "eval": [["2", "2"], "4", [[0, 0], [0, 2], [1, 0]]],
            "eval_origin": [["0", "0"], "4", [[0, 0]]],
            "curve_vertices_at": [["2", "2"]],
            "rays": [[[-1, 0], 2], [[0, -1], 1], [[2, 1], 1]],
            "extremal": True,
            "main_theorem_agree": True,
        },
        "sources": {
            "eval": "PAPER Example 2.3, 'x+2=2y>=4'",
            "eval_origin": "DERIVED: max{2,0,4} = 4",
            "curve_vertices_at": "PAPER Example 2.3",
            "rays": "DERIVED: outward normals and lattice lengths; balanced by hand",
            "extremal": "DERIVED: three rays, rank 2",
            "main_theorem_agree": "DERIVED",
        },
    }
    write("three-term-conic", {"input.poly": "2x + y^2 + 4\n"}, expected, f"""
# three-term-conic

f = 2x + y^2 + 4 from paper Example 2.3 / Fig. 1(a).  Written by {SCRIPT}.
""")


def coplanar_cell():
    expected = {
        "kind": "polynomial",
        "checks": {
            "sd_cells": [[[0, 0], [2, 0], [3, 1], [0, 2]]],
            "curve_vertices_at": [["0", "0"]],
            "rays": [[[-1, 0], 2], [[0, -1], 2], [[1, -1], 1], [[1, 3], 1]],
            "extremal": False,
            "structure_verdict": "not extremal",
            "main_theorem_agree": True,
        },
        "sources": {
            "sd_cells": "PAPER Fig. 5(b) caption (all four lifted points coplanar)",
            "curve_vertices_at": "DERIVED: all coefficients 0",
            "rays": "DERIVED: outward normals and lattice lengths",
            "extremal": "DERIVED: degree-4 vertex, no trivalent vertex",
            "structure_verdict": "DERIVED: trivalent-vertex corollary",
            "main_theorem_agree": "DERIVED",
        },
    }
    write("coplanar-cell", {"input.poly": "0 + x^2 + y^2 + x^3 y\n"}, expected, f"""
# coplanar-cell

Polynomial of paper Fig. 5(b): a single non-triangular cell.  Written by {SCRIPT}.
""")


def genus1_cubic():
    poly = "0 + x^3 + y^3 + (2) x y"
    pts = {"a": (0, 0), "b": (3, 0), "c": (0, 3), "m": (1, 1)}
    edges = [("a", "b"), ("b", "c"), ("a", "c"), ("a", "m"), ("b", "m"), ("c", "m")]
    rk = srank(rigidity_rows(pts, edges))
    expected = {
        "kind": "polynomial",
        "checks": {
            "curve_vertices": 3,
            "curve_edges": 6,
            "rays": [[[-1, 0], 3], [[0, -1], 3], [[1, 1], 3]],
            "extremal": rk == 5,
            "infinitesimally_rigid": rk == 5,
            "main_theorem_agree": True,
        },
        "sources": {
            "curve_vertices": "DERIVED: three cells around interior point (1,1)",
            "curve_edges": "DERIVED",
            "rays": "DERIVED: outward normals, boundary lattice length 3",
            "extremal": f"DERIVED: sympy rank {rk} of the subdivision framework (Cor 1.2)",
            "infinitesimally_rigid": f"DERIVED: sympy rank {rk}",
            "main_theorem_agree": "DERIVED",
        },
    }
    write("genus1-cubic", {"input.poly": poly + "\n"}, expected, f"""
# genus1-cubic

A genus-one plane cubic with our own coefficients, `{poly}`: the bounded
edges form a triangle around the region of the x*y term, and the three rays
point west, south and north-east with weight 3.  The paper's Fig. 1(b) cubic
is cited without coefficients, so this is derived geometry of the same
kind, not a reproduction of that figure.  Written by {SCRIPT}.
""")


def double_banana():
    verts = {
        "a": (0, 0), "b": (6, 1),
        "p1": (1, 4), "p2": (3, 6), "p3": (5, 3),
        "q1": (2, -3), "q2": (4, -5), "q3": (7, -2),
    }
    edges = []
    for side in (["p1", "p2", "p3"], ["q1", "q2", "q3"]):
        group = ["a", "b"] + side
        for i in range(5):
            for j in range(i + 1, 5):
                if {group[i], group[j]} != {"a", "b"}:
                    edges.append([group[i], group[j]])
    rk = srank(rigidity_rows(verts, edges))
    expected = {
        "kind": "framework",
        "checks": {
            "vertices": 8,
            "edges": 18,
            "pebble_rigid": True,
            "rigidity_rank": rk,
            "infinitesimally_rigid": rk == 13,
            "direction_rigid": rk == 13,
        },
        "sources": {
            "vertices": "PAPER Fig. 2 (double-banana graph)",
            "edges": "PAPER Fig. 2",
            "pebble_rigid": "DERIVED: each banana minus the hinge is rigid in the plane",
            "rigidity_rank": "DERIVED: sympy rank at the stored realisation",
            "infinitesimally_rigid": "DERIVED: rank vs 2*8-3",
            "direction_rigid": "DERIVED: equivalent in the plane (Thm 2.10)",
        },
    }
    fw = {"dim": 2, "vertices": {k: s(p) for k, p in verts.items()}, "edges": edges}
    write("double-banana", {"input.json": fw}, expected, f"""
# double-banana

The double-banana graph of paper Fig. 2 with our own planar coordinates.  The
paper discusses it in R^3; here it serves as a planar pebble-game and
rigidity-rank fixture.  Written by {SCRIPT}.
""")


def manifest():
    lines = []
    for path in sorted(OUT.rglob("*")):
        if path.is_file() and path.name != "MANIFEST":
            digest = hashlib.sha256(path.read_bytes()).hexdigest()
            lines.append(f"{digest}  {path.relative_to(OUT).as_posix()}")
    (OUT / "MANIFEST").write_text("\n".join(lines) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    hyperplane3d()
    triple_union()
    prism()
    extremal_quadratic()
    six_ray_fan()
    tropical_line()
    example_2_3()
    coplanar_cell()
    genus1_cubic()
    double_banana()
    manifest()


if __name__ == "__main__":
    main()
