"""Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest, where
the lines are repeated in the terminal summary.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager

from helpers import polynomial_corpus, random_positive_rational
from troprig import corpus, curve
from troprig.balance import Weighting, build_r, check_extremal_bound, is_balanced, is_extremal
from troprig.cone import enumerate_vertices_bruteforce, is_simplex, weight_polytope
from troprig.decompose import decompose, unique_decomposition, verify_decomposition
from troprig.exactq import kernel_basis, left_kernel_basis, rank, same_span
from troprig.reciprocal import build_reciprocal, dual_graph, weighting_from_diagram
from troprig.rigidity import (
    direction_space,
    is_direction_rigid,
    is_infinitesimally_rigid,
    pebble_game_23,
    perp,
    rigidity_matrix,
)

RESULTS: dict[int, str] = {}
CHECK = corpus.CHECKS


def _report(n: int, ok: bool, detail: str):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


@contextmanager
def _clock(times: list):
    t0 = time.perf_counter()
    yield
    times.append(time.perf_counter() - t0)


def _fixture_equal(fx, key) -> bool:
    return CHECK[key](fx) == fx.checks[key]


# --- 1 -------------------------------------------------------------------------------


def test_criterion_1_matrix_reproduction():
    times: list = []
    problems = []
    with _clock(times):
        fx = corpus.load("hyperplane3d")
        if not (_fixture_equal(fx, "r") and _fixture_equal(fx, "r_tilde")):
            problems.append("hyperplane3d R")
        if rank(build_r(fx.complex).r) != 5:
            problems.append("hyperplane3d rank")
    with _clock(times):
        fx = corpus.load("prism")
        if not _fixture_equal(fx, "rigidity_matrix"):
            problems.append("prism R(G,p)")
        if rank(rigidity_matrix(fx.framework)) != 8:
            problems.append("prism rank")
    with _clock(times):
        fx = corpus.load("triple-union")
        r = build_r(fx.complex).r
        if not _fixture_equal(fx, "r"):
            problems.append("triple-union R")
        if rank(r) != 12:
            problems.append("triple-union rank")
        if not same_span(left_kernel_basis(r), fx.checks["left_kernel_span"]):
            problems.append("triple-union left kernel")
    slow = [round(t, 3) for t in times if t >= 1.0]
    ok = not problems and not slow
    _report(1, ok, f"matrices and ranks exact; timings {[round(t, 3) for t in times]} s" + (f"; {problems}" if problems else ""))


# --- 2 -------------------------------------------------------------------------------


def test_criterion_2_extremality_verdicts():
    times: list = []
    got = {}

    def cert(name):
        fx = corpus.load(name)
        c = fx.complex
        with _clock(times):
            ce = is_extremal(c)
        return ce.extremal, ce.n_faces - ce.rank

    got["hyperplane3d"] = cert("hyperplane3d")
    got["extremal-quadratic"] = cert("extremal-quadratic")
    got["prism"] = cert("prism")
    got["triple-union"] = cert("triple-union")
    got["six-ray-fan"] = cert("six-ray-fan")
    want = {
        "hyperplane3d": (True, 1),
        "extremal-quadratic": (True, 1),
        "prism": (False, None),
        "triple-union": (False, 3),
        "six-ray-fan": (False, 4),
    }
    ok = all(got[k][0] == w[0] and (w[1] is None or got[k][1] == w[1]) for k, w in want.items())
    ok = ok and all(t < 1.0 for t in times)
    _report(2, ok, f"verdicts {got}; slowest {max(times):.3f} s")


# --- 3 -------------------------------------------------------------------------------


def test_criterion_3_decomposition():
    t0 = time.perf_counter()
    tu = corpus.load("triple-union")
    dec = decompose(tu.complex)
    supports = sorted(sorted(s) for s in dec.supports())
    tu_ok = len(dec.parts) == 3 and dec.unique is True and supports == tu.checks["decomposition_supports"]
    tu_vertices = len(enumerate_vertices_bruteforce(tu.complex))

    e56 = corpus.load("six-ray-fan").complex
    dec56 = decompose(e56)
    e56_ok = len(dec56.parts) == 2 and verify_decomposition(e56, dec56.parts) and unique_decomposition(e56) is None
    e56_vertices = len(enumerate_vertices_bruteforce(e56))
    elapsed = time.perf_counter() - t0
    ok = tu_ok and e56_ok and tu_vertices == 3 and e56_vertices == 5 and elapsed < 5
    _report(
        3,
        ok,
        f"triple-union {len(dec.parts)} parts unique={dec.unique}, six-ray-fan {len(dec56.parts)} parts; "
        f"oracle vertices {tu_vertices}/{e56_vertices}; {elapsed:.2f} s",
    )


# --- 4 -------------------------------------------------------------------------------


def _theorem_corpus():
    polys = polynomial_corpus(seed=20240601, n_random=36)
    for name in corpus.names():
        fx = corpus.load(name)
        if fx.polynomial is not None and not fx.curve.degenerate:
            polys.append((f"fixture-{name}", fx.polynomial))
    return polys


def test_criterion_4_main_theorem_loop():
    t0 = time.perf_counter()
    polys = _theorem_corpus()
    disagreements = []
    tally = {True: 0, False: 0}
    for name, f in polys:
        c = curve(f)
        ext = is_extremal(c.to_complex()).extremal
        fw = build_reciprocal(dual_graph(c), c.weighting()).framework
        dr = is_direction_rigid(fw)
        ir = is_infinitesimally_rigid(fw).rigid
        tally[ext] += 1
        if not ext == dr == ir:
            disagreements.append((name, str(f), ext, dr, ir))
    elapsed = time.perf_counter() - t0
    ok = len(polys) >= 30 and not disagreements and elapsed < 60
    _report(
        4,
        ok,
        f"{len(polys)} polynomials ({tally[True]} extremal, {tally[False]} not), "
        f"{len(disagreements)} disagreements, {elapsed:.2f} s" + (f"; {disagreements[:3]}" if disagreements else ""),
    )


# --- 5 -------------------------------------------------------------------------------


def _random_invertible(rng, t):
    while True:
        m = [[rng.randint(-3, 3) for _ in range(t)] for _ in range(t)]
        if rank(m) == t:
            return m


def _complex_fixtures():
    out = []
    for name in corpus.names():
        fx = corpus.load(name)
        if fx.complex is not None:
            out.append((name, fx.complex))
    return out


def _planar_frameworks(polys):
    out = []
    for name in corpus.names():
        fw = corpus.load(name).framework
        if fw is not None and fw.dim == 2:
            out.append((name, fw))
    for name, f in polys:
        c = curve(f)
        out.append((name, build_reciprocal(dual_graph(c), c.weighting()).framework))
    return out


def test_criterion_5_property_suites():
    rng = random.Random(515)
    polys = _theorem_corpus()
    failures = []

    # (a) curve weightings are balanced
    for name, f in polys:
        c = curve(f)
        cx = c.to_complex()
        if not is_balanced(cx, Weighting(cx, c.weighting())):
            failures.append(f"a:{name}")

    # (b) weighting -> diagram -> weighting round trip
    trips = 0
    targets = [(name, curve(f)) for name, f in polys]
    while trips < 120:
        for name, c in targets:
            cx = c.to_complex()
            verts = enumerate_vertices_bruteforce(cx)
            coeffs = [random_positive_rational(rng) for _ in verts]
            w = {fid: sum(a * v[i] for a, v in zip(coeffs, verts)) for i, fid in enumerate(cx.face_ids)}
            if weighting_from_diagram(build_reciprocal(dual_graph(c), w)) != dict(sorted(w.items())):
                failures.append(f"b:{name}")
            trips += 1
    hc = corpus.load("hyperplane3d").complex
    w = dict(zip(hc.face_ids, is_extremal(hc).positive_weighting))
    if weighting_from_diagram(build_reciprocal(dual_graph(hc), w)) != dict(sorted(w.items())):
        failures.append("b:hyperplane3d")
    trips += 1

    # (c) the left kernel does not depend on the chosen ridge normals
    normal_trials = 0
    for name, c in _complex_fixtures():
        base = left_kernel_basis(build_r(c).r)
        bm = build_r(c)
        t = c.ambient_dim - c.dim + 1
        for _ in range(5):
            new = {}
            for rid in c.ridge_ids:
                m = _random_invertible(rng, t)
                old = bm.normals[rid]
                new[rid] = [[sum(m[i][k] * old[k][j] for k in range(t)) for j in range(c.ambient_dim)] for i in range(t)]
            if not same_span(left_kernel_basis(build_r(c.with_normals(new)).r), base):
                failures.append(f"c:{name}")
            normal_trials += 1

    # (d) perpendicular duality on planar frameworks
    frameworks = _planar_frameworks(polys)
    for name, fw in frameworks:
        rp = rigidity_matrix(perp(fw))
        if rank(rp) != rank(rigidity_matrix(fw)) or not same_span(direction_space(fw), kernel_basis(rp)):
            failures.append(f"d:{name}")

    # (e) extremal fixtures satisfy the face-count bound
    bounded = 0
    for name, c in _complex_fixtures():
        if is_extremal(c).extremal:
            bounded += 1
            if not check_extremal_bound(c):
                failures.append(f"e:{name}")

    ok = not failures and trips >= 100
    _report(
        5,
        ok,
        f"(a) {len(polys)} curves, (b) {trips} round trips, (c) {normal_trials} normal choices, "
        f"(d) {len(frameworks)} frameworks, (e) {bounded} extremal fixtures; failures {failures}",
    )


# --- 6 -------------------------------------------------------------------------------


def test_criterion_6_prism_witness():
    fx = corpus.load("prism")
    dg = dual_graph(fx.curve)
    pebble, _ = pebble_game_23(dg.regions, dg.graph_edges)
    fw_pebble, _ = pebble_game_23(fx.framework.vertex_ids, fx.framework.edges)
    extremal = is_extremal(fx.curve.to_complex()).extremal
    ok = pebble and fw_pebble and extremal is False
    _report(6, ok, f"pebble game rigid={pebble}, extremal={extremal}")


# --- 7 -------------------------------------------------------------------------------


def test_criterion_7_algorithm_oracle_agreement():
    instances = [(name, c) for name, c in _complex_fixtures()]
    instances += [(name, curve(f).to_complex()) for name, f in _theorem_corpus()]
    instances = [(n, c) for n, c in instances if len(c.faces) <= 20]
    mismatches = []
    simplices = 0
    for name, c in instances:
        r = build_r(c).r
        verts = enumerate_vertices_bruteforce(r)
        dec = decompose(c)
        got = [tuple(w.vector()) for _, w in dec.parts]
        if not set(got) <= set(verts) or not verify_decomposition(c, dec.parts):
            mismatches.append(name)
        if is_simplex(weight_polytope(r)):
            simplices += 1
            if set(got) != set(verts):
                mismatches.append(f"{name} (simplex)")
    _report(
        7,
        not mismatches and len(instances) >= 30,
        f"{len(instances)} instances with <= 20 faces ({simplices} simplices), mismatches {mismatches}",
    )


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for fn in tests:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
