import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import CUBIC, COPLANAR, QUADRATIC, TRIPLE, polynomial_corpus
from troprig.tropcurve import (
    DegenerateCurve,
    PolynomialSyntaxError,
    TropicalPolynomial,
    convex_hull,
    curve,
    dual_subdivision,
    evaluate,
    lattice_length,
    parse_polynomial,
    structure_report,
)

CORPUS = polynomial_corpus(seed=5, n_random=24)
IDS = [n for n, _ in CORPUS]

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
exps = st.tuples(st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exps, coeffs, min_size=1, max_size=8).map(TropicalPolynomial)


def _on_segment(p, a, b):
    cross = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])
    inside = min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    return cross == 0 and inside


# --- parsing ------------------------------------------------------------------


def test_parse_examples():
    assert parse_polynomial("2x + y^2 + 4").terms == {(1, 0): 2, (0, 2): 0, (0, 0): 4}
    assert parse_polynomial(QUADRATIC).terms[(2, 0)] == -1
    assert parse_polynomial("(-3/2) x^2 y").terms == {(2, 1): Fraction(-3, 2)}
    assert parse_polynomial("x ⊕ y ⊕ 0").support == parse_polynomial("x + y + 0").support
    assert parse_polynomial("(1) x + (3) x").terms == {(1, 0): 3}
    assert parse_polynomial("  x   y^2 ").terms == {(1, 2): 0}


@pytest.mark.parametrize("text", ["", "   ", "x +", "+ x", "x + + y", "x*y", "3 + z", "−1 + x", "x (2)", "x^"])
def test_parse_rejects(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial(text)


@settings(max_examples=80, deadline=None)
@given(polys)
def test_print_parse_round_trip(f):
    assert parse_polynomial(str(f)).terms == f.terms


# --- evaluation ------------------------------------------------------------------


def test_evaluate_examples():
    f = parse_polynomial("2x + y^2 + 4")
    assert evaluate(f, (2, 2)) == (4, [(0, 0), (0, 2), (1, 0)])
    assert evaluate(f, (0, 0)) == (4, [(0, 0)])
    assert evaluate(f, (Fraction(5), Fraction(0))) == (7, [(1, 0)])


@settings(max_examples=60, deadline=None)
@given(polys, polys, st.tuples(coeffs, coeffs))
def test_semiring_operations_agree_with_evaluation(f, g, z):
    assert evaluate(f * g, z)[0] == evaluate(f, z)[0] + evaluate(g, z)[0]
    assert evaluate(f + g, z)[0] == max(evaluate(f, z)[0], evaluate(g, z)[0])


# --- subdivision and curve geometry --------------------------------------------------


def test_convex_hull_and_lattice_length():
    assert convex_hull([(0, 0), (2, 0), (1, 0), (0, 2), (1, 1)]) == [(0, 0), (2, 0), (0, 2)]
    assert lattice_length((0, 0), (3, 6)) == 3
    assert lattice_length((1, 1), (2, 3)) == 1


@pytest.mark.parametrize("name,f", CORPUS, ids=IDS)
def test_vertices_are_where_cells_tie(name, f):
    c = curve(f)
    sd = c.subdivision
    for vid, p in c.vertices.items():
        cell = sd.cells[c.cell_of_vertex[vid]]
        assert set(evaluate(f, p)[1]) == set(cell.points)
        assert len(cell.vertices) >= 3


@pytest.mark.parametrize("name,f", CORPUS, ids=IDS)
def test_edges_are_dual_and_perpendicular(name, f):
    c = curve(f)
    for e in c.edges:
        a, b = e.dual
        assert e.direction[0] * (b[0] - a[0]) + e.direction[1] * (b[1] - a[1]) == 0
        assert e.weight == lattice_length(a, b)
        if e.kind == "segment":
            p, q = c.vertices[e.start], c.vertices[e.end]
            probe = tuple((x + y) / 2 for x, y in zip(p, q))
            delta = [y - x for x, y in zip(p, q)]
            # direction is the primitive vector from start to end
            assert delta[0] * e.direction[1] == delta[1] * e.direction[0]
            assert delta[0] * e.direction[0] + delta[1] * e.direction[1] > 0
        else:
            probe = tuple(x + y for x, y in zip(c.vertices[e.start], e.direction))
        winners = set(evaluate(f, probe)[1])
        assert {a, b} <= winners
        assert all(_on_segment(w, a, b) for w in winners)


@pytest.mark.parametrize("name,f", CORPUS, ids=IDS)
def test_combinatorial_counts(name, f):
    c = curve(f)
    sd = c.subdivision
    assert len(c.vertices) == len(sd.cells)
    assert len(c.edges) == len(sd.edges)
    hull = sd.newton_polytope
    assert list(hull) == convex_hull(f.support)
    boundary = 0
    for e in sd.edges:
        on_boundary = any(
            _on_segment(e.a, hull[i], hull[(i + 1) % len(hull)]) and _on_segment(e.b, hull[i], hull[(i + 1) % len(hull)])
            for i in range(len(hull))
        )
        boundary += on_boundary
        assert len(e.cells) == (1 if on_boundary else 2)
    assert sum(e.kind == "ray" for e in c.edges) == boundary
    used = {p for cell in sd.cells for p in cell.vertices}
    # Euler characteristic of a subdivided polygon
    assert len(used) - len(sd.edges) + len(sd.cells) == 1
    # the total ray weight along each hull edge equals its lattice length
    assert sum(e.weight for e in c.edges if e.kind == "ray") == sum(
        lattice_length(hull[i], hull[(i + 1) % len(hull)]) for i in range(len(hull))
    )


@pytest.mark.parametrize("name,f", CORPUS, ids=IDS)
def test_random_points_off_the_curve_select_subdivision_vertices(name, f):
    rng = random.Random(name)
    c = curve(f)
    used = {p for cell in c.subdivision.cells for p in cell.vertices}
    for _ in range(30):
        z = (Fraction(rng.randint(-400, 400), 37), Fraction(rng.randint(-400, 400), 41))
        _, arg = evaluate(f, z)
        if len(arg) == 1:
            assert arg[0] in used


def test_standard_line():
    c = curve(parse_polynomial("x + y + 0"))
    assert list(c.vertices.values()) == [(0, 0)]
    assert sorted(e.direction for e in c.edges) == [(-1, 0), (0, -1), (1, 1)]


def test_quadratic_is_a_triangulation():
    c = curve(parse_polynomial(QUADRATIC))
    assert len(c.subdivision.cells) == 4
    assert all(len(cell.vertices) == 3 for cell in c.subdivision.cells)
    assert len(c.edges) == 9
    assert all(c.degree(v) == 3 for v in c.vertices)


def test_coplanar_points_form_one_cell():
    c = curve(parse_polynomial(COPLANAR))
    assert len(c.subdivision.cells) == 1
    assert len(c.vertices) == 1
    assert sorted(e.weight for e in c.edges) == [1, 1, 2, 2]


def test_interior_point_is_a_bounded_face():
    c = curve(parse_polynomial(CUBIC))
    rep = structure_report(c)
    assert rep["faces"] == 4 and rep["max_face_sides"] == 3
    assert rep["verdict"] == "necessary conditions pass"


def test_triple_union_structure_fails_necessary_conditions():
    rep = structure_report(curve(parse_polynomial(TRIPLE)))
    assert rep["verdict"] == "not extremal"


def test_collinear_support_gives_parallel_lines():
    c = curve(parse_polynomial("0 + (1) x + (-1) x^3"))
    assert c.degenerate and not c.vertices
    assert c.subdivision.degenerate
    lines = [e for e in c.edges if e.kind == "line"]
    assert len(lines) == 2
    f = c.polynomial
    for e in lines:
        a, b = e.dual
        # both dual terms tie along the whole line
        for t in (0, 5, -3):
            z = tuple(p + t * d for p, d in zip(e.anchor, e.direction))
            assert {a, b} <= set(evaluate(f, z)[1])


def test_single_monomial_is_rejected():
    with pytest.raises(DegenerateCurve):
        curve(parse_polynomial("(3) x^2 y"))


def test_to_complex_is_pure_and_balanced():
    from troprig.balance import is_balanced
    from troprig.complex import validate

    for _, f in CORPUS[:10]:
        c = curve(f)
        cx = c.to_complex()
        assert validate(cx).ok
        assert is_balanced(cx, c.weighting())


def test_dual_subdivision_standalone():
    sd = dual_subdivision(parse_polynomial(QUADRATIC))
    assert not sd.degenerate
    assert sorted(sd.vertices) == sorted(parse_polynomial(QUADRATIC).support)
