import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import prism_framework
from troprig import corpus
from troprig.exactq import RatMatrix, rank, same_span
from troprig.rigidity import (
    Framework,
    FrameworkError,
    affine_dimension,
    direction_space,
    direction_space_matches_perp,
    homothety_space,
    is_direction_rigid,
    is_infinitesimally_rigid,
    pebble_game_23,
    perp,
    rigidity_matrix,
    trivial_flexes,
)


def fw(points, edges, dim=2):
    return Framework(dim, {str(i): p for i, p in enumerate(points)}, tuple((str(u), str(v)) for u, v in edges))


def complete(n):
    return list(combinations(range(n), 2))


def laman_sparse(vertices, edges) -> bool:
    """Every vertex subset of size k >= 2 spans at most 2k - 3 edges."""
    for k in range(2, len(vertices) + 1):
        for sub in combinations(vertices, k):
            s = set(sub)
            if sum(u in s and v in s for u, v in edges) > 2 * k - 3:
                return False
    return True


def generic_rank(n, edges, rng, tries=3):
    best = 0
    for _ in range(tries):
        pts = [(rng.randint(-10**6, 10**6), rng.randint(-10**6, 10**6)) for _ in range(n)]
        best = max(best, rank(rigidity_matrix(fw(pts, edges))))
    return best


graphs = st.integers(2, 7).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.sampled_from(complete(n)), unique=True, max_size=len(complete(n))))
)


def test_framework_validation():
    with pytest.raises(FrameworkError):
        fw([(0, 0), (1, 0)], [(0, 0)])
    with pytest.raises(FrameworkError):
        fw([(0, 0), (1, 0)], [(0, 1), (1, 0)])
    with pytest.raises(FrameworkError):
        fw([(0, 0), (1, 0)], [(0, 2)])
    with pytest.raises(FrameworkError):
        Framework(2, {"a": (0, 0, 0)}, ())
    f = fw([(0, 0), (1, 0)], [(1, 0)])
    assert Framework.from_dict(f.to_dict()) == f


def test_rigidity_matrix_layout():
    r = rigidity_matrix(fw([(0, 0), (3, 1)], [(0, 1)]))
    assert r.tolist() == [[-3, -1, 3, 1]]


def test_prism_is_generically_rigid_but_special():
    f = prism_framework()
    r = rigidity_matrix(f)
    assert rank(r) == sympy.Matrix(r.tolist()).rank() == 8
    assert not is_infinitesimally_rigid(f).rigid
    assert pebble_game_23(f.vertex_ids, f.edges)[0]


@pytest.mark.parametrize(
    "points,edges,rigid",
    [
        ([(0, 0)], [], True),
        ([(0, 0), (1, 2)], [(0, 1)], True),
        ([(0, 0), (1, 0), (0, 1)], complete(3), True),
        ([(0, 0), (1, 0), (2, 0)], complete(3), False),
        ([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1), (1, 2), (2, 3), (3, 0)], False),
        ([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], True),
        ([(0, 0), (1, 0), (2, 0)], [(0, 1), (1, 2)], False),
    ],
)
def test_planar_examples(points, edges, rigid):
    assert bool(is_infinitesimally_rigid(fw(points, edges))) is rigid


def test_simplices_in_space():
    tet = fw([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], complete(4), dim=3)
    cert = is_infinitesimally_rigid(tet)
    assert cert.rigid and cert.reason == "simplex"
    tri = fw([(0, 0, 0), (1, 0, 0), (0, 1, 0)], complete(3), dim=3)
    assert is_infinitesimally_rigid(tri).rigid
    # a planar K4 can fold out of its plane
    flat = fw([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)], complete(4), dim=3)
    cert = is_infinitesimally_rigid(flat)
    assert not cert.rigid and cert.flex_dim == 7
    path = fw([(0, 0, 0), (1, 0, 0), (0, 1, 0)], [(0, 1), (1, 2)], dim=3)
    assert not is_infinitesimally_rigid(path).rigid


def test_double_banana_in_the_plane():
    f = corpus.load("double-banana").framework
    rigid, tight = pebble_game_23(f.vertex_ids, f.edges)
    assert rigid and laman_sparse(f.vertex_ids, tight)
    cert = is_infinitesimally_rigid(f)
    assert cert.rigid and cert.rank == 13 == 2 * len(f.vertices) - 3


@settings(max_examples=60, deadline=None)
@given(
    st.integers(2, 3).flatmap(
        lambda d: st.tuples(
            st.just(d),
            st.lists(st.lists(st.integers(-9, 9), min_size=d, max_size=d), min_size=2, max_size=6),
        )
    ),
    st.randoms(use_true_random=False),
)
def test_trivial_flexes_are_flexes(data, rng):
    d, pts = data
    edges = [e for e in complete(len(pts)) if rng.random() < 0.6]
    f = fw([tuple(p) for p in pts], edges, dim=d)
    r = rigidity_matrix(f)
    for v in trivial_flexes(f):
        assert all(x == 0 for x in r.apply(v))
    # a random skew-symmetric map plus translation is also a flex
    skew = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            a = rng.randint(-5, 5)
            skew[i][j], skew[j][i] = a, -a
    t = [rng.randint(-5, 5) for _ in range(d)]
    flex = [sum(skew[i][k] * p[k] for k in range(d)) + t[i] for p in f.vertices.values() for i in range(d)]
    assert all(x == 0 for x in r.apply(flex))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), min_size=2, max_size=6, unique=True),
    st.randoms(use_true_random=False),
)
def test_direction_space_is_perp_kernel(pts, rng):
    edges = [e for e in complete(len(pts)) if rng.random() < 0.6] or [(0, 1)]
    f = fw(pts, edges)
    assert direction_space_matches_perp(f)
    assert rank(rigidity_matrix(perp(f))) == rank(rigidity_matrix(f))
    for h in homothety_space(f):
        assert same_span(direction_space(f), direction_space(f) + [h])


def test_direction_rigidity_examples():
    tri = fw([(0, 0), (2, 0), (0, 3)], complete(3))
    assert is_direction_rigid(tri)
    square = fw([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not is_direction_rigid(square)
    assert is_direction_rigid(fw([(0, 0)], []))
    assert len(direction_space(prism_framework())) == 4
    assert not is_direction_rigid(prism_framework())


def test_direction_rigidity_matches_perp_infinitesimal_rigidity():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(2, 6)
        pts = list({(rng.randint(-6, 6), rng.randint(-6, 6)) for _ in range(n)})
        if len(pts) < 2 or affine_dimension(fw(pts, [])) < 2:
            continue
        edges = [e for e in complete(len(pts)) if rng.random() < 0.7]
        f = fw(pts, edges)
        assert is_direction_rigid(f) == is_infinitesimally_rigid(perp(f)).rigid


def test_pebble_game_examples():
    assert pebble_game_23(["a", "b"], [("a", "b")])[0]
    assert pebble_game_23(range(4), complete(4))[0]
    assert not pebble_game_23(range(4), [(0, 1), (1, 2), (2, 3), (3, 0)])[0]
    f = prism_framework()
    rigid, tight = pebble_game_23(f.vertex_ids, f.edges)
    assert rigid and len(tight) == 9
    # K_{3,3} is Laman-tight
    k33 = [(a, b) for a in range(3) for b in range(3, 6)]
    assert pebble_game_23(range(6), k33)[0]


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_pebble_tight_set_is_laman(g):
    n, edges = g
    rigid, tight = pebble_game_23(range(n), edges)
    if rigid:
        assert len(tight) == 2 * n - 3
        assert set(tight) <= {tuple(sorted(e)) for e in edges}
        assert laman_sparse(list(range(n)), tight)


def test_pebble_game_agrees_with_generic_rank():
    rng = random.Random(2024)
    for trial in range(50):
        n = rng.randint(2, 8)
        edges = [e for e in complete(n) if rng.random() < rng.choice([0.3, 0.5, 0.7])]
        rigid, _ = pebble_game_23(range(n), edges)
        assert rigid == (generic_rank(n, edges, rng) == 2 * n - 3), (n, edges)


def test_rational_coordinates():
    f = fw([(Fraction(1, 2), 0), (0, Fraction(1, 3)), (1, 1)], complete(3))
    assert is_infinitesimally_rigid(f).rigid
    assert isinstance(rigidity_matrix(f), RatMatrix)
