"""Shared builders for the test suite: example polynomials, random corpora, small complexes."""

from __future__ import annotations

import random
from fractions import Fraction

from troprig import Complex, Framework, TropicalPolynomial, curve, parse_polynomial

LINE = "x + y + 0"
THREE_TERM = "2x + y^2 + 4"
QUADRATIC = "(−1) + x + y + x y + (−1) y^2 + (−1) x^2"
COPLANAR = "0 + x^2 + y^2 + x^3 y"
PRISM = "0 + x^8 + y^8 + (1) x y + (1) x^5 y + (1) x y^5"
TRIPLE = "(-3) x^3 + (-2) x^2 y + (-2) x y^2 + (-3) y^3 + (-1) x^2 + x y + x + (-1) y^2 + y + 0"
CUBIC = "0 + x^3 + y^3 + (2) x y"

NAMED = {
    "line": LINE,
    "three-term": THREE_TERM,
    "quadratic": QUADRATIC,
    "coplanar-cell": COPLANAR,
    "prism": PRISM,
    "triple": TRIPLE,
    "cubic": CUBIC,
}

PRISM_VERTICES = {"v1": (1, 1), "v2": (5, 1), "v3": (1, 5), "v4": (0, 0), "v5": (8, 0), "v6": (0, 8)}
PRISM_EDGES = [
    ("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v4", "v5"), ("v4", "v6"),
    ("v5", "v6"), ("v1", "v4"), ("v2", "v5"), ("v3", "v6"),
]


def prism_framework() -> Framework:
    return Framework(2, PRISM_VERTICES, tuple(PRISM_EDGES))


def random_polynomial(rng: random.Random, degree: int, coeffs) -> TropicalPolynomial:
    pts = [(i, j) for i in range(degree + 1) for j in range(degree + 1 - i)]
    support = rng.sample(pts, rng.randint(min(3, len(pts)), len(pts)))
    return TropicalPolynomial({p: rng.choice(list(coeffs)) for p in support})


def polynomial_corpus(seed: int = 20240601, n_random: int = 36) -> list[tuple[str, TropicalPolynomial]]:
    """Named examples plus random supports up to degree 6, all non-degenerate.

    Random members cycle through generic integer coefficients, coefficients
    from {-1, 0, 1} (which produce non-triangulated cells) and products of two
    random polynomials (which produce reducible curves).
    """
    rng = random.Random(seed)
    out = [(name, parse_polynomial(text)) for name, text in NAMED.items()]
    i = 0
    while len(out) < len(NAMED) + n_random:
        kind = i % 3
        i += 1
        if kind == 0:
            f = random_polynomial(rng, rng.randint(1, 6), range(-6, 7))
        elif kind == 1:
            f = random_polynomial(rng, rng.randint(2, 6), [0, 0, 0, 1, -1])
        else:
            f = random_polynomial(rng, rng.randint(1, 3), range(-3, 4)) * random_polynomial(
                rng, rng.randint(1, 3), range(-3, 4)
            )
        if len(f.terms) < 2 or curve(f).degenerate:
            continue
        out.append((f"random-{i:02d}", f))
    return out


def rays_complex(directions, ids=None) -> Complex:
    """Rays from the origin in R^2, one maximal face per direction."""
    ids = ids or [f"e{i}" for i in range(len(directions))]
    return Complex.from_dict(
        {
            "ambient_dim": 2,
            "dim": 1,
            "ridges": [{"id": "v", "point": ["0", "0"], "basis": []}],
            "faces": [
                {"id": fid, "point": [str(a), str(b)], "basis": [[str(a), str(b)]], "ridges": ["v"]}
                for fid, (a, b) in zip(ids, directions)
            ],
        }
    )


SIX_RAY_DIRS = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]


def six_ray_fan() -> Complex:
    return rays_complex(SIX_RAY_DIRS)


def random_positive_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 40), rng.randint(1, 12))
