"""The cone W(C) of nonnegative balanced weightings and its slice P(C).

``P(C) = {x >= 0 : x^T R(C) = 0, sum(x) = 1}``.  Vertices are found with an
exact two-phase simplex method (Bland's rule); a brute-force enumeration over
kernel coordinates serves as an independent oracle at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .balance import BalanceMatrices, Weighting, build_r, is_extremal
from .complex import Complex
from .exactq import RatMatrix, kernel_basis, left_kernel_basis, rank, rref

DEFAULT_LIMIT = 10**6


class EnumerationLimitExceeded(RuntimeError):
    pass


# --- exact simplex -------------------------------------------------------------


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: Optional[list[Fraction]] = None
    value: Optional[Fraction] = None
    basis: list[int] = field(default_factory=list)


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int):
        inv = 1 / self.rows[r][c]
        self.rows[r] = [x * inv for x in self.rows[r]]
        self.rhs[r] *= inv
        pr, pb = self.rows[r], self.rhs[r]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [x - f * y for x, y in zip(row, pr)]
                self.rhs[i] -= f * pb
        self.basis[r] = c

    def optimize(self, cost: Sequence[Fraction], allowed: int) -> str:
        """Maximize ``cost . x`` over columns ``< allowed`` (Bland's rule)."""
        while True:
            cb = [cost[j] for j in self.basis]
            entering = None
            for j in range(allowed):
                if j in self.basis:
                    continue
                red = sum((cb[i] * row[j] for i, row in enumerate(self.rows) if row[j]), Fraction(0)) - cost[j]
                if red < 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self.pivot(best[1], entering)


def linprog_eq(cost: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """Maximize ``cost . x`` subject to ``a_eq x = b_eq`` and ``x >= 0``, exactly."""
    n = len(cost)
    cost = [Fraction(x) for x in cost]
    if not a_eq:
        if any(c > 0 for c in cost):
            return LPResult("unbounded")
        return LPResult("optimal", [Fraction(0)] * n, Fraction(0))
    aug = RatMatrix([list(r) + [b] for r, b in zip(a_eq, b_eq)], cols=n + 1)
    red, pivots = rref(aug)
    if n in pivots:
        return LPResult("infeasible")
    rows, rhs = [], []
    for i in range(len(pivots)):
        r = list(red.row(i))
        if r[n] < 0:
            r = [-x for x in r]
        rows.append(r[:n])
        rhs.append(r[n])
    m = len(rows)
    if m == 0:
        return linprog_eq(cost, [], [])
    # phase 1 with artificial columns n .. n+m-1
    tab = _Tableau(
        [row + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(rows)],
        rhs,
        list(range(n, n + m)),
    )
    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    tab.optimize(phase1, n + m)
    if any(tab.rhs[i] != 0 for i, b in enumerate(tab.basis) if b >= n):
        return LPResult("infeasible")
    for i in range(m):
        if tab.basis[i] >= n:
            j = next((j for j in range(n) if tab.rows[i][j] != 0 and j not in tab.basis), None)
            if j is None:
                raise ArithmeticError("redundant row survived elimination")
            tab.pivot(i, j)
    tab.rows = [row[:n] for row in tab.rows]
    status = tab.optimize(cost, n)
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        x[b] = tab.rhs[i]
    return LPResult("optimal", x, sum((c * v for c, v in zip(cost, x)), Fraction(0)), list(tab.basis))


# --- cone and polytope -----------------------------------------------------------


def _r(target) -> RatMatrix:
    if isinstance(target, RatMatrix):
        return target
    if isinstance(target, BalanceMatrices):
        return target.r
    if isinstance(target, (WeightCone, WeightPolytope)):
        return target.r
    return build_r(target).r


@dataclass(frozen=True)
class WeightCone:
    r: RatMatrix
    kernel_basis: list
    complex: Optional[Complex] = None

    @property
    def dim(self) -> int:
        return len(self.kernel_basis)


@dataclass(frozen=True)
class WeightPolytope:
    r: RatMatrix
    vertices: list
    complex: Optional[Complex] = None

    @property
    def dim(self) -> int:
        if not self.vertices:
            return -1
        v0 = self.vertices[0]
        diffs = [[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]
        return rank(diffs) if diffs else 0


def weight_cone(c) -> WeightCone:
    r = _r(c)
    return WeightCone(r, left_kernel_basis(r), c if isinstance(c, Complex) else None)


def positive_weighting(target) -> Optional[list[Fraction]]:
    """A balanced weighting with every value >= 1, or ``None`` if none is strictly positive."""
    r = _r(target)
    m = r.rows
    if m == 0:
        return None
    rt = r.transpose()
    # x = y + 1 with y >= 0 and R^T y = -R^T 1
    b = [-sum(row, Fraction(0)) for row in rt]
    res = linprog_eq([0] * m, [list(row) for row in rt], b)
    if res.status != "optimal":
        return None
    return [y + 1 for y in res.x]


def find_vertex(target) -> Optional[list[Fraction]]:
    """A vertex of P(C) via the simplex method, or ``None`` when P(C) is empty.

    Objective: maximize ``sum_i i * x_i`` (1-based face index).  Any basic
    feasible solution of the standard-form system is a vertex.
    """
    r = _r(target)
    m = r.rows
    if m == 0:
        return None
    a_eq = [list(row) for row in r.transpose()] + [[1] * m]
    b_eq = [0] * r.cols + [1]
    res = linprog_eq(list(range(1, m + 1)), a_eq, b_eq)
    if res.status != "optimal":
        return None
    return res.x


def is_vertex(r: RatMatrix, x: Sequence[Fraction]) -> bool:
    """``x`` is a vertex of P(C): feasible, and unique in P(C) with its zero set."""
    if any(v < 0 for v in x) or sum(x) != 1:
        return False
    if any(v != 0 for v in r.left_apply(x)):
        return False
    support = [i for i, v in enumerate(x) if v != 0]
    sub = r.select_rows(support)
    return sub.rows - rank(sub) == 1


def _normalize(vec) -> tuple[Fraction, ...]:
    s = sum(vec)
    return tuple(Fraction(v) / s for v in vec)


def enumerate_vertices_bruteforce(target, limit: int = DEFAULT_LIMIT) -> list[tuple[Fraction, ...]]:
    """All vertices of P(C), sorted lexicographically.

    Works in kernel coordinates: with ``n = dim ker R(C)^T``, every vertex is
    the unique normalized kernel vector vanishing on some set of ``n - 1``
    coordinates.  All such sets are tried; ``limit`` caps the number of
    candidate sets examined.
    """
    r = _r(target)
    basis = left_kernel_basis(r)
    n = len(basis)
    m = r.rows
    if n == 0:
        return []
    found = set()
    count = 0
    for zeros in combinations(range(m), n - 1):
        count += 1
        if count > limit:
            raise EnumerationLimitExceeded(f"more than {limit} candidate active sets")
        if zeros:
            sys_rows = [[basis[k][z] for k in range(n)] for z in zeros]
            kern = kernel_basis(sys_rows)
            if len(kern) != 1:
                continue
            coeffs = kern[0]
        else:
            coeffs = [Fraction(1)]
        y = [sum((coeffs[k] * basis[k][i] for k in range(n)), Fraction(0)) for i in range(m)]
        if all(v >= 0 for v in y) and any(v > 0 for v in y):
            found.add(_normalize(y))
        elif all(v <= 0 for v in y) and any(v < 0 for v in y):
            found.add(_normalize([-v for v in y]))
    return sorted(found)


def weight_polytope(c, limit: int = DEFAULT_LIMIT) -> WeightPolytope:
    r = _r(c)
    return WeightPolytope(r, enumerate_vertices_bruteforce(r, limit), c if isinstance(c, Complex) else None)


def is_simplex(p: WeightPolytope) -> bool:
    return bool(p.vertices) and len(p.vertices) == p.dim + 1


def extremal_subvarieties(c: Complex, limit: int = DEFAULT_LIMIT) -> list[tuple[list[str], Weighting]]:
    """One (support, weighting) pair per vertex of P(C)."""
    out = []
    for v in enumerate_vertices_bruteforce(c, limit):
        w = Weighting.from_vector(c, v)
        out.append((w.support, w))
    return out


def support_is_extremal(c: Complex, support: Sequence[str]) -> bool:
    return is_extremal(c.subcomplex(support)).extremal
