"""Balance matrices of a complex, balancedness tests and the rank test for extremality."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .complex import Complex, ComplexError, ridge_normals, z_vector
from .exactq import RatMatrix, left_kernel_basis, rank, to_fraction


class NotATropicalVariety(ValueError):
    """The complex carries no strictly positive balanced weighting."""


TOTAL = "total-positive"
PARTIAL = "partial"
UNRESTRICTED = "unrestricted"


@dataclass(frozen=True)
class Weighting:
    """Rational values on the maximal faces of a complex.

    Faces missing from ``values`` are zero.  ``kind`` is checked on
    construction: total-positive weightings are positive everywhere, partial
    ones are nonnegative with at least one zero.
    """

    complex: Complex
    values: Mapping[str, Fraction]
    kind: str = UNRESTRICTED

    def __post_init__(self):
        vals = {fid: to_fraction(v) for fid, v in self.values.items()}
        unknown = set(vals) - set(self.complex.face_ids)
        if unknown:
            raise ValueError(f"weighting names unknown faces: {sorted(unknown)}")
        object.__setattr__(self, "values", vals)
        vec = self.vector()
        if self.kind == TOTAL and not all(x > 0 for x in vec):
            raise ValueError("total-positive weighting must be positive on every face")
        if self.kind == PARTIAL and not (all(x >= 0 for x in vec) and any(x == 0 for x in vec)):
            raise ValueError("partial weighting must be nonnegative with at least one zero")
        if self.kind not in (TOTAL, PARTIAL, UNRESTRICTED):
            raise ValueError(f"unknown weighting kind {self.kind!r}")

    @classmethod
    def from_vector(cls, c: Complex, vec, kind: str = UNRESTRICTED) -> "Weighting":
        return cls(c, dict(zip(c.face_ids, vec)), kind)

    def vector(self) -> list[Fraction]:
        return [self.values.get(fid, Fraction(0)) for fid in self.complex.face_ids]

    @property
    def support(self) -> list[str]:
        return [fid for fid, x in zip(self.complex.face_ids, self.vector()) if x != 0]


@dataclass(frozen=True)
class BalanceMatrices:
    r_tilde: RatMatrix
    lift: RatMatrix  # L(C)
    r: RatMatrix
    face_ids: tuple[str, ...]
    ridge_ids: tuple[str, ...]
    z_vectors: dict
    normals: dict


def build_r(c: Complex) -> BalanceMatrices:
    """Assemble ``R~(C)``, ``L(C)`` and ``R(C) = R~(C) L(C)``.

    Rows follow sorted face ids; column blocks follow sorted ridge ids.
    """
    d = c.ambient_dim
    t = d - c.dim + 1
    faces = c.face_ids
    ridges = c.ridge_ids
    col = {rid: j for j, rid in enumerate(ridges)}
    zs = {}
    r_tilde = [[0] * (d * len(ridges)) for _ in faces]
    for i, f in enumerate(c.faces):
        for rid in f.ridges:
            if rid not in col:
                raise ComplexError(f"face {f.id} references missing ridge {rid!r}")
            z = z_vector(c, rid, f)
            zs[(rid, f.id)] = z
            r_tilde[i][d * col[rid]: d * col[rid] + d] = z
    normals = {r.id: ridge_normals(c, r) for r in c.ridges}
    lift = [[0] * (t * len(ridges)) for _ in range(d * len(ridges))]
    for j, rid in enumerate(ridges):
        for a, x in enumerate(normals[rid]):
            for b in range(d):
                lift[d * j + b][t * j + a] = x[b]
    # R = R~ L computed blockwise: row sigma, block tau holds z . x_i(tau)
    r = [[0] * (t * len(ridges)) for _ in faces]
    for (rid, fid), z in zs.items():
        i = faces.index(fid)
        j = col[rid]
        for a, x in enumerate(normals[rid]):
            r[i][t * j + a] = sum(p * q for p, q in zip(z, x))
    return BalanceMatrices(
        RatMatrix(r_tilde, cols=d * len(ridges)),
        RatMatrix(lift, cols=t * len(ridges)),
        RatMatrix(r, cols=t * len(ridges)),
        tuple(faces),
        tuple(ridges),
        zs,
        normals,
    )


def _r_of(c_or_r):
    if isinstance(c_or_r, BalanceMatrices):
        return c_or_r.r
    if isinstance(c_or_r, RatMatrix):
        return c_or_r
    return build_r(c_or_r).r


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    residuals: dict  # ridge id -> list of t rationals (in the x_i(tau) coordinates)

    def __bool__(self):
        return self.balanced


def is_balanced(c: Complex, w, matrices: Optional[BalanceMatrices] = None) -> BalanceResult:
    """Check ``w^T R(C) = 0`` and report the per-ridge residuals."""
    if not isinstance(w, Weighting):
        w = Weighting(c, dict(w)) if isinstance(w, Mapping) else Weighting.from_vector(c, w)
    bm = matrices or build_r(c)
    t = c.ambient_dim - c.dim + 1
    prod = bm.r.left_apply(w.vector())
    residuals = {rid: prod[t * j: t * j + t] for j, rid in enumerate(bm.ridge_ids)}
    return BalanceResult(all(x == 0 for x in prod), residuals)


def weighting_space_dim(c) -> int:
    r = _r_of(c)
    return r.rows - rank(r)


@dataclass(frozen=True)
class ExtremalityCertificate:
    extremal: bool
    rank: int
    n_faces: int
    kernel_basis: list
    positive_weighting: list

    def to_dict(self) -> dict:
        from .exactq import format_fraction

        return {
            "extremal": self.extremal,
            "rank": self.rank,
            "faces": self.n_faces,
            "weighting_space_dim": self.n_faces - self.rank,
            "kernel_basis": [[format_fraction(x) for x in v] for v in self.kernel_basis],
            "positive_weighting": [format_fraction(x) for x in self.positive_weighting],
        }


def is_extremal(c: Complex, matrices: Optional[BalanceMatrices] = None) -> ExtremalityCertificate:
    """Rank test: extremal iff ``rank R(C) = |E| - 1``.

    Raises :class:`NotATropicalVariety` unless a strictly positive balanced
    weighting exists.
    """
    from .cone import positive_weighting

    bm = matrices or build_r(c)
    pos = positive_weighting(bm.r)
    if pos is None:
        raise NotATropicalVariety("no strictly positive balanced weighting exists")
    rk = rank(bm.r)
    n = bm.r.rows
    return ExtremalityCertificate(rk == n - 1, rk, n, left_kernel_basis(bm.r), pos)


def check_extremal_bound(c: Complex) -> bool:
    """Necessary condition for extremality: ``|E| <= (d-k+1)|V| + 1``."""
    t = c.ambient_dim - c.dim + 1
    return len(c.faces) <= t * len(c.ridges) + 1


def balancing_sum(c: Complex, w: Weighting, ridge_id: str) -> list[Fraction]:
    """Raw ``sum_sigma w(sigma) z_tau(sigma)``; lies in ``L_tau`` iff balanced at tau."""
    total = [Fraction(0)] * c.ambient_dim
    vals = dict(zip(c.face_ids, w.vector()))
    for fid in c.incidence[ridge_id]:
        z = z_vector(c, ridge_id, fid)
        total = [a + vals[fid] * b for a, b in zip(total, z)]
    return total

