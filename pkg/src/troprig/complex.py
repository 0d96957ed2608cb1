"""Rational polyhedral complexes and their lattice data.

A complex is presented by its maximal faces and ridges.  Each cell carries a
relative-interior witness point and a basis of the linear space parallel to
it; faces list the ridges they contain.  That is all the balancing machinery
needs: the primitive vectors ``z_tau(sigma)`` and the ridge normals are
computed from these bases by integer saturation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Optional, Sequence

from .exactq import (
    RatMatrix,
    _xgcd,
    format_fraction,
    hnf,
    integer_kernel,
    lcm,
    kernel_basis,
    rank,
    solve,
    to_fraction,
)


class ComplexError(ValueError):
    """Raised for malformed complexes or degenerate witness points."""


def _vec(values) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in values)


@dataclass(frozen=True)
class Ridge:
    id: str
    point: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...] = ()
    # Optional user-chosen integer normals x_i(tau); computed when absent.
    normals: Optional[tuple[tuple[int, ...], ...]] = None


@dataclass(frozen=True)
class MaxFace:
    id: str
    point: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...]
    ridges: tuple[str, ...] = ()


@dataclass(frozen=True)
class Complex:
    ambient_dim: int
    dim: int
    ridges: tuple[Ridge, ...]
    faces: tuple[MaxFace, ...]
    dual_graph: Optional[dict] = field(default=None, compare=False)

    def __post_init__(self):
        # canonical ordering: sorted ids
        object.__setattr__(self, "ridges", tuple(sorted(self.ridges, key=lambda r: r.id)))
        object.__setattr__(self, "faces", tuple(sorted(self.faces, key=lambda f: f.id)))

    @property
    def face_ids(self) -> list[str]:
        return [f.id for f in self.faces]

    @property
    def ridge_ids(self) -> list[str]:
        return [r.id for r in self.ridges]

    def face(self, fid: str) -> MaxFace:
        for f in self.faces:
            if f.id == fid:
                return f
        raise KeyError(fid)

    def ridge(self, rid: str) -> Ridge:
        for r in self.ridges:
            if r.id == rid:
                return r
        raise KeyError(rid)

    @property
    def incidence(self) -> dict[str, list[str]]:
        """Ridge id -> ids of the faces containing it (sorted)."""
        inc = {r.id: [] for r in self.ridges}
        for f in self.faces:
            for rid in f.ridges:
                if rid in inc:
                    inc[rid].append(f.id)
        return inc

    def subcomplex(self, face_ids) -> "Complex":
        """Induced complex on a set of maximal faces (ridges they touch)."""
        keep = set(face_ids)
        faces = [f for f in self.faces if f.id in keep]
        used = {rid for f in faces for rid in f.ridges}
        ridges = [r for r in self.ridges if r.id in used]
        return Complex(self.ambient_dim, self.dim, tuple(ridges), tuple(faces))

    def with_normals(self, normals: dict[str, Sequence[Sequence[int]]]) -> "Complex":
        ridges = []
        for r in self.ridges:
            if r.id in normals:
                r = Ridge(r.id, r.point, r.basis, tuple(tuple(int(x) for x in v) for v in normals[r.id]))
            ridges.append(r)
        return Complex(self.ambient_dim, self.dim, tuple(ridges), self.faces, self.dual_graph)

    # --- JSON ------------------------------------------------------------

    @classmethod
    def from_dict(cls, data: dict) -> "Complex":
        try:
            d = int(data["ambient_dim"])
            k = int(data["dim"])
            ridges = []
            for r in data.get("ridges", []):
                normals = r.get("normals")
                ridges.append(
                    Ridge(
                        str(r["id"]),
                        _vec(r["point"]),
                        tuple(_vec(b) for b in r.get("basis", [])),
                        None if normals is None else tuple(tuple(int(x) for x in v) for v in normals),
                    )
                )
            faces = [
                MaxFace(
                    str(f["id"]),
                    _vec(f["point"]),
                    tuple(_vec(b) for b in f["basis"]),
                    tuple(str(x) for x in f.get("ridges", [])),
                )
                for f in data["faces"]
            ]
        except (KeyError, TypeError, ValueError) as exc:
            raise ComplexError(f"malformed complex JSON: {exc}") from exc
        return cls(d, k, tuple(ridges), tuple(faces), data.get("dual_graph"))

    def to_dict(self) -> dict:
        def vec(v):
            return [format_fraction(x) for x in v]

        ridges = []
        for r in self.ridges:
            entry = {"id": r.id, "point": vec(r.point), "basis": [vec(b) for b in r.basis]}
            if r.normals is not None:
                entry["normals"] = [list(v) for v in r.normals]
            ridges.append(entry)
        out = {
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "ridges": ridges,
            "faces": [
                {"id": f.id, "point": vec(f.point), "basis": [vec(b) for b in f.basis], "ridges": list(f.ridges)}
                for f in self.faces
            ],
        }
        if self.dual_graph is not None:
            out["dual_graph"] = self.dual_graph
        return out

    @classmethod
    def load(cls, path) -> "Complex":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


# --- validation ------------------------------------------------------------


@dataclass
class ValidationReport:
    diagnostics: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def add(self, kind: str, where: str, message: str):
        self.diagnostics.append({"kind": kind, "where": where, "message": message})

    def kinds(self) -> set[str]:
        return {d["kind"] for d in self.diagnostics}


def validate(c: Complex) -> ValidationReport:
    report = ValidationReport()
    d, k = c.ambient_dim, c.dim
    if not 1 <= k <= d:
        report.add("dimension", "complex", f"need 1 <= dim <= ambient_dim, got dim={k}, d={d}")
        return report
    if len(set(f.id for f in c.faces)) != len(c.faces) or len(set(r.id for r in c.ridges)) != len(c.ridges):
        report.add("duplicate id", "complex", "face or ridge ids repeat")
    ridge_by_id = {r.id: r for r in c.ridges}

    for cell, want in [(f, k) for f in c.faces] + [(r, k - 1) for r in c.ridges]:
        if len(cell.point) != d or any(len(b) != d for b in cell.basis):
            report.add("dimension", cell.id, f"vectors must have {d} coordinates")
            continue
        if len(cell.basis) != want:
            report.add("basis dimension", cell.id, f"expected {want} basis vectors, got {len(cell.basis)}")
        elif want and rank(list(cell.basis)) != want:
            report.add("degenerate basis", cell.id, "basis vectors are linearly dependent")

    for f in c.faces:
        for rid in f.ridges:
            r = ridge_by_id.get(rid)
            if r is None:
                report.add("unknown ridge", f.id, f"references missing ridge {rid!r}")
                continue
            if not r.basis or len(f.basis) != k or len(r.basis) != k - 1:
                continue
            if rank(list(f.basis) + list(r.basis)) != rank(list(f.basis)):
                report.add("ridge not in face span", f.id, f"span of ridge {rid} is not inside the face span")

    for rid, faces in c.incidence.items():
        if len(faces) < 2:
            report.add("not pure", rid, f"ridge lies in {len(faces)} maximal face(s); need at least two")
    return report


# --- lattices --------------------------------------------------------------


def _clear_denominators(vectors) -> list[list[int]]:
    out = []
    for v in vectors:
        fr = [Fraction(x) for x in v]
        den = 1
        for x in fr:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def saturate_lattice(basis: Sequence[Sequence], ambient_dim: Optional[int] = None) -> list[list[int]]:
    """Z-basis (in Hermite normal form) of ``span_Q(basis) ∩ Z^d``."""
    basis = [list(b) for b in basis]
    if not basis:
        return []
    d = len(basis[0]) if ambient_dim is None else ambient_dim
    if rank(basis) != len(basis):
        raise ComplexError("lattice basis is not linearly independent")
    # The span is cut out by its rational orthogonal complement; the lattice
    # points of the span are the integer kernel of those equations.
    eqs = _clear_denominators(kernel_basis(RatMatrix(basis)))
    if not eqs:
        return [[int(i == j) for j in range(d)] for i in range(d)]
    return integer_kernel(eqs, d)


def _orientation_coefficient(target, ridge_basis, z) -> Optional[Fraction]:
    """Solve ``target = v + mu z`` with v in span(ridge_basis); return mu."""
    cols = list(ridge_basis) + [z]
    m = RatMatrix(list(zip(*cols)))
    sol = solve(m, list(target))
    return None if sol is None else sol[-1]


def _nearest_plane(z: list[int], lattice: list[list[int]]) -> list[int]:
    """Size-reduce ``z`` against a lattice basis (Babai nearest plane)."""
    if not lattice:
        return z
    gs: list[list[Fraction]] = []
    for b in lattice:
        v = [Fraction(x) for x in b]
        for g in gs:
            mu = sum(a * c for a, c in zip(b, g)) / sum(c * c for c in g)
            v = [x - mu * y for x, y in zip(v, g)]
        gs.append(v)
    out = list(z)
    for b, g in reversed(list(zip(lattice, gs))):
        c = floor(sum(a * x for a, x in zip(out, g)) / sum(x * x for x in g) + Fraction(1, 2))
        if c:
            out = [x - c * y for x, y in zip(out, b)]
    return out


def z_vector(c: Complex, tau, sigma) -> list[int]:
    """Primitive generator of ``L_sigma ∩ Z^d`` modulo ``L_tau ∩ Z^d``, pointing into sigma.

    The representative is reduced against the ridge lattice so that output is
    deterministic; every quantity used downstream only depends on it modulo
    ``L_tau``.
    """
    tau = c.ridge(tau) if isinstance(tau, str) else tau
    sigma = c.face(sigma) if isinstance(sigma, str) else sigma
    face_lat = saturate_lattice(sigma.basis, c.ambient_dim)
    ridge_lat = saturate_lattice(tau.basis, c.ambient_dim) if tau.basis else []
    k = len(face_lat)
    if ridge_lat:
        # coordinates of the ridge lattice in the face lattice basis
        fm = RatMatrix(list(zip(*face_lat)))
        coords = []
        for r in ridge_lat:
            sol = solve(fm, r)
            if sol is None:
                raise ComplexError(f"ridge {tau.id} is not contained in face {sigma.id}")
            coords.append([int(x) for x in sol])
        # linear functional on Z^k vanishing on the (saturated) ridge coordinates
        kern = integer_kernel(coords, k)
        if len(kern) != 1:
            raise ComplexError(f"ridge {tau.id} has the wrong dimension for face {sigma.id}")
        psi = kern[0]
    else:
        if k != 1:
            raise ComplexError(f"ridge {tau.id} has the wrong dimension for face {sigma.id}")
        psi = [1]
    # integer combination c with c . psi = 1
    coeffs = [0] * k
    g = 0
    for i, p in enumerate(psi):
        if p == 0:
            continue
        if g == 0:
            g, coeffs[i] = abs(p), (1 if p > 0 else -1)
            continue
        g2, s, t = _xgcd(g, p)
        coeffs = [s * x for x in coeffs]
        coeffs[i] = t
        g = g2
    z = [sum(ci * b[j] for ci, b in zip(coeffs, face_lat)) for j in range(c.ambient_dim)]
    target = [a - b for a, b in zip(sigma.point, tau.point)]
    mu = _orientation_coefficient(target, [list(b) for b in ridge_lat], z)
    if mu is None:
        raise ComplexError(f"witness point of face {sigma.id} is not in the span of ridge {tau.id} plus the face")
    if mu == 0:
        raise ComplexError(f"witness points of face {sigma.id} and ridge {tau.id} do not determine an orientation")
    if mu < 0:
        z = [-x for x in z]
    return _nearest_plane(z, ridge_lat)


def ridge_normals(c: Complex, tau) -> list[list[int]]:
    """``t = d - k + 1`` independent integer vectors orthogonal to the ridge.

    Uses the ridge's explicit ``normals`` when supplied; the standard basis
    when the ridge is a point.
    """
    tau = c.ridge(tau) if isinstance(tau, str) else tau
    d = c.ambient_dim
    t = d - c.dim + 1
    if tau.normals is not None:
        normals = [list(v) for v in tau.normals]
        if len(normals) != t or any(len(v) != d for v in normals):
            raise ComplexError(f"ridge {tau.id}: expected {t} normals of length {d}")
        if rank(normals) != t:
            raise ComplexError(f"ridge {tau.id}: normals are linearly dependent")
        for v in normals:
            for b in tau.basis:
                if sum(Fraction(x) * y for x, y in zip(v, b)) != 0:
                    raise ComplexError(f"ridge {tau.id}: normal {v} is not orthogonal to the ridge")
        return normals
    if not tau.basis:
        return [[int(i == j) for j in range(d)] for i in range(d)]
    eqs = _clear_denominators(tau.basis)
    return [row for row in hnf(integer_kernel(eqs, d))[0] if any(row)]
