"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction` (always in lowest terms with a
positive denominator).  :class:`RatMatrix` is an immutable dense matrix of
fractions; integer lattice work (Hermite normal form, saturation) operates on
plain lists of Python ints.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Rational = Fraction


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string.  Floats are rejected."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip().replace("−", "-")
        if not text or "." in text or "e" in text.lower():
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b) if a and b else max(abs(a), abs(b))


def primitive(vec: Sequence) -> list[int]:
    """Scale a rational vector to the primitive integer vector in its direction."""
    fr = [Fraction(x) for x in vec]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return [x // g for x in ints]


def dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


class RatMatrix:
    """Immutable dense matrix over Q, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: Optional[int] = None):
        grid = tuple(tuple(to_fraction(x) for x in row) for row in data)
        if grid:
            widths = {len(r) for r in grid}
            if len(widths) != 1:
                raise ValueError("ragged matrix rows")
            width = widths.pop()
            if cols is not None and cols != width:
                raise ValueError("column count mismatch")
            cols = width
        elif cols is None:
            cols = 0
        self.rows = len(grid)
        self.cols = cols
        self._data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for row in self._data for x in row)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_fraction(x) for x in r) for r in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._data), cols=self.rows) if self.rows else RatMatrix.zeros(self.cols, 0)

    T = property(transpose)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            out.append([sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in ocols])
        return RatMatrix(out, cols=other.cols)

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product ``self @ vec``."""
        return [dot(r, vec) for r in self._data]

    def left_apply(self, vec: Sequence) -> list[Fraction]:
        """Row vector times matrix, ``vec^T @ self``."""
        out = [Fraction(0)] * self.cols
        for coeff, r in zip(vec, self._data):
            if coeff:
                for j, x in enumerate(r):
                    if x:
                        out[j] += coeff * x
        return out

    def select_rows(self, idx: Sequence[int]) -> "RatMatrix":
        return RatMatrix([self._data[i] for i in idx], cols=self.cols)

    def hstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RatMatrix([a + b for a, b in zip(self._data, other._data)], cols=self.cols + other.cols)

    def vstack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RatMatrix(self._data + other._data, cols=self.cols)


def _as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    # Row scaling by a positive integer leaves rank and row space unchanged.
    out = []
    for r in m:
        den = 1
        for x in r:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in r])
    return out


def rank(m) -> int:
    """Rank over Q via fraction-free (Bareiss) elimination."""
    m = _as_matrix(m)
    a = _integer_rows(m)
    nrows, ncols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            ai = a[i]
            f = ai[c]
            ar = a[r]
            for j in range(c + 1, ncols):
                ai[j] = (p * ai[j] - f * ar[j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r


def rref(m) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and pivot columns (first nonzero pivoting)."""
    m = _as_matrix(m)
    a = [list(r) for r in m]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return RatMatrix(a, cols=ncols), pivots


def kernel_basis(m) -> list[list[Fraction]]:
    """Basis of the right kernel ``{x : m x = 0}``.

    One vector per free column, with that free coordinate equal to 1 and the
    other free coordinates zero; the result is canonical for a given ``m``.
    """
    m = _as_matrix(m)
    red, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i, f]
        basis.append(v)
    return basis


def left_kernel_basis(m) -> list[list[Fraction]]:
    """Basis of ``{x : x^T m = 0}`` (canonical, see :func:`kernel_basis`)."""
    m = _as_matrix(m)
    if m.rows == 0:
        return []
    if m.cols == 0:
        return [[Fraction(int(i == j)) for j in range(m.rows)] for i in range(m.rows)]
    return kernel_basis(m.transpose())


def solve(m, b: Sequence) -> Optional[list[Fraction]]:
    """A solution of ``m x = b`` with free variables set to zero, or ``None``."""
    m = _as_matrix(m)
    if len(b) != m.rows:
        raise ValueError("right-hand side length must equal the row count")
    aug = RatMatrix([list(r) + [to_fraction(bi)] for r, bi in zip(m, b)], cols=m.cols + 1)
    red, pivots = rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for i, pc in enumerate(pivots):
        x[pc] = red[i, m.cols]
    return x


def span_contains(basis: Sequence[Sequence], vec: Sequence) -> bool:
    if not basis:
        return all(x == 0 for x in vec)
    return rank(list(basis)) == rank(list(basis) + [list(vec)])


def same_span(a: Sequence[Sequence], b: Sequence[Sequence]) -> bool:
    ra = rank(a) if a else 0
    rb = rank(b) if b else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    return rank(list(a) + list(b)) == ra


def determinant(m) -> Fraction:
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m]
    n = m.rows
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


# --- integer lattices -------------------------------------------------------


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf(m: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ m == H``.  ``H`` is in
    row echelon form, pivots are positive, entries above a pivot lie in
    ``[0, pivot)`` and zero rows are at the bottom.
    """
    a = [[int(x) for x in row] for row in m]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    for row in a:
        if len(row) != ncols:
            raise ValueError("ragged matrix rows")
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]

    def combine(i, j, s, t, p, q):
        # rows (i, j) <- (s*ri + t*rj, p*ri + q*rj); caller guarantees s*q - t*p = +-1
        for mat in (a, u):
            ri, rj = mat[i], mat[j]
            mat[i] = [s * x + t * y for x, y in zip(ri, rj)]
            mat[j] = [p * x + q * y for x, y in zip(ri, rj)]

    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r + 1, nrows):
            if a[i][c] == 0:
                continue
            x, y = a[r][c], a[i][c]
            g, s, t = _xgcd(x, y)
            combine(r, i, s, t, -y // g, x // g)
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        p = a[r][c]
        for i in range(r):
            q = a[i][c] // p
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        r += 1
    return a, u


def integer_kernel(m: Sequence[Sequence[int]], ncols: Optional[int] = None) -> list[list[int]]:
    """Z-basis of ``{x in Z^n : m x = 0}``, in Hermite normal form."""
    rows = [[int(x) for x in r] for r in m]
    n = len(rows[0]) if rows else ncols
    if n is None:
        raise ValueError("column count unknown for an empty matrix")
    if not rows:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    # HNF of m^T: rows of U that map to zero rows of H span the integer kernel.
    mt = [list(col) for col in zip(*rows)]
    h, u = hnf(mt)
    kern = [u[i] for i in range(n) if not any(h[i])]
    if not kern:
        return []
    return [row for row in hnf(kern)[0] if any(row)]
